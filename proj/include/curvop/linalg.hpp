#pragma once

// Small dense linear algebra: square symmetric matrices and a cyclic Jacobi
// eigensolver.  Matrices here are at most a few hundred rows (N = (n+2)(n-1)/2
// with n <= 12 or so), which Jacobi handles accurately without dependencies.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace curvop {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double value = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, value) {}

    static Matrix identity(std::size_t m) {
        Matrix I(m, m);
        for (std::size_t i = 0; i < m; ++i) I(i, i) = 1.0;
        return I;
    }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double max_asymmetry() const {
        double worst = 0.0;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                worst = std::max(worst, std::fabs((*this)(i, j) - (*this)(j, i)));
        return worst;
    }

    double trace() const {
        double t = 0.0;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    double frob_norm() const {
        double s = 0.0;
        for (double v : data_) s += v * v;
        return std::sqrt(s);
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

struct EighResult {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column j is the eigenvector for values[j]
};

// Cyclic Jacobi on a symmetric matrix; converges when the off-diagonal
// Frobenius norm drops below 1e-13 * ||M||.
inline EighResult jacobi_eigh(const Matrix& M_in, double rel_tol = 1e-13,
                              int max_sweeps = 100) {
    const std::size_t m = M_in.rows();
    if (m != M_in.cols()) throw std::invalid_argument("jacobi_eigh: matrix not square");
    Matrix A = M_in;
    // Jacobi rotations assume exact symmetry; fold in any rounding skew first
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const double avg = 0.5 * (A(i, j) + A(j, i));
            A(i, j) = A(j, i) = avg;
        }
    Matrix V = Matrix::identity(m);
    const double norm = std::max(A.frob_norm(), 1e-300);

    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) s += 2.0 * A(i, j) * A(i, j);
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_norm() <= rel_tol * norm) break;
        for (std::size_t p = 0; p + 1 < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                const double apq = A(p, q);
                if (std::fabs(apq) <= 1e-300) continue;
                const double app = A(p, p), aqq = A(q, q);
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0)
                                     ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                     : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t k = 0; k < m; ++k) {
                    const double akp = A(k, p), akq = A(k, q);
                    A(k, p) = c * akp - s * akq;
                    A(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < m; ++k) {
                    const double apk = A(p, k), aqk = A(q, k);
                    A(p, k) = c * apk - s * aqk;
                    A(q, k) = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < m; ++k) {
                    const double vkp = V(k, p), vkq = V(k, q);
                    V(k, p) = c * vkp - s * vkq;
                    V(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return A(a, a) < A(b, b); });

    EighResult out;
    out.values.resize(m);
    out.vectors = Matrix(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        out.values[j] = A(order[j], order[j]);
        for (std::size_t i = 0; i < m; ++i) out.vectors(i, j) = V(i, order[j]);
    }
    return out;
}

inline std::vector<double> jacobi_eigvals(const Matrix& M) {
    return jacobi_eigh(M).values;
}

} // namespace curvop
