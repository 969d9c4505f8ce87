#pragma once

// Symmetric 2-tensors on R^n (orthonormal frame, so the metric is the
// identity matrix) and the deterministic orthonormal basis of the traceless
// subspace.  Inner products are full contractions <A,B> = sum_ij A_ij B_ij,
// with no combinatorial weights; every downstream constant is locked to this
// convention and the identity suite validates it.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace curvop {

inline int traceless_sym2_dim(int n) { return (n + 2) * (n - 1) / 2; }

class Sym2 {
public:
    Sym2() = default;
    explicit Sym2(int n, double value = 0.0) : n_(n), data_(std::size_t(n) * n, value) {}

    static Sym2 metric(int n) {
        Sym2 g(n);
        for (int i = 0; i < n; ++i) g(i, i) = 1.0;
        return g;
    }

    double& operator()(int i, int j) { return data_[std::size_t(i) * n_ + j]; }
    double operator()(int i, int j) const { return data_[std::size_t(i) * n_ + j]; }

    int dim() const { return n_; }

    double trace() const {
        double t = 0.0;
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    double max_asymmetry() const {
        double worst = 0.0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                worst = std::max(worst, std::fabs((*this)(i, j) - (*this)(j, i)));
        return worst;
    }

    Sym2& operator+=(const Sym2& o) {
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Sym2& operator-=(const Sym2& o) {
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Sym2& operator*=(double c) {
        for (double& v : data_) v *= c;
        return *this;
    }
    friend Sym2 operator+(Sym2 a, const Sym2& b) { return a += b; }
    friend Sym2 operator-(Sym2 a, const Sym2& b) { return a -= b; }
    friend Sym2 operator*(double c, Sym2 a) { return a *= c; }

private:
    int n_ = 0;
    std::vector<double> data_;
};

inline double inner(const Sym2& a, const Sym2& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("Sym2 inner: dimension mismatch");
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) s += a(i, j) * b(i, j);
    return s;
}

inline double norm_sq(const Sym2& a) { return inner(a, a); }

// Ordered orthonormal basis of the traceless symmetric 2-tensors: the
// n(n-1)/2 off-diagonal pairs (e_i (x) e_j + e_j (x) e_i)/sqrt(2) in
// lexicographic order, followed by n-1 traceless diagonal tensors
// diag(1,...,1,-k,0,...,0)/sqrt(k(k+1)) (k leading ones).
class Sym2Basis {
public:
    explicit Sym2Basis(int n) : n_(n) {
        if (n < 2) throw std::invalid_argument("Sym2Basis: dimension must be >= 2");
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Sym2 e(n);
                e(i, j) = e(j, i) = inv_sqrt2;
                elements_.push_back(e);
            }
        for (int k = 1; k < n; ++k) {
            Sym2 d(n);
            const double scale = 1.0 / std::sqrt(double(k) * (k + 1));
            for (int i = 0; i < k; ++i) d(i, i) = scale;
            d(k, k) = -double(k) * scale;
            elements_.push_back(d);
        }
    }

    int dim() const { return n_; }
    int size() const { return int(elements_.size()); }
    const Sym2& operator[](int j) const { return elements_[std::size_t(j)]; }

    // Linear combination sum_j coeff(j) * basis[j]; used to rotate the basis
    // into an eigenbasis of the second-kind operator.
    template <typename CoeffFn>
    Sym2 combine(CoeffFn coeff) const {
        Sym2 out(n_);
        for (int j = 0; j < size(); ++j) {
            const double c = coeff(j);
            if (c == 0.0) continue;
            const Sym2& e = elements_[std::size_t(j)];
            for (int a = 0; a < n_; ++a)
                for (int b = 0; b < n_; ++b) out(a, b) += c * e(a, b);
        }
        return out;
    }

private:
    int n_;
    std::vector<Sym2> elements_;
};

} // namespace curvop
