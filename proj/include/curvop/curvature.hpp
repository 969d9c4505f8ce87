#pragma once

// Algebraic curvature tensors: dense rank-4 arrays with the curvature
// symmetries, the Kulkarni-Nomizu product, Ricci/scalar contractions, the
// orthogonal projection killing the fully-antisymmetric part, and the Weyl
// decomposition.  Sign convention: the constant-curvature model is
// R = (kappa/2) g^g with R[0][1][0][1] = kappa, and ricci[j][l] is the
// first-third contraction, so R = W + Ric^g/(n-2) - Scal g^g/(2(n-1)(n-2))
// holds verbatim and the round sphere has Scal = n(n-1)kappa.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "sym2.hpp"

namespace curvop {

class AlgCurvature {
public:
    AlgCurvature() = default;
    explicit AlgCurvature(int n) : n_(n), data_(std::size_t(n) * n * n * n, 0.0) {}

    double& at(int i, int j, int k, int l) {
        return data_[((std::size_t(i) * n_ + j) * n_ + k) * n_ + l];
    }
    double at(int i, int j, int k, int l) const {
        return data_[((std::size_t(i) * n_ + j) * n_ + k) * n_ + l];
    }

    int dim() const { return n_; }

    AlgCurvature& operator+=(const AlgCurvature& o) {
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    AlgCurvature& operator-=(const AlgCurvature& o) {
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    AlgCurvature& operator*=(double c) {
        for (double& v : data_) v *= c;
        return *this;
    }
    friend AlgCurvature operator+(AlgCurvature a, const AlgCurvature& b) { return a += b; }
    friend AlgCurvature operator-(AlgCurvature a, const AlgCurvature& b) { return a -= b; }
    friend AlgCurvature operator*(double c, AlgCurvature a) { return a *= c; }

private:
    int n_ = 0;
    std::vector<double> data_;
};

struct SymmetryResiduals {
    double antisymmetry = 0.0;   // worst over both index pairs
    double pair_symmetry = 0.0;
    double first_bianchi = 0.0;

    double worst() const {
        return std::max(antisymmetry, std::max(pair_symmetry, first_bianchi));
    }
};

inline SymmetryResiduals symmetry_residuals(const AlgCurvature& R) {
    const int n = R.dim();
    SymmetryResiduals res;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const double v = R.at(i, j, k, l);
                    res.antisymmetry = std::max(res.antisymmetry,
                                                std::fabs(v + R.at(j, i, k, l)));
                    res.antisymmetry = std::max(res.antisymmetry,
                                                std::fabs(v + R.at(i, j, l, k)));
                    res.pair_symmetry = std::max(res.pair_symmetry,
                                                 std::fabs(v - R.at(k, l, i, j)));
                    res.first_bianchi = std::max(
                        res.first_bianchi,
                        std::fabs(v + R.at(i, k, l, j) + R.at(i, l, j, k)));
                }
    return res;
}

inline double inner(const AlgCurvature& a, const AlgCurvature& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("AlgCurvature inner: dimension mismatch");
    const int n = a.dim();
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) s += a.at(i, j, k, l) * b.at(i, j, k, l);
    return s;
}

inline double norm_sq(const AlgCurvature& a) { return inner(a, a); }
inline double frobenius(const AlgCurvature& a) { return std::sqrt(norm_sq(a)); }

// (A ^ B)_ijkl = A_ik B_jl + A_jl B_ik - A_jk B_il - A_il B_jk
inline AlgCurvature kulkarni_nomizu(const Sym2& A, const Sym2& B) {
    if (A.dim() != B.dim())
        throw std::invalid_argument("kulkarni_nomizu: dimension mismatch");
    const int n = A.dim();
    AlgCurvature R(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    R.at(i, j, k, l) = A(i, k) * B(j, l) + A(j, l) * B(i, k) -
                                       A(j, k) * B(i, l) - A(i, l) * B(j, k);
    return R;
}

inline Sym2 ricci(const AlgCurvature& R) {
    const int n = R.dim();
    Sym2 ric(n);
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += R.at(i, j, i, l);
            ric(j, l) = s;
        }
    return ric;
}

inline double scalar(const AlgCurvature& R) { return ricci(R).trace(); }

// Orthogonal projection of a pair-symmetric rank-4 array onto the tensors
// satisfying the first Bianchi identity; the complement is the fully
// antisymmetric part b(T)_ijkl = (T_ijkl + T_iklj + T_iljk)/3.
inline AlgCurvature bianchi_project(const AlgCurvature& T,
                                    double precondition_tol = 1e-10) {
    const int n = T.dim();
    {
        SymmetryResiduals res = symmetry_residuals(T);
        const double pre = std::max(res.antisymmetry, res.pair_symmetry);
        if (pre > precondition_tol)
            throw std::invalid_argument(
                "bianchi_project: input lacks pair symmetries, residual " +
                std::to_string(pre));
    }
    AlgCurvature out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    const double b = (T.at(i, j, k, l) + T.at(i, k, l, j) +
                                      T.at(i, l, j, k)) / 3.0;
                    out.at(i, j, k, l) = T.at(i, j, k, l) - b;
                }
    return out;
}

struct CurvDecomposition {
    AlgCurvature weyl;
    Sym2 ricci;
    double scal = 0.0;
};

inline AlgCurvature recompose(const CurvDecomposition& d) {
    const int n = d.ricci.dim();
    if (n < 3) throw std::invalid_argument("recompose: dimension must be >= 3");
    const Sym2 g = Sym2::metric(n);
    AlgCurvature R = d.weyl;
    AlgCurvature ric_g = kulkarni_nomizu(d.ricci, g);
    ric_g *= 1.0 / double(n - 2);
    R += ric_g;
    AlgCurvature gg = kulkarni_nomizu(g, g);
    gg *= d.scal / (2.0 * double(n - 1) * double(n - 2));
    R -= gg;
    return R;
}

inline CurvDecomposition weyl_decompose(const AlgCurvature& R) {
    const int n = R.dim();
    if (n < 3) throw std::invalid_argument("weyl_decompose: dimension must be >= 3");
    CurvDecomposition d;
    d.ricci = ricci(R);
    d.scal = d.ricci.trace();
    const Sym2 g = Sym2::metric(n);
    AlgCurvature W = R;
    AlgCurvature ric_g = kulkarni_nomizu(d.ricci, g);
    ric_g *= 1.0 / double(n - 2);
    W -= ric_g;
    AlgCurvature gg = kulkarni_nomizu(g, g);
    gg *= d.scal / (2.0 * double(n - 1) * double(n - 2));
    W += gg;
    d.weyl = W;
    return d;
}

inline double max_trace_residual(const AlgCurvature& W) {
    const int n = W.dim();
    double worst = 0.0;
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += W.at(i, j, i, l);
            worst = std::max(worst, std::fabs(s));
        }
    return worst;
}

inline AlgCurvature einstein_from_weyl(const AlgCurvature& W, double scal,
                                       double trace_tol = 1e-10) {
    const int n = W.dim();
    const double res = max_trace_residual(W);
    if (res > trace_tol)
        throw std::invalid_argument(
            "einstein_from_weyl: input is not trace-free, max residual " +
            std::to_string(res));
    const Sym2 g = Sym2::metric(n);
    AlgCurvature gg = kulkarni_nomizu(g, g);
    gg *= scal / (2.0 * double(n) * double(n - 1));
    AlgCurvature R = W;
    R += gg;
    return R;
}

// Deviation from the Einstein condition Ric = (Scal/n) g.
inline double einstein_residual(const AlgCurvature& R) {
    const int n = R.dim();
    const Sym2 ric = ricci(R);
    const double lambda = ric.trace() / double(n);
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double target = (i == j) ? lambda : 0.0;
            worst = std::max(worst, std::fabs(ric(i, j) - target));
        }
    return worst;
}

} // namespace curvop
