#pragma once

// The action of a symmetric 2-tensor on higher-rank tensors (sum over slots)
// and the norm profile |S^j W|^2 of a Weyl tensor against a traceless basis.
// Two convention-locked ratios tie the profile to |W|^2 and double as the
// test that the full-contraction inner product is in force:
//   sum_j |S^j W|^2 = action_sum_ratio(n) |W|^2,
//   max_j |S^j W|^2 <= action_max_ratio(n) |W|^2.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "curvature.hpp"
#include "linalg.hpp"
#include "second_kind.hpp"
#include "sym2.hpp"

namespace curvop {

inline double action_sum_ratio(int n) {
    return 2.0 * (double(n) * n + n - 8.0) / double(n);
}

inline double action_max_ratio(int n) { return (8.0 * n - 16.0) / double(n); }

// (S T)_{i1..i4} = sum_slots T(..., S applied in one slot, ...) for rank-4 T.
inline AlgCurvature tensor_action(const Sym2& S, const AlgCurvature& T) {
    if (S.dim() != T.dim())
        throw std::invalid_argument("tensor_action: dimension mismatch");
    const int n = S.dim();
    AlgCurvature out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    double s = 0.0;
                    for (int m = 0; m < n; ++m)
                        s += S(i, m) * T.at(m, j, k, l) + S(j, m) * T.at(i, m, k, l) +
                             S(k, m) * T.at(i, j, m, l) + S(l, m) * T.at(i, j, k, m);
                    out.at(i, j, k, l) = s;
                }
    return out;
}

// Rank-2 overload (used by tests of the slot-sum definition).
inline Sym2 tensor_action(const Sym2& S, const Sym2& T) {
    if (S.dim() != T.dim())
        throw std::invalid_argument("tensor_action: dimension mismatch");
    const int n = S.dim();
    Sym2 out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int m = 0; m < n; ++m)
                s += S(i, m) * T(m, j) + S(j, m) * T(i, m);
            out(i, j) = s;
        }
    return out;
}

struct ActionNormProfile {
    int n = 0;
    std::vector<double> norms;  // |S^j W|^2 per basis element, basis order
    double weyl_norm = 0.0;     // |W|^2

    double sum() const {
        double s = 0.0;
        for (double v : norms) s += v;
        return s;
    }
    double max() const {
        double m = 0.0;
        for (double v : norms) m = std::max(m, v);
        return m;
    }
};

namespace detail {
// |S W|^2 without materializing the rank-4 result.
inline double action_norm_sq(const Sym2& S, const AlgCurvature& T) {
    const int n = S.dim();
    double total = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    double s = 0.0;
                    for (int m = 0; m < n; ++m)
                        s += S(i, m) * T.at(m, j, k, l) + S(j, m) * T.at(i, m, k, l) +
                             S(k, m) * T.at(i, j, m, l) + S(l, m) * T.at(i, j, k, m);
                    total += s * s;
                }
    return total;
}
} // namespace detail

inline ActionNormProfile action_norm_profile(const AlgCurvature& W,
                                             const Sym2Basis& basis,
                                             double trace_tol = 1e-9) {
    const double res = max_trace_residual(W);
    const double scale = std::max(1.0, frobenius(W));
    if (res > trace_tol * scale)
        throw std::invalid_argument("action_norm_profile: input is not trace-free");
    ActionNormProfile p;
    p.n = W.dim();
    p.weyl_norm = norm_sq(W);
    p.norms.reserve(std::size_t(basis.size()));
    for (int j = 0; j < basis.size(); ++j)
        p.norms.push_back(detail::action_norm_sq(basis[j], W));
    return p;
}

// Profile against the eigenbasis of a second-kind operator: basis element j
// is replaced by sum_a vectors(a,j) * basis[a].  The weighted sums in the
// Bochner formulas pair eigenvalue j with this rotated element.
inline ActionNormProfile action_norm_profile_eigen(const AlgCurvature& W,
                                                   const Sym2Basis& basis,
                                                   const Matrix& vectors) {
    ActionNormProfile p;
    p.n = W.dim();
    p.weyl_norm = norm_sq(W);
    const int N = basis.size();
    p.norms.reserve(std::size_t(N));
    for (int j = 0; j < N; ++j) {
        const Sym2 Sj = basis.combine([&](int a) { return vectors(std::size_t(a), std::size_t(j)); });
        p.norms.push_back(detail::action_norm_sq(Sj, W));
    }
    return p;
}

// |W|^2 recovered from the second-kind spectrum of an Einstein tensor.
inline double weyl_norm_from_spectrum(const Spectrum& spec) {
    double sum_sq = 0.0;
    for (double v : spec.values) sum_sq += v * v;
    const double N = double(spec.size());
    return (4.0 / 3.0) * sum_sq - (4.0 * N / 3.0) * spec.mean * spec.mean;
}

} // namespace curvop
