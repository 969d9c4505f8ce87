#pragma once

// Eigenvalue cone conditions C(alpha, theta): membership arithmetic, the
// closed-form thresholds theta(n, alpha) in both dimension regimes, the
// admissible alpha range, the guaranteed lower bound on the smallest
// eigenvalue, and the spectrum attaining it.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "second_kind.hpp"

namespace curvop {

struct ConeParams {
    double alpha = 1.0;
    double theta = 0.0;
};

// alpha^-1 (sum_{i<=[alpha]} lambda_i + (alpha-[alpha]) lambda_{[alpha]+1});
// for integral alpha the fractional term is dropped and the index past the
// block is never read.
inline double cone_value(const Spectrum& spec, double alpha) {
    const int N = spec.size();
    if (!(alpha >= 1.0) || !(alpha < double(N)))
        throw std::invalid_argument("cone_value: alpha must lie in [1, N)");
    const int whole = int(std::floor(alpha));
    const double frac = alpha - double(whole);
    double s = 0.0;
    for (int i = 0; i < whole; ++i) s += spec.values[std::size_t(i)];
    if (frac > 0.0) s += frac * spec.values[std::size_t(whole)];
    return s / alpha;
}

struct ConeCheck {
    bool member = false;
    double slack = 0.0;  // cone_value + theta * mean
    double value = 0.0;
    double threshold = 0.0;  // -theta * mean
};

inline ConeCheck in_cone(const Spectrum& spec, const ConeParams& p) {
    ConeCheck c;
    c.value = cone_value(spec, p.alpha);
    c.threshold = -p.theta * spec.mean;
    c.slack = c.value - c.threshold;
    c.member = c.slack >= -1e-12;
    return c;
}

// Threshold for n >= 6:
//   theta(n,a) = 3(N-n+1)(N-a) / (3na(N-2) + (N-3)(N-a)) - 1.
// Evaluated on the wide domain 1 <= a < N; the admissible-range cut happens
// at the CLI layer (the verification grids need values past alpha_max, where
// the formula goes negative).
inline double theta_threshold(int n, double alpha) {
    if (n < 6) throw std::invalid_argument("theta_threshold: requires n >= 6");
    const double N = double(traceless_sym2_dim(n));
    if (!(alpha >= 1.0) || !(alpha < N))
        throw std::invalid_argument("theta_threshold: alpha must lie in [1, N)");
    const double num = 3.0 * (N - n + 1.0) * (N - alpha);
    const double den = 3.0 * n * alpha * (N - 2.0) + (N - 3.0) * (N - alpha);
    return num / den - 1.0;
}

// Threshold for n in {4,5}:
//   theta(n,a) = (n-1)((n+2)(n+5) - (3n+8)a) / (3a(n+3)(n-2)),
// which reduces to (27-10a)/(7a) for n=4 and (70-23a)/(18a) for n=5.
inline double theta_lowdim(int n, double alpha) {
    if (n != 4 && n != 5)
        throw std::invalid_argument("theta_lowdim: requires n in {4,5}");
    const double hi = double((n + 2) * (n + 5)) / double(3 * n + 8);
    if (!(alpha >= 1.0) || !(alpha <= hi))
        throw std::invalid_argument("theta_lowdim: alpha must lie in [1, " +
                                    std::to_string(hi) + "]");
    const double num = double(n - 1) * (double((n + 2) * (n + 5)) - double(3 * n + 8) * alpha);
    const double den = 3.0 * alpha * double((n + 3) * (n - 2));
    return num / den;
}

// Largest admissible alpha by regime.
inline double alpha_max(int n) {
    if (n < 4) throw std::invalid_argument("alpha_max: requires n >= 4");
    if (n == 4 || n == 5) return double((n + 2) * (n + 5)) / double(3 * n + 8);
    const double nd = double(n);
    const double expr1 = (nd * nd * nd * nd - nd * nd * nd + 8.0 * nd - 8.0) /
                         (3.0 * nd * nd * nd + 5.0 * nd * nd - 22.0 * nd + 8.0);
    const double expr2 = (nd * nd + nd - 8.0) / (4.0 * nd - 8.0);
    return std::min(expr1, expr2);
}

// Which expression attains the min in alpha_max for n >= 6 (regime boundary
// bookkeeping for the threshold tables).
enum class AlphaMaxBranch { ratio_quartic, ratio_quadratic };

inline AlphaMaxBranch alpha_max_branch(int n) {
    const double nd = double(n);
    const double expr1 = (nd * nd * nd * nd - nd * nd * nd + 8.0 * nd - 8.0) /
                         (3.0 * nd * nd * nd + 5.0 * nd * nd - 22.0 * nd + 8.0);
    const double expr2 = (nd * nd + nd - 8.0) / (4.0 * nd - 8.0);
    return expr1 <= expr2 ? AlphaMaxBranch::ratio_quartic : AlphaMaxBranch::ratio_quadratic;
}

// Resolve "auto" theta by regime.
inline double resolve_theta(int n, double alpha) {
    return (n >= 6) ? theta_threshold(n, alpha) : theta_lowdim(n, alpha);
}

// A such that every in-cone spectrum satisfies lambda_1 >= -A * mean:
//   A = ((alpha-1) N + alpha (N-1) theta) / (N - alpha).
inline double lambda1_bound(int N, const ConeParams& p) {
    if (!(p.alpha >= 1.0) || !(p.alpha < double(N)))
        throw std::invalid_argument("lambda1_bound: alpha must lie in [1, N)");
    return ((p.alpha - 1.0) * N + p.alpha * (N - 1.0) * p.theta) / (double(N) - p.alpha);
}

// The spectrum attaining the bound: (-A, b, ..., b) * mean with
// b = (N + alpha theta)/(N - alpha); its mean is exactly `mean`.
inline Spectrum extremal_spectrum(int N, const ConeParams& p, double mean) {
    if (mean < 0.0)
        throw std::invalid_argument("extremal_spectrum: mean must be >= 0");
    const double A = lambda1_bound(N, p);
    const double b = (double(N) + p.alpha * p.theta) / (double(N) - p.alpha);
    std::vector<double> v(std::size_t(N), b * mean);
    v[0] = -A * mean;
    std::sort(v.begin(), v.end());
    return make_spectrum(std::move(v));
}

} // namespace curvop
