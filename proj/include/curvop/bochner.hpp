#pragma once

// The Bochner quantity <Delta R, R> of an Einstein algebraic curvature
// tensor, computed from second-kind spectral data, together with the two
// lower bounds it is squeezed against and the simplex cubic that encodes
// the nonnegativity argument.
//
// For n >= 6 the quantity needs the eigenbasis norm profile |S^j W|^2:
//   3 <Delta R, R> = sum_j lambda_j |S^j W|^2
//                    - (16 N (2N - 9n + 6) / 3n) mean^3
//                    + (16 (2N - 12n + 6) / 3n) mean * sum lambda^2
//                    + 16 sum lambda^3.
// For n in {4, 5} the weighted profile sum collapses to an eigenvalue
// polynomial (the traceless action satisfies sum_j mu_j |S^j W|^2 =
// 8 sum_j mu_j^3 in these two dimensions, and in no higher one), giving the
// eigenvalue-only form
//   <Delta R, R> = 8 sum lambda^3 + (8(n-10)/3) mean * sum lambda^2
//                  + (8 N (7-n)/3) mean^3.
// Both branches vanish on locally symmetric models (constant curvature,
// complex projective space, Einstein sphere products), which is the defining
// property of the quantity and is pinned by the test suite.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "cone.hpp"
#include "second_kind.hpp"
#include "weyl_action.hpp"

namespace curvop {

namespace detail {
inline void sums(const Spectrum& spec, double& sum2, double& sum3) {
    sum2 = 0.0;
    sum3 = 0.0;
    for (double v : spec.values) {
        sum2 += v * v;
        sum3 += v * v * v;
    }
}
} // namespace detail

// Tolerance scale for the cubic-homogeneous inequality checks.
inline double bochner_scale(const Spectrum& spec) {
    const double m = std::fabs(spec.mean);
    return std::max(1.0, double(spec.size()) * m * m * m);
}

// Eigenvalue-only branch, n in {4, 5}.
inline double delta_r_inner(const Spectrum& spec, int n) {
    if (n != 4 && n != 5)
        throw std::invalid_argument(
            "delta_r_inner: the eigenvalue-only form exists for n in {4,5}; "
            "n >= 6 requires an action norm profile");
    const double N = double(spec.size());
    double sum2, sum3;
    detail::sums(spec, sum2, sum3);
    const double mean = spec.mean;
    return 8.0 * sum3 + (8.0 * (n - 10.0) / 3.0) * mean * sum2 +
           (8.0 * N * (7.0 - n) / 3.0) * mean * mean * mean;
}

// Profile branch, n >= 6.  profile.norms[j] must pair with spec.values[j],
// i.e. the profile is taken against the eigenbasis of the same operator
// (action_norm_profile_eigen on the spectral decomposition).
inline double delta_r_inner(const Spectrum& spec, const ActionNormProfile& profile,
                            int n) {
    if (n < 6) return delta_r_inner(spec, n);  // profile ignored below n = 6
    if (int(profile.norms.size()) != spec.size())
        throw std::invalid_argument("delta_r_inner: profile/spectrum size mismatch");
    const double N = double(spec.size());
    double sum2, sum3;
    detail::sums(spec, sum2, sum3);
    const double mean = spec.mean;
    double weighted = 0.0;
    for (int j = 0; j < spec.size(); ++j)
        weighted += spec.values[std::size_t(j)] * profile.norms[std::size_t(j)];
    const double t3 = weighted -
                      (16.0 * N * (2.0 * N - 9.0 * n + 6.0) / (3.0 * n)) * mean * mean * mean +
                      (16.0 * (2.0 * N - 12.0 * n + 6.0) / (3.0 * n)) * mean * sum2 +
                      16.0 * sum3;
    return t3 / 3.0;
}

// Lower bound on the weighted profile sum sum_j lambda_j |S^j W|^2 for
// in-cone spectra (n >= 6):
//   -(16(N-3)/3n) theta mean sum lambda^2 + (16N(N-3)/3n) theta mean^3.
inline double weighted_norm_bound(const Spectrum& spec, double theta, int n) {
    if (n < 6) throw std::invalid_argument("weighted_norm_bound: requires n >= 6");
    const double N = double(spec.size());
    double sum2, sum3;
    detail::sums(spec, sum2, sum3);
    const double mean = spec.mean;
    return -(16.0 * (N - 3.0) / (3.0 * n)) * theta * mean * sum2 +
           (16.0 * N * (N - 3.0) / (3.0 * n)) * theta * mean * mean * mean;
}

// The spectral lower bound f on 3 <Delta R, R> for in-cone spectra (n >= 6):
//   f = (16N/3n)[(N-3)theta - (2N-9n+6)] mean^3
//       + (16/3n)[(2N-12n+6) - (N-3)theta] mean sum lambda^2
//       + 16 sum lambda^3.
inline double f_lower_bound(const Spectrum& spec, double theta, int n) {
    if (n < 6) throw std::invalid_argument("f_lower_bound: requires n >= 6");
    const double N = double(spec.size());
    double sum2, sum3;
    detail::sums(spec, sum2, sum3);
    const double mean = spec.mean;
    const double c3 = (16.0 * N / (3.0 * n)) * ((N - 3.0) * theta - (2.0 * N - 9.0 * n + 6.0));
    const double c2 = (16.0 / (3.0 * n)) * ((2.0 * N - 12.0 * n + 6.0) - (N - 3.0) * theta);
    return c3 * mean * mean * mean + c2 * mean * sum2 + 16.0 * sum3;
}

// F(x) = sum x^3 - (3 - (N-2)/(N-1))(1+A) sum x^2 + (A+1)^3 N^2/(N-1).
inline double simplex_cubic(const std::vector<double>& x, double A, int N) {
    double sum2 = 0.0, sum3 = 0.0;
    for (double v : x) {
        sum2 += v * v;
        sum3 += v * v * v;
    }
    const double Nd = double(N);
    const double c = (3.0 - (Nd - 2.0) / (Nd - 1.0)) * (1.0 + A);
    return sum3 - c * sum2 + (A + 1.0) * (A + 1.0) * (A + 1.0) * Nd * Nd / (Nd - 1.0);
}

// Residuals of the two coefficient identities that hold at theta(n, alpha)
// and link f to the simplex cubic:
//   (N-3)theta - (2N-9n+6) = -3n((N-2)A - N)/(N-1),
//   (2N-12n+6) - (N-3)theta =  3n((N-2)A - (2N-1))/(N-1).
struct CoefficientResiduals {
    double first = 0.0;
    double second = 0.0;
};

inline CoefficientResiduals coefficient_identity_residuals(int n, double alpha) {
    const int N = traceless_sym2_dim(n);
    const double theta = theta_threshold(n, alpha);
    const double A = lambda1_bound(N, ConeParams{alpha, theta});
    const double Nd = double(N);
    const double lhs1 = (Nd - 3.0) * theta - (2.0 * Nd - 9.0 * n + 6.0);
    const double rhs1 = -3.0 * n * ((Nd - 2.0) * A - Nd) / (Nd - 1.0);
    const double lhs2 = (2.0 * Nd - 12.0 * n + 6.0) - (Nd - 3.0) * theta;
    const double rhs2 = 3.0 * n * ((Nd - 2.0) * A - (2.0 * Nd - 1.0)) / (Nd - 1.0);
    CoefficientResiduals r;
    const double s1 = std::max(1.0, std::fabs(lhs1));
    const double s2 = std::max(1.0, std::fabs(lhs2));
    r.first = std::fabs(lhs1 - rhs1) / s1;
    r.second = std::fabs(lhs2 - rhs2) / s2;
    return r;
}

struct SubstitutionReport {
    double f_value = 0.0;
    double cubic_value = 0.0;     // 16 mean^3 F(x)
    double relative_gap = 0.0;
    double coord_sum = 0.0;       // sum x_j, expected N (1 + A)
    double min_coord = 0.0;
    bool identity_ok = false;
    bool feasible = false;        // all x_j >= -1e-10 (holds for in-cone spectra)
};

// Verifies f(lambda) = 16 mean^3 F(x) under x_j = lambda_j/mean + A at the
// threshold theta(n, alpha).  Requires mean > 0 (the degenerate mean = 0 case
// short-circuits: in-cone then forces the zero spectrum).
inline SubstitutionReport substitution_check(const Spectrum& spec, double alpha, int n) {
    if (n < 6) throw std::invalid_argument("substitution_check: requires n >= 6");
    if (!(spec.mean > 0.0))
        throw std::invalid_argument("substitution_check: requires mean > 0");
    const int N = spec.size();
    const double theta = theta_threshold(n, alpha);
    const double A = lambda1_bound(N, ConeParams{alpha, theta});
    std::vector<double> x(spec.values.size());
    double coord_sum = 0.0, min_coord = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        x[j] = spec.values[j] / spec.mean + A;
        coord_sum += x[j];
        if (j == 0 || x[j] < min_coord) min_coord = x[j];
    }
    SubstitutionReport rep;
    rep.f_value = f_lower_bound(spec, theta, n);
    const double m3 = spec.mean * spec.mean * spec.mean;
    rep.cubic_value = 16.0 * m3 * simplex_cubic(x, A, N);
    const double scale = std::max({1.0, std::fabs(rep.f_value), std::fabs(rep.cubic_value)});
    rep.relative_gap = std::fabs(rep.f_value - rep.cubic_value) / scale;
    rep.coord_sum = coord_sum;
    rep.min_coord = min_coord;
    rep.identity_ok = rep.relative_gap <= 1e-9;
    rep.feasible = min_coord >= -1e-10;
    return rep;
}

enum class EqualityCase { constant, extremal, none };

inline const char* to_string(EqualityCase c) {
    switch (c) {
        case EqualityCase::constant: return "constant";
        case EqualityCase::extremal: return "extremal";
        default: return "none";
    }
}

// Classify a spectrum against the two equality patterns; constant wins when
// both match (degenerate theta).
inline EqualityCase equality_case_classify(const Spectrum& spec, const ConeParams& p,
                                           double tol) {
    const double mean = spec.mean;
    double dev = 0.0;
    for (double v : spec.values) dev = std::max(dev, std::fabs(v - mean));
    if (dev <= tol * std::fabs(mean)) return EqualityCase::constant;
    const Spectrum ext = extremal_spectrum(spec.size(), p, mean);
    double gap = 0.0;
    for (int j = 0; j < spec.size(); ++j)
        gap = std::max(gap, std::fabs(spec.values[std::size_t(j)] - ext.values[std::size_t(j)]));
    if (gap <= tol) return EqualityCase::extremal;
    return EqualityCase::none;
}

struct BochnerReport {
    int n = 0;
    double delta_rr = 0.0;
    double f_bound = 0.0;        // n >= 6 only
    double weighted_lhs = 0.0;   // sum_j lambda_j |S^j W|^2 (n >= 6 only)
    double weighted_rhs = 0.0;   // n >= 6 only
    bool in_cone_checked = false;
    EqualityCase equality_case = EqualityCase::none;
};

inline BochnerReport bochner_report(const Spectrum& spec, const ActionNormProfile& profile,
                                    int n, const ConeParams& p) {
    BochnerReport rep;
    rep.n = n;
    rep.in_cone_checked = in_cone(spec, p).member;
    rep.equality_case = equality_case_classify(spec, p, 1e-6);
    if (n >= 6) {
        rep.delta_rr = delta_r_inner(spec, profile, n);
        rep.f_bound = f_lower_bound(spec, p.theta, n);
        rep.weighted_rhs = weighted_norm_bound(spec, p.theta, n);
        double weighted = 0.0;
        for (int j = 0; j < spec.size(); ++j)
            weighted += spec.values[std::size_t(j)] * profile.norms[std::size_t(j)];
        rep.weighted_lhs = weighted;
    } else {
        rep.delta_rr = delta_r_inner(spec, n);
    }
    return rep;
}

} // namespace curvop
