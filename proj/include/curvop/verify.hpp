#pragma once

// Batch verification suites behind the `verify` CLI command.  Each suite
// draws seeded deterministic samples, checks the library's identities and
// inequalities at their stated tolerances, and reports sample/violation
// counts plus the worst margin seen (negative margin = violation).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "bochner.hpp"
#include "cone.hpp"
#include "curvature.hpp"
#include "models.hpp"
#include "oracle.hpp"
#include "rng.hpp"
#include "second_kind.hpp"
#include "weyl_action.hpp"

namespace curvop {

struct SuiteReport {
    std::string suite;
    long samples = 0;
    long violations = 0;
    double worst_slack = std::numeric_limits<double>::infinity();
    std::vector<std::string> failures;

    void record(double margin, const std::string& what) {
        ++samples;
        worst_slack = std::min(worst_slack, margin);
        if (!(margin >= 0.0)) {
            ++violations;
            if (failures.size() < 32)
                failures.push_back(what + " (margin " + std::to_string(margin) + ")");
        }
    }

    void merge(const SuiteReport& o) {
        samples += o.samples;
        violations += o.violations;
        worst_slack = std::min(worst_slack, o.worst_slack);
        for (const auto& f : o.failures)
            if (failures.size() < 32) failures.push_back(f);
    }

    double reported_slack() const {
        return std::isfinite(worst_slack) ? worst_slack : 0.0;
    }
};

struct VerifyOptions {
    int n = 0;                 // 0 = suite default dimension range
    int count = 0;             // 0 = suite default sample count
    std::uint64_t seed = 0;
    double perturb = 0.0;      // fractional perturbation of the action-sum constant
};

// One in-cone Einstein test instance: tensor, spectral data, and the norm
// profile of its Weyl part against the second-kind eigenbasis.
struct ConeSample {
    AlgCurvature R;
    Spectrum spec;
    Matrix vectors;
    ActionNormProfile profile;
    double scal = 0.0;
};

namespace detail {

inline std::uint64_t suite_seed(std::uint64_t base, int a, int b, int c) {
    return derive_seed(derive_seed(base, (std::uint64_t(a) << 20) ^ std::uint64_t(b)),
                       std::uint64_t(c));
}

} // namespace detail

// Random Einstein tensor conditioned to lie in the cone.  The second-kind
// matrix of W + (scal/(2n(n-1))) g^g is t*M_W + mean*I when W is scaled by
// t, so the spectrum is affine in t and membership can be bisected without
// re-diagonalizing.  Even sample indices stay on the cone boundary (where
// the inequalities are tight); odd ones are pulled to a random interior
// point.
inline ConeSample sample_cone_tensor(int n, const ConeParams& p, std::uint64_t seed,
                                     bool interior) {
    const double scal = double(n) * (n - 1);  // mean eigenvalue 1
    const double mean = 1.0;
    AlgCurvature R0 = random_einstein(n, scal, seed);
    const CurvDecomposition d = weyl_decompose(R0);
    const Sym2Basis basis(n);
    const SecondKindOperator op_w = second_kind_matrix(d.weyl, basis);
    const std::vector<double> mu = jacobi_eigvals(op_w.matrix);

    auto member_at = [&](double t) {
        std::vector<double> v(mu.size());
        for (std::size_t i = 0; i < mu.size(); ++i) v[i] = mean + t * mu[i];
        return in_cone(make_spectrum(std::move(v)), p).member;
    };

    double lo = 0.0, hi = 1.0;
    if (member_at(1.0)) {
        lo = 1.0;
        int grow = 0;
        while (member_at(hi) && grow++ < 60) {
            lo = hi;
            hi *= 2.0;
        }
    }
    double t = lo;
    if (!member_at(hi)) {
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo + hi);
            (member_at(mid) ? lo : hi) = mid;
        }
        t = lo;
    }
    if (interior) {
        Rng rng(derive_seed(seed, 0x1f));
        t *= rng.uniform_pos();
    }

    AlgCurvature W = d.weyl;
    W *= t;
    ConeSample s;
    s.R = einstein_from_weyl(W, scal, 1e-8);
    s.scal = scal;
    const SecondKindOperator op = second_kind_matrix(s.R, basis);
    SpectralDecomposition sd = spectral_decomposition(op);
    s.spec = std::move(sd.spec);
    s.vectors = std::move(sd.vectors);
    s.profile = action_norm_profile_eigen(W, basis, s.vectors);
    return s;
}

// Norm-profile identities and Einstein bookkeeping on random tensors.
inline SuiteReport run_identity_suite(const VerifyOptions& opt) {
    SuiteReport rep;
    rep.suite = "identities";
    std::vector<int> dims;
    if (opt.n > 0)
        dims.push_back(opt.n);
    else
        for (int n = 4; n <= 10; ++n) dims.push_back(n);
    const int count = opt.count > 0 ? opt.count : 100;

    for (int n : dims) {
        const Sym2Basis basis(n);
        const double sum_ratio = action_sum_ratio(n) * (1.0 + opt.perturb);
        const double max_ratio = action_max_ratio(n);
        for (int s = 0; s < count; ++s) {
            const double scal = double(n) * (n - 1);
            const AlgCurvature R = random_einstein(n, scal, detail::suite_seed(opt.seed, n, 0, s));
            const CurvDecomposition d = weyl_decompose(R);
            const ActionNormProfile prof = action_norm_profile(d.weyl, basis);
            const Spectrum spec = spectrum(second_kind_matrix(R, basis));
            const double w2 = prof.weyl_norm;

            const double sum_err = std::fabs(prof.sum() - sum_ratio * w2) /
                                   std::max(1e-300, std::fabs(sum_ratio * w2));
            rep.record(1e-9 - sum_err, "action sum ratio, n=" + std::to_string(n));

            rep.record(max_ratio * w2 + 1e-9 - prof.max(),
                       "action max ratio, n=" + std::to_string(n));

            const double w2_spec = weyl_norm_from_spectrum(spec);
            const double w2_err = std::fabs(w2_spec - w2) / std::max(1.0, std::fabs(w2));
            rep.record(1e-8 - w2_err, "weyl norm from spectrum, n=" + std::to_string(n));

            const double scal_spec = double(n) * (n - 1) * spec.mean;
            const double scal_err = std::fabs(scal - scal_spec) / std::max(1.0, std::fabs(scal));
            rep.record(1e-8 - scal_err, "scal vs mean eigenvalue, n=" + std::to_string(n));
        }
    }
    return rep;
}

// Cone membership arithmetic: sampler contract, extremal tightness, the
// closed-form thresholds and their low-dimension variants.
inline SuiteReport run_cone_suite(const VerifyOptions& opt) {
    SuiteReport rep;
    rep.suite = "cone";
    const int count = opt.count > 0 ? opt.count : 40;

    const std::vector<int> dims_N = {9, 14, 20, 27, 35};
    const std::vector<double> alphas = {1.0, 1.5, 2.0, 2.7, 3.0};
    const std::vector<double> thetas = {0.0, 0.2, 0.5, 1.0};
    int combo = 0;
    for (int N : dims_N)
        for (double alpha : alphas)
            for (double theta : thetas) {
                const ConeParams p{alpha, theta};
                const auto samples =
                    sample_cone(N, p, count, detail::suite_seed(opt.seed, N, combo, 0));
                for (const auto& s : samples) {
                    const ConeCheck c = in_cone(s, p);
                    rep.record(c.slack + 1e-12, "sampled spectrum in cone");
                    rep.record(1e-12 - std::fabs(s.mean - 1.0), "sampled mean is 1");
                    const double bound = lambda1_bound(N, p) * s.mean;
                    rep.record(s.values.front() + bound + 1e-9,
                               "first eigenvalue above closed-form bound");
                }
                const Spectrum ext = extremal_spectrum(N, p, 1.0);
                const ConeCheck ce = in_cone(ext, p);
                rep.record(1e-10 - std::fabs(ce.slack), "extremal spectrum tight");
                rep.record(1e-12 - std::fabs(ext.values.front() + lambda1_bound(N, p)),
                           "extremal first entry is -bound");
                ++combo;
            }

    // closed-form threshold spot values
    rep.record(1e-12 - std::fabs(theta_threshold(6, 1.0) - 208.0 / 647.0), "theta(6,1)");
    rep.record(1e-12 - std::fabs(theta_threshold(7, 2.0) + 1.0 / 22.0), "theta(7,2)");
    for (int i = 0; i <= 100; ++i) {
        const double a4 = 1.0 + (2.7 - 1.0) * i / 100.0;
        rep.record(1e-12 - std::fabs(theta_lowdim(4, a4) - (27.0 - 10.0 * a4) / (7.0 * a4)),
                   "theta_lowdim(4) closed form");
        const double a5 = 1.0 + (70.0 / 23.0 - 1.0) * i / 100.0;
        rep.record(1e-12 - std::fabs(theta_lowdim(5, a5) - (70.0 - 23.0 * a5) / (18.0 * a5)),
                   "theta_lowdim(5) closed form");
    }
    rep.record(std::fabs(alpha_max(4) - 2.7) <= 1e-15 ? 1.0 : -1.0, "alpha_max(4)");
    rep.record(std::fabs(alpha_max(5) - 70.0 / 23.0) <= 1e-15 ? 1.0 : -1.0, "alpha_max(5)");
    const std::vector<std::pair<int, AlphaMaxBranch>> branch_cases = {
        {6, AlphaMaxBranch::ratio_quartic},  {7, AlphaMaxBranch::ratio_quartic},
        {8, AlphaMaxBranch::ratio_quartic},  {16, AlphaMaxBranch::ratio_quartic},
        {17, AlphaMaxBranch::ratio_quadratic}, {30, AlphaMaxBranch::ratio_quadratic}};
    for (const auto& [n, want] : branch_cases)
        rep.record(alpha_max_branch(n) == want ? 1.0 : -1.0,
                   "alpha_max branch at n=" + std::to_string(n));
    return rep;
}

// The inequality chain behind the main estimate, the substitution identity,
// and the locally symmetric zeros.
inline SuiteReport run_bochner_suite(const VerifyOptions& opt) {
    SuiteReport rep;
    rep.suite = "bochner";
    const int count = opt.count > 0 ? opt.count : 200;

    // coefficient identities along the threshold curve
    for (int n = 6; n <= 12; ++n) {
        const double hi = alpha_max(n);
        for (int i = 0; i < 21; ++i) {
            const double alpha = 1.0 + (hi - 1.0) * i / 20.0;
            const CoefficientResiduals r = coefficient_identity_residuals(n, alpha);
            rep.record(1e-10 - r.first, "coefficient identity 1, n=" + std::to_string(n));
            rep.record(1e-10 - r.second, "coefficient identity 2, n=" + std::to_string(n));
        }
    }

    std::vector<int> dims;
    if (opt.n > 0)
        dims.push_back(opt.n);
    else
        for (int n = 4; n <= 10; ++n) dims.push_back(n);

    for (int n : dims) {
        if (n >= 6) {
            const double quad = (double(n) * n + n - 8.0) / (4.0 * n - 8.0);
            const std::vector<double> alphas = {1.0, 0.5 * (1.0 + quad), quad};
            for (int s = 0; s < count; ++s) {
                const double alpha = alphas[std::size_t(s) % alphas.size()];
                const double theta = theta_threshold(n, alpha);
                const ConeParams p{alpha, theta};
                const ConeSample cs = sample_cone_tensor(
                    n, p, detail::suite_seed(opt.seed, n, 1, s), s % 2 == 1);
                const double scale = bochner_scale(cs.spec);

                const double delta = delta_r_inner(cs.spec, cs.profile, n);
                const double f = f_lower_bound(cs.spec, theta, n);
                rep.record(3.0 * delta - f + 1e-8 * scale,
                           "main inequality, n=" + std::to_string(n));

                double weighted = 0.0;
                for (int j = 0; j < cs.spec.size(); ++j)
                    weighted += cs.spec.values[std::size_t(j)] * cs.profile.norms[std::size_t(j)];
                const double wb = weighted_norm_bound(cs.spec, theta, n);
                rep.record(weighted - wb + 1e-8 * scale,
                           "weighted norm bound, n=" + std::to_string(n));

                rep.record(cs.profile.sum() - alpha * cs.profile.max() + 1e-9,
                           "sum dominates alpha max, n=" + std::to_string(n));

                rep.record(3.0 * delta + 1e-8 * scale,
                           "nonnegativity, n=" + std::to_string(n));

                if (cs.spec.mean > 0.0) {
                    const SubstitutionReport sub = substitution_check(cs.spec, alpha, n);
                    rep.record(sub.identity_ok ? 1e-9 - sub.relative_gap : -1.0,
                               "substitution identity, n=" + std::to_string(n));
                    rep.record(sub.feasible ? sub.min_coord + 1e-10 : -1.0,
                               "substitution coordinates feasible, n=" + std::to_string(n));
                }
            }
        } else {
            const double hi = alpha_max(n);
            for (int s = 0; s < count; ++s) {
                const double alpha = 1.0 + (hi - 1.0) * double(s % 5) / 4.0;
                const ConeParams p{alpha, theta_lowdim(n, alpha)};
                const ConeSample cs = sample_cone_tensor(
                    n, p, detail::suite_seed(opt.seed, n, 2, s), s % 2 == 1);
                const double scale = bochner_scale(cs.spec);
                const double delta = delta_r_inner(cs.spec, n);
                rep.record(3.0 * delta + 1e-8 * scale,
                           "nonnegativity, n=" + std::to_string(n));
            }
        }
    }

    // locally symmetric zeros
    auto check_zero = [&rep](const AlgCurvature& R, const std::string& label) {
        const int n = R.dim();
        const Sym2Basis basis(n);
        const SecondKindOperator op = second_kind_matrix(R, basis);
        const SpectralDecomposition sd = spectral_decomposition(op);
        const double scale = bochner_scale(sd.spec);
        double delta;
        if (n >= 6) {
            const AlgCurvature W = weyl_decompose(R).weyl;
            const ActionNormProfile prof = action_norm_profile_eigen(W, basis, sd.vectors);
            delta = delta_r_inner(sd.spec, prof, n);
        } else {
            delta = delta_r_inner(sd.spec, n);
        }
        rep.record(1e-8 * scale - std::fabs(delta), label);
    };
    for (int n = 4; n <= 10; ++n)
        check_zero(constant_curvature(n, 1.0), "constant curvature zero, n=" + std::to_string(n));
    check_zero(sphere_product(2, 1.0, 2, 1.0), "product of two 2-spheres zero");
    check_zero(fubini_study(2), "complex projective plane zero");
    check_zero(sphere_product(2, 2.0, 3, 1.0), "2-sphere x 3-sphere zero");
    check_zero(sphere_product(3, 1.0, 3, 1.0), "product of two 3-spheres zero");
    check_zero(fubini_study(3), "complex projective 3-space zero");
    return rep;
}

// Optimization oracles against the closed forms.
inline SuiteReport run_oracle_suite(const VerifyOptions& opt) {
    SuiteReport rep;
    rep.suite = "oracles";

    const std::vector<int> dims_N = {9, 14, 20, 27, 35};
    const std::vector<double> alphas = {1.0, 1.5, 2.0, 2.7, 3.0, 3.14159265358979323846};
    const std::vector<double> thetas = {0.0, 0.2, 0.5, 1.0};
    for (int N : dims_N)
        for (double alpha : alphas) {
            if (alpha >= double(N)) continue;
            for (double theta : thetas) {
                const ConeParams p{alpha, theta};
                const LpResult lp = lp_min_lambda1(N, p);
                const double closed = -lambda1_bound(N, p);
                rep.record(1e-9 - std::fabs(lp.min_lambda1 - closed),
                           "lp optimum equals closed form, N=" + std::to_string(N));
                const ConeCheck c = in_cone(lp.argmin, p);
                rep.record(c.slack + 1e-10, "lp argmin feasible");
            }
        }

    for (int n = 4; n <= 12; ++n) {
        const int N = traceless_sym2_dim(n);
        const double hi = alpha_max(n);
        for (int i = 0; i < 5; ++i) {
            const double alpha = 1.0 + (hi - 1.0) * i / 4.0;
            const double theta = resolve_theta(n, alpha);
            const double A = lambda1_bound(N, ConeParams{alpha, theta});
            const MinFResult r =
                minimize_F(N, A, 8, detail::suite_seed(opt.seed, n, 3, i));
            rep.record(r.min_value + 1e-8, "simplex cubic min, n=" + std::to_string(n));

            std::vector<double> flat(static_cast<std::size_t>(N), 1.0 + A);
            rep.record(1e-9 - std::fabs(simplex_cubic(flat, A, N)),
                       "uniform minimizer value, n=" + std::to_string(n));
            std::vector<double> one_zero(static_cast<std::size_t>(N),
                                         double(N) * (1.0 + A) / double(N - 1));
            one_zero[0] = 0.0;
            rep.record(1e-9 - std::fabs(simplex_cubic(one_zero, A, N)),
                       "one-zero minimizer value, n=" + std::to_string(n));
        }
    }

    // sampler determinism
    const ConeParams p{1.5, 0.2};
    const auto a = sample_cone(20, p, 3, opt.seed + 7);
    const auto b = sample_cone(20, p, 3, opt.seed + 7);
    const auto c = sample_cone(20, p, 3, opt.seed + 8);
    bool identical = true;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].values != b[i].values) identical = false;
    rep.record(identical ? 1.0 : -1.0, "sampler deterministic per seed");
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].values != c[i].values) differs = true;
    rep.record(differs ? 1.0 : -1.0, "sampler varies across seeds");
    return rep;
}

inline std::vector<SuiteReport> run_suites(const std::string& which,
                                           const VerifyOptions& opt) {
    std::vector<SuiteReport> out;
    if (which == "identities" || which == "all") out.push_back(run_identity_suite(opt));
    if (which == "cone" || which == "all") out.push_back(run_cone_suite(opt));
    if (which == "bochner" || which == "all") out.push_back(run_bochner_suite(opt));
    if (which == "oracles" || which == "all") out.push_back(run_oracle_suite(opt));
    if (out.empty()) throw std::invalid_argument("unknown suite: " + which);
    return out;
}

} // namespace curvop
