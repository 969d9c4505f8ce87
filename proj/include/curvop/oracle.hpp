#pragma once

// Brute-force optimization oracles, independent of the closed-form results
// they cross-check:
//  * exact LP minimization of the smallest eigenvalue over the cone slice of
//    the mean-one simplex (structured vertex enumeration),
//  * global minimization of the simplex cubic F (two-level stationarity
//    enumeration plus projected-gradient descent from random restarts),
//  * a deterministic in-cone spectrum sampler for the invariant suites.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "bochner.hpp"
#include "cone.hpp"
#include "rng.hpp"
#include "second_kind.hpp"

namespace curvop {

struct LpResult {
    double min_lambda1 = 0.0;
    Spectrum argmin;
    std::vector<std::string> active_constraints;
};

// Minimize lambda_1 over {lambda ascending, sum = N, cone_value >= -theta}
// (mean normalized to 1).  At a vertex the sum and cone constraints pin two
// block values, so every candidate is a two-level pattern (p low entries at
// a, the rest at b) or the constant spectrum; enumerate them all.
inline LpResult lp_min_lambda1(int N, const ConeParams& p) {
    if (!(p.alpha >= 1.0) || !(p.alpha < double(N)))
        throw std::invalid_argument("lp_min_lambda1: alpha must lie in [1, N)");
    if (!(p.theta > -1.0))
        throw std::invalid_argument("lp_min_lambda1: theta must exceed -1");

    LpResult best;
    best.min_lambda1 = 1.0;
    best.argmin = make_spectrum(std::vector<double>(std::size_t(N), 1.0));
    best.active_constraints = {"sum", "ordering"};

    auto consider = [&](double a, double b, int low_count) {
        if (a > b + 1e-12) return;  // not ascending
        std::vector<double> v(std::size_t(N), b);
        for (int i = 0; i < low_count; ++i) v[std::size_t(i)] = a;
        Spectrum s = make_spectrum(std::move(v));
        const ConeCheck c = in_cone(s, p);
        if (!c.member) return;
        if (s.values.front() < best.min_lambda1 - 1e-15) {
            best.min_lambda1 = s.values.front();
            best.argmin = std::move(s);
            best.active_constraints = {"sum", "cone", "ordering"};
        }
    };

    for (int low = 1; low < N; ++low) {
        // cone constraint saturated inside the low block: a = -theta
        {
            const double a = -p.theta;
            const double b = (double(N) - double(low) * a) / double(N - low);
            consider(a, b, low);
        }
        // cone constraint saturated across both blocks:
        // b = (N + alpha theta)/(N - alpha), a balances the sum
        {
            const double b = (double(N) + p.alpha * p.theta) / (double(N) - p.alpha);
            const double a = (double(N) - double(N - low) * b) / double(low);
            consider(a, b, low);
        }
    }
    return best;
}

struct LevelPattern {
    int zeros = 0;
    std::vector<double> levels;  // distinct nonzero block values, ascending
};

struct MinFResult {
    double min_value = 0.0;
    double enum_min = 0.0;     // best over stationary level patterns
    double descent_min = 0.0;  // best over projected-gradient restarts
    std::vector<double> argmin;
    LevelPattern pattern;
    int restarts_converged = 0;
    int restarts_total = 0;
};

namespace detail {

// Euclidean projection onto {x >= 0, sum x = total} by sort-and-threshold.
inline std::vector<double> project_simplex(std::vector<double> y, double total) {
    std::vector<double> u = y;
    std::sort(u.begin(), u.end(), std::greater<double>());
    double css = 0.0, tau = 0.0;
    int rho = 0;
    for (int i = 0; i < int(u.size()); ++i) {
        css += u[std::size_t(i)];
        const double t = (css - total) / double(i + 1);
        if (u[std::size_t(i)] - t > 0.0) {
            rho = i + 1;
            tau = t;
        }
    }
    for (double& v : y) v = std::max(v - tau, 0.0);
    (void)rho;
    return y;
}

} // namespace detail

// Global minimum of F(x) = sum x^3 - c sum x^2 + const over the simplex
// {x >= 0, sum x = N(1+A)}, where c = (3 - (N-2)/(N-1))(1+A).  Stationary
// interior blocks of a candidate satisfy 3s^2 - 2cs = 3t^2 - 2ct, i.e. either
// s = t or s + t = 2c/3, so optima use at most two nonzero levels; enumerate
// those exactly, then let projected-gradient descent try to beat them.
inline MinFResult minimize_F(int N, double A, int restarts, std::uint64_t seed) {
    if (!(A > -1.0)) throw std::invalid_argument("minimize_F: requires A > -1");
    if (restarts < 1) throw std::invalid_argument("minimize_F: restarts must be >= 1");
    const double total = double(N) * (1.0 + A);
    const double c = (3.0 - (double(N) - 2.0) / (double(N) - 1.0)) * (1.0 + A);
    const double tau = 2.0 * c / 3.0;

    MinFResult best;
    best.min_value = std::numeric_limits<double>::infinity();
    best.restarts_total = restarts;

    auto consider_pattern = [&](int zeros, int u, double s, int v, double t) {
        if (s < -1e-12 || t < -1e-12) return;
        std::vector<double> x;
        x.reserve(std::size_t(N));
        for (int i = 0; i < zeros; ++i) x.push_back(0.0);
        for (int i = 0; i < u; ++i) x.push_back(std::max(s, 0.0));
        for (int i = 0; i < v; ++i) x.push_back(std::max(t, 0.0));
        const double val = simplex_cubic(x, A, N);
        if (val < best.min_value) {
            best.min_value = val;
            std::sort(x.begin(), x.end());
            best.argmin = x;
            best.pattern.zeros = zeros;
            best.pattern.levels.clear();
            if (u > 0) best.pattern.levels.push_back(s);
            if (v > 0 && std::fabs(t - s) > 1e-12) best.pattern.levels.push_back(t);
            std::sort(best.pattern.levels.begin(), best.pattern.levels.end());
        }
    };

    for (int zeros = 0; zeros < N; ++zeros) {
        const int m = N - zeros;
        // one nonzero level
        consider_pattern(zeros, m, total / double(m), 0, 0.0);
        // two nonzero levels: u at s, v at t with s + t = tau and the sum fixed
        for (int u = 1; u < m; ++u) {
            const int v = m - u;
            if (u == v) continue;  // stationarity and the sum conflict unless s = t
            const double s = (total - double(v) * tau) / double(u - v);
            const double t = tau - s;
            consider_pattern(zeros, u, s, v, t);
        }
    }

    best.enum_min = best.min_value;

    // Projected-gradient descent, seeded restarts.
    double descent_best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < restarts; ++r) {
        Rng rng(derive_seed(seed, std::uint64_t(r)));
        std::vector<double> x(static_cast<std::size_t>(N));
        // Uniform draws land in face basins; at large N they never reach the
        // interior basin, so odd restarts start near the barycenter instead.
        if (r % 2 == 1)
            for (double& v : x) v = 1.0 + 0.2 * (rng.uniform_pos() - 0.5);
        else
            for (double& v : x) v = rng.uniform_pos();
        double sum = 0.0;
        for (double v : x) sum += v;
        for (double& v : x) v *= total / sum;

        bool converged = false;
        double fx = simplex_cubic(x, A, N);
        for (int iter = 0; iter < 100000; ++iter) {
            std::vector<double> grad(x.size());
            for (std::size_t i = 0; i < x.size(); ++i)
                grad[i] = 3.0 * x[i] * x[i] - 2.0 * c * x[i];
            std::vector<double> step_pt(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) step_pt[i] = x[i] - grad[i];
            std::vector<double> gp = detail::project_simplex(step_pt, total);
            double gp_norm = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                const double d = gp[i] - x[i];
                gp_norm += d * d;
            }
            gp_norm = std::sqrt(gp_norm);
            if (gp_norm <= 1e-12) {
                converged = true;
                break;
            }
            double eta = 1.0;
            bool moved = false;
            for (int halvings = 0; halvings < 60; ++halvings) {
                std::vector<double> trial(x.size());
                for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] - eta * grad[i];
                trial = detail::project_simplex(std::move(trial), total);
                const double ft = simplex_cubic(trial, A, N);
                if (ft < fx - 1e-18) {
                    x = std::move(trial);
                    fx = ft;
                    moved = true;
                    break;
                }
                eta *= 0.5;
            }
            if (!moved) {
                converged = true;  // no descent direction at machine precision
                break;
            }
        }
        if (converged) ++best.restarts_converged;
        descent_best = std::min(descent_best, fx);
        if (fx < best.min_value) {
            best.min_value = fx;
            std::sort(x.begin(), x.end());
            best.argmin = x;
            best.pattern.zeros = int(std::count_if(x.begin(), x.end(),
                                                   [](double v) { return v <= 1e-10; }));
            best.pattern.levels.clear();
            for (double v : x)
                if (v > 1e-10 &&
                    (best.pattern.levels.empty() ||
                     std::fabs(best.pattern.levels.back() - v) > 1e-8))
                    best.pattern.levels.push_back(v);
        }
    }
    best.descent_min = descent_best;
    return best;
}

// `count` sorted mean-one spectra inside the cone: random normal direction,
// sorted, attached to the constant spectrum, then shrunk toward it until
// membership holds (the constant spectrum is interior for theta > -1).
inline std::vector<Spectrum> sample_cone(int N, const ConeParams& p, int count,
                                         std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("sample_cone: count must be >= 1");
    std::vector<Spectrum> out;
    out.reserve(std::size_t(count));
    for (int idx = 0; idx < count; ++idx) {
        Rng rng(derive_seed(seed, std::uint64_t(idx)));
        std::vector<double> dir(static_cast<std::size_t>(N));
        double mean = 0.0;
        for (double& v : dir) {
            v = rng.gaussian();
            mean += v;
        }
        mean /= double(N);
        std::sort(dir.begin(), dir.end());
        double scale = 1.0;
        Spectrum s;
        for (int tries = 0; tries < 200; ++tries) {
            std::vector<double> v(static_cast<std::size_t>(N));
            for (int i = 0; i < N; ++i)
                v[std::size_t(i)] = 1.0 + scale * (dir[std::size_t(i)] - mean);
            s = make_spectrum(std::move(v));
            if (in_cone(s, p).slack >= 0.0) break;
            scale *= 0.5;
        }
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace curvop
