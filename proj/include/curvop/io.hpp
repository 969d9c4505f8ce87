#pragma once

// JSON file formats: curvature tensors (generating-set entry list), spectra,
// action norm profiles, threshold tables, model descriptions, and the
// verification summary.  All floats go through nlohmann's shortest
// round-trip serialization, which preserves every bit of a double.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cone.hpp"
#include "curvature.hpp"
#include "models.hpp"
#include "second_kind.hpp"
#include "weyl_action.hpp"

namespace curvop {

using nlohmann::json;

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return j;
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
}

namespace detail {
inline int pair_index(int i, int j, int n) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}
} // namespace detail

// {"n": int, "entries": [{"i","j","k","l","v"}...]} listing the generating
// set i < j, k < l, (i,j) <= (k,l); zero components are omitted.
inline json tensor_to_json(const AlgCurvature& R) {
    const int n = R.dim();
    json entries = json::array();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    if (detail::pair_index(i, j, n) > detail::pair_index(k, l, n)) continue;
                    const double v = R.at(i, j, k, l);
                    if (v == 0.0) continue;
                    entries.push_back({{"i", i}, {"j", j}, {"k", k}, {"l", l}, {"v", v}});
                }
    return json{{"n", n}, {"entries", std::move(entries)}};
}

// Expands the generating set by the index symmetries, rejects duplicate or
// out-of-order entries, and validates the first Bianchi identity.
inline AlgCurvature tensor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw std::runtime_error("tensor JSON must carry \"n\" and \"entries\"");
    const int n = j.at("n").get<int>();
    if (n < 2) throw std::runtime_error("tensor JSON: n must be >= 2");
    AlgCurvature R(n);
    std::vector<char> seen(std::size_t(n) * n * n * n, 0);
    double max_abs = 0.0;
    for (const auto& e : j.at("entries")) {
        const int i = e.at("i").get<int>();
        const int jj = e.at("j").get<int>();
        const int k = e.at("k").get<int>();
        const int l = e.at("l").get<int>();
        const double v = e.at("v").get<double>();
        if (i < 0 || jj >= n || k < 0 || l >= n || i >= jj || k >= l)
            throw std::runtime_error("tensor JSON: entry indices must satisfy 0 <= i < j < n, 0 <= k < l < n");
        if (detail::pair_index(i, jj, n) > detail::pair_index(k, l, n))
            throw std::runtime_error("tensor JSON: entries must have (i,j) <= (k,l) lexicographically");
        const std::size_t key = ((std::size_t(i) * n + jj) * n + k) * n + l;
        if (seen[key]) throw std::runtime_error("tensor JSON: duplicate entry");
        seen[key] = 1;
        R.at(i, jj, k, l) = v;
        R.at(jj, i, k, l) = -v;
        R.at(i, jj, l, k) = -v;
        R.at(jj, i, l, k) = v;
        R.at(k, l, i, jj) = v;
        R.at(l, k, i, jj) = -v;
        R.at(k, l, jj, i) = -v;
        R.at(l, k, jj, i) = v;
        max_abs = std::max(max_abs, std::fabs(v));
    }
    const SymmetryResiduals res = symmetry_residuals(R);
    const double tol = 1e-10 * std::max(1.0, max_abs);
    if (res.first_bianchi > tol)
        throw std::runtime_error("tensor JSON: first Bianchi identity violated, residual " +
                                 std::to_string(res.first_bianchi));
    return R;
}

// {"n","N","eigenvalues","mean","scal"}
inline json spectrum_to_json(const Spectrum& spec, int n, double scal) {
    return json{{"n", n},
                {"N", spec.size()},
                {"eigenvalues", spec.values},
                {"mean", spec.mean},
                {"scal", scal}};
}

struct SpectrumFile {
    int n = 0;
    Spectrum spec;
    double scal = 0.0;
};

inline SpectrumFile spectrum_from_json(const json& j) {
    SpectrumFile out;
    if (!j.is_object() || !j.contains("eigenvalues"))
        throw std::runtime_error("spectrum JSON must carry \"eigenvalues\"");
    std::vector<double> vals = j.at("eigenvalues").get<std::vector<double>>();
    out.spec = make_spectrum(std::move(vals));
    out.n = j.value("n", 0);
    if (out.n != 0 && j.contains("N")) {
        const int N = j.at("N").get<int>();
        if (N != out.spec.size())
            throw std::runtime_error("spectrum JSON: N does not match eigenvalue count");
        if (N != traceless_sym2_dim(out.n))
            throw std::runtime_error("spectrum JSON: N does not match (n+2)(n-1)/2");
    }
    if (j.contains("mean")) {
        const double mean = j.at("mean").get<double>();
        const double scale = std::max(1e-300, std::fabs(out.spec.mean));
        if (std::fabs(mean - out.spec.mean) > 1e-12 * std::max(1.0, scale))
            throw std::runtime_error("spectrum JSON: stored mean disagrees with eigenvalues");
    }
    out.scal = j.value("scal", out.n > 1 ? double(out.n) * (out.n - 1) * out.spec.mean : 0.0);
    return out;
}

// {"n","norms","weyl_norm","sum_ratio","max_ratio"}
inline json profile_to_json(const ActionNormProfile& p) {
    const double denom = p.weyl_norm > 0.0 ? p.weyl_norm : 1.0;
    return json{{"n", p.n},
                {"norms", p.norms},
                {"weyl_norm", p.weyl_norm},
                {"sum_ratio", p.sum() / denom},
                {"max_ratio", p.max() / denom}};
}

// {"n","N","alpha","theta","alpha_max","regime"}
inline json threshold_to_json(int n, double alpha) {
    return json{{"n", n},
                {"N", traceless_sym2_dim(n)},
                {"alpha", alpha},
                {"theta", resolve_theta(n, alpha)},
                {"alpha_max", alpha_max(n)},
                {"regime", n >= 6 ? "high" : "low"}};
}

inline json model_spec_to_json(const ModelSpec& m) {
    json params;
    switch (m.kind) {
        case ModelKind::constant:
            params = {{"n", m.n}, {"kappa", m.kappa}};
            break;
        case ModelKind::flat:
            params = {{"n", m.n}};
            break;
        case ModelKind::fubini_study:
            params = {{"m", m.m}};
            break;
        case ModelKind::sphere_product:
            params = {{"p", m.p}, {"kappa1", m.kappa1}, {"q", m.q}, {"kappa2", m.kappa2}};
            break;
        default:
            params = {{"n", m.n}, {"scal", m.scal}, {"seed", m.seed}};
            break;
    }
    return json{{"kind", to_string(m.kind)}, {"params", std::move(params)}};
}

inline ModelSpec model_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::runtime_error("model JSON must carry \"kind\"");
    ModelSpec m;
    m.kind = model_kind_from_string(j.at("kind").get<std::string>());
    const json params = j.value("params", json::object());
    m.n = params.value("n", m.n);
    m.m = params.value("m", m.m);
    m.p = params.value("p", m.p);
    m.q = params.value("q", m.q);
    m.kappa = params.value("kappa", m.kappa);
    m.kappa1 = params.value("kappa1", m.kappa1);
    m.kappa2 = params.value("kappa2", m.kappa2);
    m.scal = params.value("scal", m.scal);
    m.seed = params.value("seed", m.seed);
    return m;
}

} // namespace curvop
