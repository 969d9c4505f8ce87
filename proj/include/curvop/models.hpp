#pragma once

// Closed-form model tensors used as ground truth: space forms, Fubini-Study,
// product spheres, and a seeded random-Einstein generator.  Conventions match
// the rest of the library: orthonormal frame (g = identity), constant
// curvature kappa means R = (kappa/2) g wedge g, so R[0][1][0][1] = kappa.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "curvature.hpp"
#include "linalg.hpp"
#include "rng.hpp"

namespace curvop {

inline AlgCurvature constant_curvature(int n, double kappa) {
    if (n < 2) throw std::invalid_argument("constant_curvature: n must be >= 2");
    const Sym2 g = Sym2::metric(n);
    AlgCurvature R = kulkarni_nomizu(g, g);
    R *= kappa / 2.0;
    return R;
}

inline AlgCurvature flat_model(int n) { return constant_curvature(n, 0.0); }

// Complex projective space of complex dimension m (real dimension 2m) with
// holomorphic sectional curvature 1, in an adapted frame where the complex
// structure J pairs e_{2a} with e_{2a+1}:
//   R_ijkl = (g_ik g_jl - g_il g_jk + J_ik J_jl - J_il J_jk + 2 J_ij J_kl)/4.
// Sectional curvatures then range over [1/4, 1] and Scal = n(n+2)/4.
inline AlgCurvature fubini_study(int m) {
    if (m < 2) throw std::invalid_argument("fubini_study: m must be >= 2");
    const int n = 2 * m;
    Matrix J(n, n);
    for (int a = 0; a < m; ++a) {
        J(2 * a, 2 * a + 1) = 1.0;
        J(2 * a + 1, 2 * a) = -1.0;
    }
    const Sym2 g = Sym2::metric(n);
    AlgCurvature R(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    R.at(i, j, k, l) =
                        0.25 * (g(i, k) * g(j, l) - g(i, l) * g(j, k) +
                                J(i, k) * J(j, l) - J(i, l) * J(j, k) +
                                2.0 * J(i, j) * J(k, l));
    return R;
}

// Riemannian product of two round spheres: constant curvature kappa1 on the
// first p coordinates, kappa2 on the last q, no mixed components.  Einstein
// exactly when (p-1) kappa1 = (q-1) kappa2.
inline AlgCurvature sphere_product(int p, double kappa1, int q, double kappa2) {
    if (p < 2 || q < 2)
        throw std::invalid_argument("sphere_product: factor dimensions must be >= 2");
    const int n = p + q;
    AlgCurvature R(n);
    auto fill_block = [&R](int lo, int hi, double kappa) {
        for (int i = lo; i < hi; ++i)
            for (int j = lo; j < hi; ++j) {
                if (i == j) continue;
                R.at(i, j, i, j) = kappa;
                R.at(i, j, j, i) = -kappa;
            }
    };
    fill_block(0, p, kappa1);
    fill_block(p, n, kappa2);
    return R;
}

inline bool sphere_product_einstein(int p, double kappa1, int q, double kappa2,
                                    double tol = 1e-12) {
    const double lhs = double(p - 1) * kappa1;
    const double rhs = double(q - 1) * kappa2;
    return std::fabs(lhs - rhs) <= tol * std::max(1.0, std::max(std::fabs(lhs), std::fabs(rhs)));
}

// Seeded random Einstein tensor with prescribed scalar curvature: draw the
// free components of a pair-symmetric rank-4 array (i < j, k < l, upper pair
// triangle) from the standard normal, expand by the symmetries, remove the
// first-Bianchi defect, keep the Weyl part of the result, and attach the
// constant-curvature part matching scal.
inline AlgCurvature random_einstein(int n, double scal, std::uint64_t seed) {
    if (n < 4) throw std::invalid_argument("random_einstein: n must be >= 4");
    Rng rng(seed);
    AlgCurvature T(n);
    const auto pair_rank = [n](int i, int j) {
        // rank of (i, j), i < j, in lexicographic order
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    if (pair_rank(i, j) > pair_rank(k, l)) continue;
                    const double v = rng.gaussian();
                    T.at(i, j, k, l) = v;
                    T.at(j, i, k, l) = -v;
                    T.at(i, j, l, k) = -v;
                    T.at(j, i, l, k) = v;
                    T.at(k, l, i, j) = v;
                    T.at(l, k, i, j) = -v;
                    T.at(k, l, j, i) = -v;
                    T.at(l, k, j, i) = v;
                }
    const AlgCurvature projected = bianchi_project(T);
    const CurvDecomposition d = weyl_decompose(projected);
    return einstein_from_weyl(d.weyl, scal, 1e-8);
}

enum class ModelKind { constant, flat, fubini_study, sphere_product, random_einstein };

inline const char* to_string(ModelKind k) {
    switch (k) {
        case ModelKind::constant: return "constant";
        case ModelKind::flat: return "flat";
        case ModelKind::fubini_study: return "fubini_study";
        case ModelKind::sphere_product: return "sphere_product";
        default: return "random_einstein";
    }
}

inline ModelKind model_kind_from_string(const std::string& s) {
    if (s == "constant") return ModelKind::constant;
    if (s == "flat") return ModelKind::flat;
    if (s == "fubini_study") return ModelKind::fubini_study;
    if (s == "sphere_product") return ModelKind::sphere_product;
    if (s == "random_einstein") return ModelKind::random_einstein;
    throw std::invalid_argument("unknown model kind: " + s);
}

struct ModelSpec {
    ModelKind kind = ModelKind::constant;
    int n = 4;            // constant / flat / random_einstein
    int m = 2;            // fubini_study complex dimension
    int p = 2, q = 2;     // sphere_product factor dimensions
    double kappa = 1.0;   // constant
    double kappa1 = 1.0, kappa2 = 1.0;
    double scal = 1.0;    // random_einstein
    std::uint64_t seed = 0;
};

inline AlgCurvature build_model(const ModelSpec& spec) {
    switch (spec.kind) {
        case ModelKind::constant: return constant_curvature(spec.n, spec.kappa);
        case ModelKind::flat: return flat_model(spec.n);
        case ModelKind::fubini_study: return fubini_study(spec.m);
        case ModelKind::sphere_product:
            return sphere_product(spec.p, spec.kappa1, spec.q, spec.kappa2);
        default: return random_einstein(spec.n, spec.scal, spec.seed);
    }
}

inline int model_dimension(const ModelSpec& spec) {
    switch (spec.kind) {
        case ModelKind::fubini_study: return 2 * spec.m;
        case ModelKind::sphere_product: return spec.p + spec.q;
        default: return spec.n;
    }
}

} // namespace curvop
