#include <catch2/catch_amalgamated.hpp>

#include "curvop/curvature.hpp"
#include "curvop/models.hpp"

#include <cmath>

using namespace curvop;

namespace {

double max_component_diff(const AlgCurvature& a, const AlgCurvature& b) {
    const int n = a.dim();
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    worst = std::max(worst, std::fabs(a.at(i, j, k, l) - b.at(i, j, k, l)));
    return worst;
}

double max_component(const AlgCurvature& a) {
    return max_component_diff(a, AlgCurvature(a.dim()));
}

int permutation_sign(int i, int j, int k, int l) {
    int p[4] = {i, j, k, l};
    int sign = 1;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) {
            if (p[a] == p[b]) return 0;
            if (p[a] > p[b]) sign = -sign;
        }
    return sign;
}

} // namespace

TEST_CASE("traceless symmetric basis has dimension (n+2)(n-1)/2", "[tensor_algebra]") {
    CHECK(Sym2Basis(2).size() == 2);
    CHECK(Sym2Basis(4).size() == 9);
    CHECK(Sym2Basis(6).size() == 20);
}

TEST_CASE("basis elements are traceless and orthonormal", "[tensor_algebra]") {
    for (int n : {2, 4, 6}) {
        const Sym2Basis basis(n);
        for (int a = 0; a < basis.size(); ++a) {
            CHECK(std::fabs(basis[a].trace()) <= 1e-12);
            for (int b = 0; b < basis.size(); ++b) {
                const double want = a == b ? 1.0 : 0.0;
                CHECK(std::fabs(inner(basis[a], basis[b]) - want) <= 1e-12);
            }
        }
    }
}

TEST_CASE("kulkarni-nomizu of the metric with itself", "[tensor_algebra]") {
    for (int n : {2, 3, 5}) {
        const Sym2 g = Sym2::metric(n);
        const AlgCurvature gg = kulkarni_nomizu(g, g);
        CHECK(gg.at(0, 1, 0, 1) == 2.0);
        CHECK(symmetry_residuals(gg).worst() <= 1e-12);
    }
    // full contraction sums 2 over every ordered off-diagonal index pair
    const Sym2 g3 = Sym2::metric(3);
    const AlgCurvature gg3 = kulkarni_nomizu(g3, g3);
    double contraction = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) contraction += gg3.at(i, j, i, j);
    CHECK(contraction == 12.0);
}

TEST_CASE("kulkarni-nomizu is bilinear in each slot", "[tensor_algebra]") {
    const Sym2 g = Sym2::metric(4);
    const Sym2 zero(4);
    CHECK(max_component(kulkarni_nomizu(g, zero)) == 0.0);
}

TEST_CASE("ricci and scalar of constant curvature", "[tensor_algebra]") {
    for (int n : {3, 4, 6}) {
        const double kappa = 1.5;
        const AlgCurvature R = constant_curvature(n, kappa);
        const Sym2 ric = ricci(R);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const double want = i == j ? kappa * (n - 1) : 0.0;
                CHECK(std::fabs(ric(i, j) - want) <= 1e-12);
            }
        CHECK(std::fabs(scalar(R) - kappa * n * (n - 1)) <= 1e-11);
    }
    CHECK(std::fabs(scalar(constant_curvature(4, 1.0)) - 12.0) <= 1e-12);
    CHECK(max_component(AlgCurvature(4)) == 0.0);
    CHECK(std::fabs(scalar(AlgCurvature(4))) == 0.0);
}

TEST_CASE("weyl decomposition of constant curvature has no weyl part", "[tensor_algebra]") {
    const AlgCurvature R = constant_curvature(5, 2.0);
    const CurvDecomposition d = weyl_decompose(R);
    CHECK(max_component(d.weyl) <= 1e-12);
    for (int i = 0; i < 5; ++i) CHECK(std::fabs(d.ricci(i, i) - 8.0) <= 1e-11);
}

TEST_CASE("weyl decomposition fixes trace-free tensors", "[tensor_algebra]") {
    const AlgCurvature W = weyl_decompose(random_einstein(5, 10.0, 11)).weyl;
    const CurvDecomposition d = weyl_decompose(W);
    CHECK(max_component_diff(d.weyl, W) <= 1e-11);
    double ric_max = 0.0;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) ric_max = std::max(ric_max, std::fabs(d.ricci(i, j)));
    CHECK(ric_max <= 1e-11);
}

TEST_CASE("decomposition recomposes to the input", "[tensor_algebra]") {
    for (std::uint64_t seed : {3u, 4u}) {
        const AlgCurvature R = random_einstein(6, 30.0, seed);
        CHECK(max_component_diff(recompose(weyl_decompose(R)), R) <= 1e-11);
    }
}

TEST_CASE("einstein tensor from weyl part and scalar", "[tensor_algebra]") {
    const AlgCurvature unit = einstein_from_weyl(AlgCurvature(6), 30.0);
    CHECK(max_component_diff(unit, constant_curvature(6, 1.0)) <= 1e-12);
    CHECK(max_component(einstein_from_weyl(AlgCurvature(4), 0.0)) == 0.0);

    const AlgCurvature W = weyl_decompose(random_einstein(5, 10.0, 7)).weyl;
    const AlgCurvature back = einstein_from_weyl(W, 0.0, 1e-8);
    CHECK(max_component_diff(back, W) <= 1e-11);
}

TEST_CASE("bianchi projection is idempotent and kills the alternating part", "[tensor_algebra]") {
    const AlgCurvature R = random_einstein(4, 12.0, 5);
    CHECK(max_component_diff(bianchi_project(R), R) <= 1e-12);

    AlgCurvature eps(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l) eps.at(i, j, k, l) = permutation_sign(i, j, k, l);
    CHECK(max_component(bianchi_project(eps)) <= 1e-12);

    AlgCurvature T = random_einstein(4, 12.0, 9);
    AlgCurvature bent = eps;
    bent *= 0.3;
    T += bent;
    const AlgCurvature once = bianchi_project(T);
    CHECK(max_component_diff(bianchi_project(once), once) <= 1e-12);
}

TEST_CASE("frobenius norm on curvature tensors", "[tensor_algebra]") {
    CHECK(frobenius(AlgCurvature(5)) == 0.0);
    for (int n : {3, 4, 6}) {
        const AlgCurvature R = constant_curvature(n, 1.0);
        CHECK(std::fabs(norm_sq(R) - 2.0 * n * (n - 1)) <= 1e-10);
        AlgCurvature scaled = R;
        scaled *= -2.5;
        CHECK(std::fabs(norm_sq(scaled) - 6.25 * norm_sq(R)) <= 1e-9);
    }
}

TEST_CASE("generated tensors satisfy the curvature symmetries", "[tensor_algebra]") {
    for (std::uint64_t seed : {0u, 1u, 2u}) {
        const SymmetryResiduals res = symmetry_residuals(random_einstein(5, 20.0, seed));
        CHECK(res.worst() <= 1e-12);
    }
    CHECK(symmetry_residuals(fubini_study(2)).worst() <= 1e-12);
    CHECK(symmetry_residuals(sphere_product(2, 1.0, 3, 1.0)).worst() <= 1e-12);
}
