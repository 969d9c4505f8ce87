#include <catch2/catch_amalgamated.hpp>

#include "curvop/models.hpp"
#include "curvop/second_kind.hpp"

#include <cmath>

using namespace curvop;

TEST_CASE("curvature action on symmetric 2-tensors for constant curvature", "[second_kind]") {
    const int n = 5;
    const double kappa = 2.0;
    const AlgCurvature R = constant_curvature(n, kappa);

    Sym2 phi(n);
    phi(0, 1) = phi(1, 0) = 1.0;
    phi(0, 0) = 1.0;
    phi(1, 1) = -1.0;
    const Sym2 out = sym2_action(R, phi);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            CHECK(std::fabs(out(i, j) - kappa * phi(i, j)) <= 1e-12);

    const Sym2 on_metric = sym2_action(R, Sym2::metric(n));
    for (int i = 0; i < n; ++i)
        CHECK(std::fabs(on_metric(i, i) - kappa * (1.0 - n)) <= 1e-12);

    const Sym2 zero_out = sym2_action(AlgCurvature(n), phi);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(zero_out(i, j) == 0.0);
}

TEST_CASE("second kind matrix of constant curvature is kappa times identity", "[second_kind]") {
    const int n = 4;
    const Sym2Basis basis(n);
    const SecondKindOperator op = second_kind_matrix(constant_curvature(n, 3.0), basis);
    for (int a = 0; a < basis.size(); ++a)
        for (int b = 0; b < basis.size(); ++b) {
            const double want = a == b ? 3.0 : 0.0;
            CHECK(std::fabs(op.matrix(std::size_t(a), std::size_t(b)) - want) <= 1e-11);
        }

    const SecondKindOperator zero_op = second_kind_matrix(AlgCurvature(n), basis);
    for (int a = 0; a < basis.size(); ++a)
        for (int b = 0; b < basis.size(); ++b)
            CHECK(zero_op.matrix(std::size_t(a), std::size_t(b)) == 0.0);
}

TEST_CASE("second kind matrix is symmetric on random Einstein tensors", "[second_kind]") {
    for (std::uint64_t seed : {1u, 2u}) {
        const int n = 5;
        const SecondKindOperator op =
            second_kind_matrix(random_einstein(n, 20.0, seed), Sym2Basis(n));
        const int N = traceless_sym2_dim(n);
        double asym = 0.0;
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b)
                asym = std::max(asym, std::fabs(op.matrix(std::size_t(a), std::size_t(b)) -
                                                op.matrix(std::size_t(b), std::size_t(a))));
        CHECK(asym <= 1e-11);
    }
}

TEST_CASE("first kind matrix on 2-forms", "[second_kind]") {
    const Matrix M = first_kind_matrix(constant_curvature(4, 2.0));
    CHECK(M.rows() == 6);
    CHECK(M.cols() == 6);
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            const double want = a == b ? 2.0 : 0.0;
            CHECK(std::fabs(M(a, b) - want) <= 1e-12);
        }

    const Matrix Z = first_kind_matrix(AlgCurvature(4));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) CHECK(Z(a, b) == 0.0);
}

TEST_CASE("spectrum of diagonal and identity operators", "[second_kind]") {
    const int n = 4;
    const int N = traceless_sym2_dim(n);

    SecondKindOperator ident;
    ident.n = n;
    ident.matrix = Matrix(std::size_t(N), std::size_t(N));
    for (std::size_t a = 0; a < std::size_t(N); ++a) ident.matrix(a, a) = 2.5;
    const Spectrum s1 = spectrum(ident);
    for (double v : s1.values) CHECK(std::fabs(v - 2.5) <= 1e-13);
    CHECK(std::fabs(s1.mean - 2.5) <= 1e-13);

    SecondKindOperator diag;
    diag.n = n;
    diag.matrix = Matrix(std::size_t(N), std::size_t(N));
    for (std::size_t a = 0; a < std::size_t(N); ++a) diag.matrix(a, a) = double(a + 1);
    const Spectrum s2 = spectrum(diag);
    for (int j = 0; j < N; ++j) CHECK(std::fabs(s2.values[std::size_t(j)] - (j + 1)) <= 1e-12);
}

TEST_CASE("eigenvalue sum matches the trace", "[second_kind]") {
    const int n = 6;
    const SecondKindOperator op =
        second_kind_matrix(random_einstein(n, 30.0, 13), Sym2Basis(n));
    const Spectrum s = spectrum(op);
    double trace = 0.0;
    for (std::size_t a = 0; a < op.matrix.rows(); ++a) trace += op.matrix(a, a);
    double sum = 0.0;
    for (double v : s.values) sum += v;
    CHECK(std::fabs(sum - trace) <= 1e-10 * std::max(1.0, std::fabs(trace)));
}

TEST_CASE("make_spectrum sorts and averages", "[second_kind]") {
    const Spectrum s = make_spectrum({3.0, -1.0, 2.0});
    CHECK(s.values[0] == -1.0);
    CHECK(s.values[1] == 2.0);
    CHECK(s.values[2] == 3.0);
    CHECK(std::fabs(s.mean - 4.0 / 3.0) <= 1e-15);
}

TEST_CASE("spectral decomposition returns an eigenbasis", "[second_kind]") {
    const int n = 4;
    const SecondKindOperator op =
        second_kind_matrix(random_einstein(n, 12.0, 21), Sym2Basis(n));
    const SpectralDecomposition d = spectral_decomposition(op);
    const int N = traceless_sym2_dim(n);
    for (int j = 0; j < N; ++j) {
        double residual = 0.0;
        for (int r = 0; r < N; ++r) {
            double mv = 0.0;
            for (int c = 0; c < N; ++c)
                mv += op.matrix(std::size_t(r), std::size_t(c)) *
                      d.vectors(std::size_t(c), std::size_t(j));
            residual = std::max(residual,
                                std::fabs(mv - d.spec.values[std::size_t(j)] *
                                                   d.vectors(std::size_t(r), std::size_t(j))));
        }
        CHECK(residual <= 1e-9);
    }
}

TEST_CASE("scalar curvature equals n(n-1) times the mean eigenvalue", "[second_kind]") {
    const AlgCurvature R6 = constant_curvature(6, 1.0);
    const Spectrum s6 = spectrum(second_kind_matrix(R6, Sym2Basis(6)));
    const ScalConsistency c6 = scal_consistency(R6, s6);
    CHECK(std::fabs(c6.scal - 30.0) <= 1e-10);
    CHECK(std::fabs(c6.from_spectrum - 30.0) <= 1e-10);
    CHECK(c6.ok);

    const AlgCurvature flat = flat_model(5);
    const ScalConsistency cf =
        scal_consistency(flat, spectrum(second_kind_matrix(flat, Sym2Basis(5))));
    CHECK(cf.scal == 0.0);
    CHECK(cf.ok);

    const AlgCurvature R5 = random_einstein(5, 17.0, 31);
    const ScalConsistency c5 =
        scal_consistency(R5, spectrum(second_kind_matrix(R5, Sym2Basis(5))));
    CHECK(c5.ok);
}
