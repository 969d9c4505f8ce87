#pragma once

// Curvature operators of the first and second kind.  The second-kind
// operator acts on traceless symmetric 2-tensors by phi |-> proj(Rbar(phi))
// with Rbar(phi)_ij = sum_kl R_iklj phi_kl; the projection is implicit
// because the matrix is assembled in a traceless basis.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvature.hpp"
#include "linalg.hpp"
#include "sym2.hpp"

namespace curvop {

// Rbar(phi)_ij = sum_kl R_iklj phi_kl
inline Sym2 sym2_action(const AlgCurvature& R, const Sym2& phi) {
    if (R.dim() != phi.dim())
        throw std::invalid_argument("sym2_action: dimension mismatch");
    const int n = R.dim();
    Sym2 out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) s += R.at(i, k, l, j) * phi(k, l);
            out(i, j) = s;
        }
    return out;
}

struct SecondKindOperator {
    int n = 0;
    Matrix matrix;  // N x N in the given traceless basis
};

inline SecondKindOperator second_kind_matrix(const AlgCurvature& R,
                                             const Sym2Basis& basis) {
    if (R.dim() != basis.dim())
        throw std::invalid_argument("second_kind_matrix: basis dimension mismatch");
    const int N = basis.size();
    SecondKindOperator op;
    op.n = R.dim();
    op.matrix = Matrix(std::size_t(N), std::size_t(N));
    for (int b = 0; b < N; ++b) {
        const Sym2 image = sym2_action(R, basis[b]);
        for (int a = 0; a < N; ++a) op.matrix(std::size_t(a), std::size_t(b)) = inner(image, basis[a]);
    }
    return op;
}

// First-kind operator on 2-forms in the ordered basis {e_i ^ e_j}_{i<j}:
// M[(kl)][(ij)] = R_klij (carries the quoted 1/2 against omega_kl = +-1).
inline Matrix first_kind_matrix(const AlgCurvature& R) {
    const int n = R.dim();
    const int m = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(std::size_t(m));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    Matrix M(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            M(std::size_t(a), std::size_t(b)) =
                R.at(pairs[std::size_t(a)].first, pairs[std::size_t(a)].second,
                     pairs[std::size_t(b)].first, pairs[std::size_t(b)].second);
    return M;
}

struct Spectrum {
    std::vector<double> values;  // ascending
    double mean = 0.0;

    int size() const { return int(values.size()); }
};

inline Spectrum make_spectrum(std::vector<double> values) {
    Spectrum s;
    s.values = std::move(values);
    std::stable_sort(s.values.begin(), s.values.end());
    double sum = 0.0;
    for (double v : s.values) sum += v;
    s.mean = s.values.empty() ? 0.0 : sum / double(s.values.size());
    return s;
}

inline Spectrum spectrum(const SecondKindOperator& op, double sym_tol = 1e-9) {
    const double asym = op.matrix.max_asymmetry();
    const double scale = std::max(1.0, op.matrix.frob_norm());
    if (asym > sym_tol * scale)
        throw std::invalid_argument("spectrum: matrix not symmetric, asymmetry " +
                                    std::to_string(asym));
    return make_spectrum(jacobi_eigvals(op.matrix));
}

struct SpectralDecomposition {
    Spectrum spec;
    Matrix vectors;  // column j pairs with spec.values[j]
};

inline SpectralDecomposition spectral_decomposition(const SecondKindOperator& op) {
    EighResult r = jacobi_eigh(op.matrix);
    SpectralDecomposition out;
    out.spec = make_spectrum(std::move(r.values));
    out.vectors = std::move(r.vectors);
    return out;
}

struct ScalConsistency {
    double scal = 0.0;            // from tensor contraction
    double from_spectrum = 0.0;   // n(n-1) * mean eigenvalue
    bool ok = false;
};

inline ScalConsistency scal_consistency(const AlgCurvature& R, const Spectrum& spec,
                                        double einstein_tol = 1e-8) {
    const double res = einstein_residual(R);
    const double sc = scalar(R);
    if (res > einstein_tol * std::max(1.0, std::fabs(sc)))
        throw std::invalid_argument("scal_consistency: tensor is not Einstein, residual " +
                                    std::to_string(res));
    ScalConsistency out;
    out.scal = sc;
    const int n = R.dim();
    out.from_spectrum = double(n) * double(n - 1) * spec.mean;
    out.ok = std::fabs(out.scal - out.from_spectrum) <=
             1e-8 * std::max(1.0, std::fabs(out.scal));
    return out;
}

} // namespace curvop
