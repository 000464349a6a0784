#pragma once

// Shared random generators for the test suites.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "hyperpoly/matrix_polynomial.hpp"
#include "hyperpoly/polynomial.hpp"
#include "hyperpoly/spectrum.hpp"

namespace hyperpoly::testing {

using Rng = std::mt19937_64;

inline double normal(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }
inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline ComplexMatrix random_complex(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex{normal(rng), normal(rng)};
    return m;
}

inline RealMatrix random_real(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
    RealMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = normal(rng);
    return m;
}

inline SymmetricMatrix random_symmetric(Rng& rng, Eigen::Index m) {
    const RealMatrix g = random_real(rng, m, m);
    return SymmetricMatrix(0.5 * (g + g.transpose()));
}

inline ComplexMatrix random_hermitian(Rng& rng, Eigen::Index m) {
    const ComplexMatrix g = random_complex(rng, m, m);
    return 0.5 * (g + g.adjoint());
}

/// Monic matrix polynomial with complex Gaussian lower coefficients.
inline MatrixPolynomial random_monic(Rng& rng, Eigen::Index n, int ell) {
    MatrixCoefficients c;
    for (int j = 0; j < ell; ++j) c.push_back(random_complex(rng, n, n));
    c.push_back(ComplexMatrix::Identity(n, n));
    return MatrixPolynomial(std::move(c));
}

/// Sorted, roughly unit-spaced, jittered real roots centred on 0.
inline std::vector<double> spread_roots(Rng& rng, int ell) {
    std::vector<double> r;
    for (int i = 0; i < ell; ++i) r.push_back(i - 0.5 * (ell - 1) + uniform(rng, -0.3, 0.3));
    std::sort(r.begin(), r.end());
    return r;
}

/// Real parts of the coefficients, keeping the polynomial monic.
inline ScalarPolynomial real_part(const ScalarPolynomial& p) {
    std::vector<double> c;
    for (const auto& v : p.coeffs()) c.push_back(v.real());
    c.back() = 1.0;
    return ScalarPolynomial::from_real(c);
}

struct ScalarPair {
    ScalarPolynomial f;
    ScalarPolynomial h;
};

/**
 * Interlacing pair by the rank-one recipe: f = det(zI - A), h = det(zI - A - s x x^T)
 * with A diagonal. Roots are unit-spaced and |x_j| in [0.5, 1.5].
 */
inline ScalarPair rank_one_pair(Rng& rng, int ell) {
    const std::vector<double> lam = spread_roots(rng, ell);
    RealVector x(ell);
    for (int j = 0; j < ell; ++j) x(j) = uniform(rng, 0.5, 1.5) * (uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0);
    const double s = uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0;
    RealMatrix a = RealMatrix::Zero(ell, ell);
    for (int j = 0; j < ell; ++j) a(j, j) = lam[static_cast<std::size_t>(j)];
    const RealMatrix b = a + s * x * x.transpose();
    return {ScalarPolynomial::from_roots(std::span<const double>(lam)),
            real_part(char_poly(b.cast<Complex>()))};
}

/// Independent monic polynomials with Gaussian real coefficients.
inline ScalarPolynomial random_real_monic(Rng& rng, int ell) {
    std::vector<double> c;
    for (int j = 0; j < ell; ++j) c.push_back(normal(rng));
    c.push_back(1.0);
    return ScalarPolynomial::from_real(c);
}

}  // namespace hyperpoly::testing
