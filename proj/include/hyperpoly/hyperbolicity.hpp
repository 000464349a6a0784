#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperpoly/matrix_polynomial.hpp"
#include "hyperpoly/spectrum.hpp"

namespace hyperpoly {

/// Probe values of alpha for weak hyperbolicity of alpha L + (1 - alpha) M; reaches well outside [0, 1].
const std::vector<double>& default_alpha_grid();

/// det L(z) has n * ell real roots, counted with multiplicity (classified from det_roots).
bool is_weakly_hyperbolic(const MatrixPolynomial& l, double tol = 1e-8);

/**
 * The scalar polynomial <L(z)x, x> = sum_j (x^* L_j x) z^j. x is normalized
 * first when its norm is off by more than 1e-12; throws PreconditionError for
 * the zero vector.
 */
ScalarPolynomial scalar_section(const MatrixPolynomial& l, const ComplexVector& x);

/**
 * Monte Carlo hyperbolicity verdict. `hyperbolic == true` only means no
 * counterexample was found among the standard basis vectors and `samples`
 * seeded complex Gaussian unit vectors. A non-Hermitian coefficient is an
 * immediate counterexample and is reported through `coefficient_witness`.
 */
struct HyperbolicityVerdict {
    bool hyperbolic = false;
    std::optional<ComplexVector> witness;
    std::optional<int> coefficient_witness;
    int vectors_tested = 0;
};

HyperbolicityVerdict is_hyperbolic(const MatrixPolynomial& l, int samples = 200, std::uint64_t seed = 0,
                                   double tol = 1e-8);

struct StarFailure {
    double alpha;
    SpectrumComplex offending_roots;
};

/// Weak hyperbolicity of every real affine combination, probed on a grid, plus the leading-difference test.
struct StarReport {
    std::vector<double> alpha_grid;
    std::vector<StarFailure> failures;
    SpectrumComplex leading_diff_spectrum;  // eigenvalues of L_{ell-1} - M_{ell-1}
    bool leading_diff_real = false;
    bool verdict = false;  // failures empty and leading_diff_real
};

StarReport condition_star(const MatrixPolynomial& l, const MatrixPolynomial& m,
                          const std::vector<double>& alpha_grid = default_alpha_grid(), double tol = 1e-8);

/// P(alpha, beta, gamma) = det(alpha C_L + beta C_M - gamma I) as a polynomial in gamma.
ScalarPolynomial direction_poly(const MatrixPolynomial& l, const MatrixPolynomial& m, double alpha, double beta);

/**
 * Along alpha + beta = 0 the identity blocks of the companions cancel and
 * P(alpha, -alpha, gamma) = (-gamma)^{n(ell-1)} det(-alpha (L_{ell-1} - M_{ell-1}) - gamma I_n).
 * `formula` is gamma^{n(ell-1)} det(gamma I + alpha D), the monic form of the
 * right-hand side; `sign` is the sign that reconciles it with the direct
 * determinant and equals (-1)^{n ell} in exact arithmetic.
 */
struct DegenerationCheck {
    ScalarPolynomial direct;
    ScalarPolynomial formula;
    int sign = 1;
    double mismatch = 0.0;  // coeff_distance(direct, sign * formula)
};

DegenerationCheck degeneration_check(const MatrixPolynomial& l, const MatrixPolynomial& m, double alpha);

/// Sorted real roots of det(alpha L + (1 - alpha) M) against eigenvalues of alpha A + (1 - alpha) B.
struct CoincidenceReport {
    std::vector<double> alpha_grid;
    std::vector<double> mismatches;  // +inf where the determinant has non-real roots
    double max_mismatch = 0.0;
    bool verdict = false;
};

CoincidenceReport verify_coincidence(const MatrixPolynomial& l, const MatrixPolynomial& m, const SymmetricMatrix& a,
                                     const SymmetricMatrix& b,
                                     const std::vector<double>& alpha_grid = default_alpha_grid(),
                                     double tol = 1e-7, double root_tol = 1e-8);

/// L + t L' hyperbolic (Monte Carlo, shared seed) for every t in the grid; false when L itself is not.
bool derivative_pencil_check(const MatrixPolynomial& l, const std::vector<double>& t_grid, int samples = 200,
                             std::uint64_t seed = 0, double tol = 1e-8);

}  // namespace hyperpoly
