#pragma once

#include <cstdint>
#include <vector>

#include "hyperpoly/polynomial.hpp"
#include "hyperpoly/spectrum.hpp"

namespace hyperpoly {

struct SdpOptions {
    double pd_margin = 1e-7;  // smallest eigenvalue of the unit-Frobenius P
    double eq_tol = 1e-8;     // largest Frobenius residual of an equality group
    int starts = 8;
    int iterations = 500;
    std::uint64_t seed = 0;
};

/// h / f = 1 + c (zI - A)^{-1} b in controllable canonical form.
struct Realization {
    RealMatrix a;  // companion(f)
    RealVector b;  // last unit vector
    RealVector c;  // coefficients of h - f, ascending
};

/**
 * Canonical minimal realization of h / f. The transfer identity is checked
 * at 2 ell points off the real axis before returning (DegenerateError on failure).
 * Throws ShapeError for non-monic, unequal-degree or complex input and
 * PreconditionError for a common factor.
 */
Realization minimal_realization(const ScalarPolynomial& f, const ScalarPolynomial& h);

struct SymmetrizerCertificate {
    SymmetricMatrix p;  // unit Frobenius norm
    double min_eig = 0.0;
    double constraint_residual = 0.0;
    bool feasible = false;
    /// Realization form only: P c^T = rhs_scale * b for the normalized P.
    double rhs_scale = 0.0;
};

struct MaxMinEig {
    SymmetricMatrix p;
    double min_eig = 0.0;
};

/**
 * Maximizes lambda_min over unit-Frobenius elements of span(basis). Projected
 * ascent on the sphere with a smoothed-minimum gradient and backtracking on the
 * exact smallest eigenvalue, from several seeded starts. An empty basis gives
 * min_eig = -inf and a zero P of size `size`.
 * Throws ShapeError on mixed sizes, PreconditionError on a dependent basis.
 */
MaxMinEig subspace_max_min_eig(const std::vector<SymmetricMatrix>& basis, Eigen::Index size,
                               const SdpOptions& opts = {});

/// Orthonormal (Frobenius) basis of {P symmetric : P C = C^T P for every C in cs}.
std::vector<SymmetricMatrix> symmetrizer_subspace(const std::vector<RealMatrix>& cs);

/// Positive definite P with P C_f = C_f^T P and P C_h = C_h^T P.
SymmetrizerCertificate feasibility_symmetrizer(const RealMatrix& cf, const RealMatrix& ch, const SdpOptions& opts = {});

/**
 * Positive definite P with A P = P A^T and P c^T parallel to b. The scale of
 * P c^T along b is reported in rhs_scale; its sign matches the sign of the
 * residues of h / f, so P / |rhs_scale| solves P c^T = sign * b exactly.
 */
SymmetrizerCertificate feasibility_realization(const Realization& r, const SdpOptions& opts = {});

/// Relative asymmetry ||X - X^T||_F / max(1, ||X||_F) of X = D C D^{-1}, D = P^{1/2}.
double congruence_asymmetry(const SymmetricMatrix& p, const RealMatrix& c);

}  // namespace hyperpoly
