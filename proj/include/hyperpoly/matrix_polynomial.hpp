#pragma once

#include <vector>

#include "hyperpoly/polynomial.hpp"
#include "hyperpoly/spectrum.hpp"

namespace hyperpoly {

/// Matrix coefficients in ascending degree order, with no monicity requirement.
using MatrixCoefficients = std::vector<ComplexMatrix>;

/**
 * Monic n x n matrix polynomial L(z) = sum_j L_j z^j of degree ell with
 * L_ell = I. The leading coefficient is validated against the identity
 * within monic_tol on construction and then stored exactly.
 */
class MatrixPolynomial {
public:
    explicit MatrixPolynomial(MatrixCoefficients coeffs, double monic_tol = 1e-12);

    /// zI - H
    static MatrixPolynomial linear(const ComplexMatrix& h);
    /// 1 x 1 polynomial from a monic scalar polynomial.
    static MatrixPolynomial from_scalar(const ScalarPolynomial& f);
    /// diag(f_1, ..., f_n) for monic scalar polynomials of equal degree.
    static MatrixPolynomial diagonal(const std::vector<ScalarPolynomial>& entries);

    Eigen::Index size() const { return n_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const ComplexMatrix& coeff(int j) const { return coeffs_[static_cast<std::size_t>(j)]; }
    const MatrixCoefficients& coeffs() const { return coeffs_; }

    bool is_hermitian(double tol) const;
    bool is_diagonal(double tol) const;
    bool is_real(double tol) const;
    /// Scalar polynomial sitting at diagonal entry (i, i).
    ScalarPolynomial diagonal_entry(Eigen::Index i) const;

private:
    Eigen::Index n_ = 0;
    MatrixCoefficients coeffs_;
};

/// Horner evaluation of L at z.
ComplexMatrix eval(const MatrixPolynomial& p, Complex z);

/// Coefficients (j+1) L_{j+1} of L'(z); degree ell - 1. Throws PreconditionError for ell = 0.
MatrixCoefficients derivative(const MatrixPolynomial& p);

/// L(z) + t L'(z), which stays monic because deg L' < ell.
MatrixPolynomial add_derivative(const MatrixPolynomial& p, double t);

/// alpha L + (1 - alpha) M with exact identity leading coefficient.
MatrixPolynomial affine_combine(const MatrixPolynomial& l, const MatrixPolynomial& m, double alpha);

/// L(z - c).
MatrixPolynomial shifted(const MatrixPolynomial& p, double c);

/// Block companion matrix: identities on the block superdiagonal, -L_0 .. -L_{ell-1} in the last block row.
ComplexMatrix companion(const MatrixPolynomial& p);

/**
 * det L(z) as a monic scalar polynomial of degree n * ell, interpolated from
 * determinant values at the n * ell + 1 roots of unity on circles of radius
 * ||C||_F 2^-t (C the companion matrix). Each coefficient comes from the
 * circle with the smallest error bound max|det| / R^j, so low-order
 * coefficients stay accurate when the root moduli spread over decades.
 */
ScalarPolynomial det_poly(const MatrixPolynomial& p);

/// det_poly before the final normalization; the leading coefficient should be 1 up to rounding.
ScalarPolynomial det_poly_raw(const MatrixPolynomial& p);

/**
 * Roots of det L(z) as eigenvalues of the block companion matrix. Same set as
 * poly_roots(det_poly(L)), but multiple roots that are semisimple (diagonal
 * or Hermitian structure) stay accurate to rounding instead of sqrt(eps).
 */
SpectrumComplex det_roots(const MatrixPolynomial& p);

/// Characteristic polynomial det(zI - X) of a square matrix.
ScalarPolynomial char_poly(const ComplexMatrix& x);

/// Max row-sum norm.
double row_sum_norm(const ComplexMatrix& m);

}  // namespace hyperpoly
