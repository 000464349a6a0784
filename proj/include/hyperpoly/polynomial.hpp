#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace hyperpoly {

using Complex = std::complex<double>;

/**
 * Univariate polynomial with complex coefficients stored in ascending
 * degree order. Trailing zero coefficients are trimmed on construction, so
 * the leading coefficient is nonzero unless the polynomial is identically
 * zero (stored as the single coefficient 0, degree 0).
 */
class ScalarPolynomial {
public:
    ScalarPolynomial();
    explicit ScalarPolynomial(std::vector<Complex> coeffs);
    ScalarPolynomial(std::initializer_list<double> coeffs);

    static ScalarPolynomial from_real(std::span<const double> coeffs);
    /// Monic polynomial prod (z - r).
    static ScalarPolynomial from_roots(std::span<const double> roots);
    static ScalarPolynomial from_roots(std::span<const Complex> roots);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Complex{}; }
    bool is_monic() const { return coeffs_.back() == Complex{1.0, 0.0}; }
    /// True when every imaginary part is at most tol in magnitude.
    bool is_real(double tol = 0.0) const;

    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex operator[](std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Complex{}; }
    Complex leading() const { return coeffs_.back(); }
    /// Largest coefficient modulus.
    double norm_inf() const;

    Complex operator()(Complex z) const;
    double operator()(double x) const;  // real part of the value at a real point

    ScalarPolynomial derivative() const;
    /// Divides by the leading coefficient; throws PreconditionError on zero.
    ScalarPolynomial monic() const;
    /// Drops leading coefficients below rel_cutoff * norm_inf().
    ScalarPolynomial trimmed(double rel_cutoff) const;

    friend ScalarPolynomial operator+(const ScalarPolynomial& a, const ScalarPolynomial& b);
    friend ScalarPolynomial operator-(const ScalarPolynomial& a, const ScalarPolynomial& b);
    friend ScalarPolynomial operator*(const ScalarPolynomial& a, const ScalarPolynomial& b);
    friend ScalarPolynomial operator*(Complex s, const ScalarPolynomial& p);

private:
    std::vector<Complex> coeffs_;
};

/// Linear combination alpha*a + beta*b.
ScalarPolynomial combine(const ScalarPolynomial& a, double alpha, const ScalarPolynomial& b, double beta);

/// Max coefficient difference relative to max(1, largest coefficient of b).
double coeff_distance(const ScalarPolynomial& a, const ScalarPolynomial& b);

/**
 * Greatest common divisor test by a monic Euclidean remainder sequence.
 * A remainder is treated as zero once all its coefficients fall below
 * rel_cutoff times the norm of the running divisor.
 */
bool coprime(const ScalarPolynomial& a, const ScalarPolynomial& b, double rel_cutoff = 1e-10);

}  // namespace hyperpoly
