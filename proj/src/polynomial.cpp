#include "hyperpoly/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "hyperpoly/errors.hpp"

namespace hyperpoly {

namespace {

void trim_exact(std::vector<Complex>& c) {
    while (c.size() > 1 && c.back() == Complex{}) c.pop_back();
    if (c.empty()) c.push_back(Complex{});
}

double max_abs(const std::vector<Complex>& c) {
    double m = 0.0;
    for (const auto& v : c) m = std::max(m, std::abs(v));
    return m;
}

// Remainder of a / b for monic b, trimmed relative to the divisor scale.
std::vector<Complex> remainder_monic(std::vector<Complex> a, const std::vector<Complex>& b, double cutoff) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db && a.size() > 0) {
        const Complex q = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= q * b[j];
        a.pop_back();
    }
    const double scale = std::max(1.0, max_abs(b));
    while (!a.empty() && std::abs(a.back()) <= cutoff * scale) a.pop_back();
    return a;
}

}  // namespace

ScalarPolynomial::ScalarPolynomial() : coeffs_{Complex{}} {}

ScalarPolynomial::ScalarPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    trim_exact(coeffs_);
}

ScalarPolynomial::ScalarPolynomial(std::initializer_list<double> coeffs)
    : coeffs_(coeffs.begin(), coeffs.end()) {
    trim_exact(coeffs_);
}

ScalarPolynomial ScalarPolynomial::from_real(std::span<const double> coeffs) {
    return ScalarPolynomial(std::vector<Complex>(coeffs.begin(), coeffs.end()));
}

ScalarPolynomial ScalarPolynomial::from_roots(std::span<const double> roots) {
    std::vector<Complex> r(roots.begin(), roots.end());
    return from_roots(std::span<const Complex>(r));
}

ScalarPolynomial ScalarPolynomial::from_roots(std::span<const Complex> roots) {
    std::vector<Complex> c{Complex{1.0}};
    for (const auto& r : roots) {
        std::vector<Complex> next(c.size() + 1, Complex{});
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j + 1] += c[j];
            next[j] -= r * c[j];
        }
        c = std::move(next);
    }
    return ScalarPolynomial(std::move(c));
}

bool ScalarPolynomial::is_real(double tol) const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [tol](const Complex& c) { return std::abs(c.imag()) <= tol; });
}

double ScalarPolynomial::norm_inf() const { return max_abs(coeffs_); }

Complex ScalarPolynomial::operator()(Complex z) const {
    Complex acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double ScalarPolynomial::operator()(double x) const { return (*this)(Complex{x, 0.0}).real(); }

ScalarPolynomial ScalarPolynomial::derivative() const {
    if (coeffs_.size() == 1) return ScalarPolynomial();
    std::vector<Complex> d(coeffs_.size() - 1);
    for (std::size_t j = 1; j < coeffs_.size(); ++j) d[j - 1] = static_cast<double>(j) * coeffs_[j];
    return ScalarPolynomial(std::move(d));
}

ScalarPolynomial ScalarPolynomial::monic() const {
    if (is_zero()) throw PreconditionError("cannot normalize the zero polynomial");
    std::vector<Complex> c(coeffs_);
    const Complex lead = c.back();
    for (auto& v : c) v /= lead;
    c.back() = Complex{1.0, 0.0};
    return ScalarPolynomial(std::move(c));
}

ScalarPolynomial ScalarPolynomial::trimmed(double rel_cutoff) const {
    const double cut = rel_cutoff * norm_inf();
    std::vector<Complex> c(coeffs_);
    while (c.size() > 1 && std::abs(c.back()) <= cut) c.pop_back();
    return ScalarPolynomial(std::move(c));
}

ScalarPolynomial operator+(const ScalarPolynomial& a, const ScalarPolynomial& b) {
    std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Complex{});
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = a[j] + b[j];
    return ScalarPolynomial(std::move(c));
}

ScalarPolynomial operator-(const ScalarPolynomial& a, const ScalarPolynomial& b) {
    std::vector<Complex> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Complex{});
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = a[j] - b[j];
    return ScalarPolynomial(std::move(c));
}

ScalarPolynomial operator*(const ScalarPolynomial& a, const ScalarPolynomial& b) {
    std::vector<Complex> c(a.coeffs_.size() + b.coeffs_.size() - 1, Complex{});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return ScalarPolynomial(std::move(c));
}

ScalarPolynomial operator*(Complex s, const ScalarPolynomial& p) {
    std::vector<Complex> c(p.coeffs_);
    for (auto& v : c) v *= s;
    return ScalarPolynomial(std::move(c));
}

ScalarPolynomial combine(const ScalarPolynomial& a, double alpha, const ScalarPolynomial& b, double beta) {
    std::vector<Complex> c(static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1), Complex{});
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = alpha * a[j] + beta * b[j];
    return ScalarPolynomial(std::move(c));
}

double coeff_distance(const ScalarPolynomial& a, const ScalarPolynomial& b) {
    const std::size_t len = static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1);
    double diff = 0.0;
    for (std::size_t j = 0; j < len; ++j) diff = std::max(diff, std::abs(a[j] - b[j]));
    return diff / std::max(1.0, b.norm_inf());
}

bool coprime(const ScalarPolynomial& a, const ScalarPolynomial& b, double rel_cutoff) {
    if (a.is_zero() || b.is_zero()) return false;
    std::vector<Complex> r0 = a.monic().coeffs();
    std::vector<Complex> r1 = b.monic().coeffs();
    if (r0.size() < r1.size()) std::swap(r0, r1);
    while (true) {
        if (r1.size() == 1) return true;  // nonzero constant divisor
        std::vector<Complex> r2 = remainder_monic(r0, r1, rel_cutoff);
        if (r2.empty()) return false;     // divisor of degree >= 1 divides
        const Complex lead = r2.back();
        for (auto& v : r2) v /= lead;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
}

}  // namespace hyperpoly
