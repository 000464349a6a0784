#include "hyperpoly/matrix_polynomial.hpp"

#include <Eigen/LU>

#include <cmath>
#include <numbers>

#include "hyperpoly/errors.hpp"

namespace hyperpoly {

namespace {

Complex determinant(const ComplexMatrix& m) {
    if (m.rows() == 1) return m(0, 0);
    return m.partialPivLu().determinant();
}

}  // namespace

MatrixPolynomial::MatrixPolynomial(MatrixCoefficients coeffs, double monic_tol) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw ShapeError("matrix polynomial needs at least one coefficient");
    n_ = coeffs_.back().rows();
    for (const auto& c : coeffs_) {
        if (c.rows() != n_ || c.cols() != n_) throw ShapeError("coefficient matrices must all be n x n");
    }
    const ComplexMatrix eye = ComplexMatrix::Identity(n_, n_);
    if (n_ > 0 && (coeffs_.back() - eye).cwiseAbs().maxCoeff() > monic_tol) {
        throw ShapeError("leading coefficient is not the identity");
    }
    coeffs_.back() = eye;
}

MatrixPolynomial MatrixPolynomial::linear(const ComplexMatrix& h) {
    if (h.rows() != h.cols()) throw ShapeError("linear pencil needs a square matrix");
    return MatrixPolynomial({-h, ComplexMatrix::Identity(h.rows(), h.cols())});
}

MatrixPolynomial MatrixPolynomial::from_scalar(const ScalarPolynomial& f) {
    if (!f.is_monic()) throw ShapeError("scalar polynomial is not monic");
    MatrixCoefficients c;
    for (const auto& v : f.coeffs()) c.push_back(ComplexMatrix::Constant(1, 1, v));
    return MatrixPolynomial(std::move(c));
}

MatrixPolynomial MatrixPolynomial::diagonal(const std::vector<ScalarPolynomial>& entries) {
    if (entries.empty()) throw ShapeError("diagonal polynomial needs at least one entry");
    const int ell = entries.front().degree();
    const auto n = static_cast<Eigen::Index>(entries.size());
    MatrixCoefficients c(static_cast<std::size_t>(ell + 1), ComplexMatrix::Zero(n, n));
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& f = entries[static_cast<std::size_t>(i)];
        if (f.degree() != ell || !f.is_monic()) throw ShapeError("diagonal entries must be monic of equal degree");
        for (int j = 0; j <= ell; ++j) c[static_cast<std::size_t>(j)](i, i) = f[static_cast<std::size_t>(j)];
    }
    return MatrixPolynomial(std::move(c));
}

bool MatrixPolynomial::is_hermitian(double tol) const {
    for (const auto& c : coeffs_) {
        if (n_ > 0 && (c - c.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
    }
    return true;
}

bool MatrixPolynomial::is_diagonal(double tol) const {
    for (const auto& c : coeffs_)
        for (Eigen::Index i = 0; i < n_; ++i)
            for (Eigen::Index j = 0; j < n_; ++j)
                if (i != j && std::abs(c(i, j)) > tol) return false;
    return true;
}

bool MatrixPolynomial::is_real(double tol) const {
    for (const auto& c : coeffs_) {
        if (n_ > 0 && c.imag().cwiseAbs().maxCoeff() > tol) return false;
    }
    return true;
}

ScalarPolynomial MatrixPolynomial::diagonal_entry(Eigen::Index i) const {
    std::vector<Complex> c;
    c.reserve(coeffs_.size());
    for (const auto& m : coeffs_) c.push_back(m(i, i));
    return ScalarPolynomial(std::move(c));
}

ComplexMatrix eval(const MatrixPolynomial& p, Complex z) {
    ComplexMatrix acc = p.coeff(p.degree());
    for (int j = p.degree() - 1; j >= 0; --j) acc = acc * z + p.coeff(j);
    return acc;
}

MatrixCoefficients derivative(const MatrixPolynomial& p) {
    if (p.degree() < 1) throw PreconditionError("derivative of a degree-0 matrix polynomial");
    MatrixCoefficients d;
    for (int j = 1; j <= p.degree(); ++j) d.push_back(static_cast<double>(j) * p.coeff(j));
    return d;
}

MatrixPolynomial add_derivative(const MatrixPolynomial& p, double t) {
    const MatrixCoefficients d = derivative(p);
    MatrixCoefficients c = p.coeffs();
    for (std::size_t j = 0; j < d.size(); ++j) c[j] += t * d[j];
    return MatrixPolynomial(std::move(c));
}

MatrixPolynomial affine_combine(const MatrixPolynomial& l, const MatrixPolynomial& m, double alpha) {
    if (l.size() != m.size() || l.degree() != m.degree()) {
        throw ShapeError("affine combination needs equal size and degree");
    }
    MatrixCoefficients c;
    for (int j = 0; j < l.degree(); ++j) c.push_back(alpha * l.coeff(j) + (1.0 - alpha) * m.coeff(j));
    c.push_back(ComplexMatrix::Identity(l.size(), l.size()));
    return MatrixPolynomial(std::move(c));
}

MatrixPolynomial shifted(const MatrixPolynomial& p, double c) {
    const int ell = p.degree();
    const Eigen::Index n = p.size();
    MatrixCoefficients out(static_cast<std::size_t>(ell + 1), ComplexMatrix::Zero(n, n));
    for (int j = 0; j <= ell; ++j) {
        double binom = 1.0;  // C(j, k)
        for (int k = 0; k <= j; ++k) {
            out[static_cast<std::size_t>(k)] += binom * std::pow(-c, j - k) * p.coeff(j);
            binom = binom * static_cast<double>(j - k) / static_cast<double>(k + 1);
        }
    }
    return MatrixPolynomial(std::move(out), 1e-9);
}

ComplexMatrix companion(const MatrixPolynomial& p) {
    const Eigen::Index n = p.size();
    const int ell = p.degree();
    const Eigen::Index big = n * ell;
    ComplexMatrix c = ComplexMatrix::Zero(big, big);
    for (int b = 0; b + 1 < ell; ++b) c.block(b * n, (b + 1) * n, n, n).setIdentity();
    for (int j = 0; j < ell; ++j) c.block((ell - 1) * n, j * n, n, n) = -p.coeff(j);
    return c;
}

double row_sum_norm(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    return m.cwiseAbs().rowwise().sum().maxCoeff();
}

ScalarPolynomial det_poly_raw(const MatrixPolynomial& p) {
    const int deg = static_cast<int>(p.size()) * p.degree();
    if (deg == 0) return ScalarPolynomial({1.0});
    // ||C||_F bounds every root modulus.
    const double top = std::max(companion(p).norm(), 1.0);
    // Values at N = deg + 1 points on |z| = R give R^j c_j by an inverse DFT,
    // with absolute error about eps * max|det| / R^j. One radius cannot serve
    // every coefficient when the root moduli spread, so each c_j is read from
    // the circle in a halving sequence that minimizes max|det| / R^j.
    const int nodes = deg + 1;
    constexpr int kRadii = 24;
    std::vector<Complex> mono(static_cast<std::size_t>(nodes));
    std::vector<double> best(static_cast<std::size_t>(nodes), INFINITY);
    std::vector<Complex> vals(static_cast<std::size_t>(nodes));
    for (int t = 0; t < kRadii; ++t) {
        const double radius = std::ldexp(top, -t);
        double peak = 0.0;
        for (int k = 0; k < nodes; ++k) {
            vals[static_cast<std::size_t>(k)] = determinant(eval(p, std::polar(radius, 2.0 * std::numbers::pi * k / nodes)));
            peak = std::max(peak, std::abs(vals[static_cast<std::size_t>(k)]));
        }
        double scale = 1.0;
        for (int j = 0; j < nodes; ++j) {
            const double err = peak / scale;
            if (err < best[static_cast<std::size_t>(j)]) {
                Complex acc{};
                for (int k = 0; k < nodes; ++k)
                    acc += vals[static_cast<std::size_t>(k)] *
                           std::polar(1.0, -2.0 * std::numbers::pi * ((j * k) % nodes) / nodes);
                mono[static_cast<std::size_t>(j)] = acc / (static_cast<double>(nodes) * scale);
                best[static_cast<std::size_t>(j)] = err;
            }
            scale *= radius;
        }
    }
    return ScalarPolynomial(std::move(mono));
}

ScalarPolynomial det_poly(const MatrixPolynomial& p) {
    const int deg = static_cast<int>(p.size()) * p.degree();
    std::vector<Complex> c = det_poly_raw(p).coeffs();
    c.resize(static_cast<std::size_t>(deg + 1), Complex{});
    const Complex lead = c.back();
    for (auto& v : c) v /= lead;
    c.back() = Complex{1.0};
    return ScalarPolynomial(std::move(c));
}

SpectrumComplex det_roots(const MatrixPolynomial& p) {
    if (p.size() == 0 || p.degree() == 0) return {};
    return gen_eigs(companion(p));
}

ScalarPolynomial char_poly(const ComplexMatrix& x) { return det_poly(MatrixPolynomial::linear(x)); }

}  // namespace hyperpoly
