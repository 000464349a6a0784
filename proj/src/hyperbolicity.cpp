#include "hyperpoly/hyperbolicity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "hyperpoly/errors.hpp"

namespace hyperpoly {

namespace {

bool section_real_rooted(const MatrixPolynomial& l, const ComplexVector& x, double tol) {
    const ScalarPolynomial s = scalar_section(l, x);
    return real_root_classify(poly_roots(s.monic()), tol).all_real;
}

ComplexVector random_unit(std::mt19937_64& rng, Eigen::Index n) {
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexVector x(n);
    do {
        for (Eigen::Index i = 0; i < n; ++i) x(i) = Complex{g(rng), g(rng)};
    } while (x.norm() == 0.0);
    return x / x.norm();
}

ScalarPolynomial times_power(const ScalarPolynomial& p, int k) {
    std::vector<Complex> c(static_cast<std::size_t>(k), Complex{});
    c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
    return ScalarPolynomial(std::move(c));
}

}  // namespace

const std::vector<double>& default_alpha_grid() {
    static const std::vector<double> grid{-10.0, -3.0, -1.0, -0.5, 0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 3.0, 10.0};
    return grid;
}

bool is_weakly_hyperbolic(const MatrixPolynomial& l, double tol) {
    return real_root_classify(det_roots(l), tol).all_real;
}

ScalarPolynomial scalar_section(const MatrixPolynomial& l, const ComplexVector& x) {
    if (x.size() != l.size()) throw ShapeError("section vector has the wrong length");
    const double nrm = x.norm();
    if (nrm == 0.0) throw PreconditionError("section vector is zero");
    const ComplexVector u = std::abs(nrm - 1.0) > 1e-12 ? ComplexVector(x / nrm) : x;
    std::vector<Complex> c;
    for (int j = 0; j <= l.degree(); ++j) c.push_back(u.dot(l.coeff(j) * u));
    return ScalarPolynomial(std::move(c));
}

HyperbolicityVerdict is_hyperbolic(const MatrixPolynomial& l, int samples, std::uint64_t seed, double tol) {
    HyperbolicityVerdict v;
    for (int j = 0; j <= l.degree(); ++j) {
        const ComplexMatrix& c = l.coeff(j);
        const double scale = 1.0 + c.cwiseAbs().maxCoeff();
        if ((c - c.adjoint()).cwiseAbs().maxCoeff() > tol * scale) {
            v.coefficient_witness = j;
            return v;
        }
    }
    const Eigen::Index n = l.size();
    auto probe = [&](const ComplexVector& x) {
        ++v.vectors_tested;
        if (section_real_rooted(l, x, tol)) return true;
        v.witness = x;
        return false;
    };
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!probe(ComplexVector::Unit(n, i))) return v;
    }
    std::mt19937_64 rng(seed);
    for (int k = 0; k < samples; ++k) {
        if (!probe(random_unit(rng, n))) return v;
    }
    v.hyperbolic = true;
    return v;
}

StarReport condition_star(const MatrixPolynomial& l, const MatrixPolynomial& m, const std::vector<double>& alpha_grid,
                          double tol) {
    if (l.size() != m.size() || l.degree() != m.degree()) throw ShapeError("pair needs equal size and degree");
    if (l.degree() < 1) throw PreconditionError("pair needs degree at least 1");
    StarReport r;
    r.alpha_grid = alpha_grid;
    for (double a : alpha_grid) {
        const SpectrumComplex roots = det_roots(affine_combine(l, m, a));
        if (!real_root_classify(roots, tol).all_real) r.failures.push_back({a, roots});
    }
    const int top = l.degree() - 1;
    r.leading_diff_spectrum = gen_eigs(l.coeff(top) - m.coeff(top));
    r.leading_diff_real = real_root_classify(r.leading_diff_spectrum, tol).all_real;
    r.verdict = r.failures.empty() && r.leading_diff_real;
    return r;
}

ScalarPolynomial direction_poly(const MatrixPolynomial& l, const MatrixPolynomial& m, double alpha, double beta) {
    if (l.size() != m.size() || l.degree() != m.degree()) throw ShapeError("pair needs equal size and degree");
    const ComplexMatrix x = alpha * companion(l) + beta * companion(m);
    const double sign = x.rows() % 2 == 0 ? 1.0 : -1.0;
    return Complex{sign} * char_poly(x);
}

DegenerationCheck degeneration_check(const MatrixPolynomial& l, const MatrixPolynomial& m, double alpha) {
    if (l.degree() < 1) throw PreconditionError("pair needs degree at least 1");
    DegenerationCheck d;
    d.direct = direction_poly(l, m, alpha, -alpha);
    const int top = l.degree() - 1;
    const ComplexMatrix diff = l.coeff(top) - m.coeff(top);
    // det(gamma I + alpha D) is the characteristic polynomial of -alpha D.
    d.formula = times_power(char_poly(-alpha * diff), static_cast<int>(l.size()) * top);
    const double plus = coeff_distance(d.direct, d.formula);
    const double minus = coeff_distance(d.direct, Complex{-1.0} * d.formula);
    d.sign = plus <= minus ? 1 : -1;
    d.mismatch = std::min(plus, minus);
    return d;
}

CoincidenceReport verify_coincidence(const MatrixPolynomial& l, const MatrixPolynomial& m, const SymmetricMatrix& a,
                                     const SymmetricMatrix& b, const std::vector<double>& alpha_grid, double tol,
                                     double root_tol) {
    if (l.size() != m.size() || l.degree() != m.degree()) throw ShapeError("pair needs equal size and degree");
    const Eigen::Index big = l.size() * l.degree();
    if (a.size() != big || b.size() != big) throw ShapeError("symmetric pair must be (n*ell) x (n*ell)");
    CoincidenceReport r;
    r.alpha_grid = alpha_grid;
    for (double al : alpha_grid) {
        const RootClassification cls = real_root_classify(det_roots(affine_combine(l, m, al)), root_tol);
        const double mis = cls.all_real ? spectrum_distance(cls.reals, sym_eigs(al * a + (1.0 - al) * b))
                                        : std::numeric_limits<double>::infinity();
        r.mismatches.push_back(mis);
        r.max_mismatch = std::max(r.max_mismatch, mis);
    }
    r.verdict = r.max_mismatch <= tol;
    return r;
}

bool derivative_pencil_check(const MatrixPolynomial& l, const std::vector<double>& t_grid, int samples,
                             std::uint64_t seed, double tol) {
    if (!is_hyperbolic(l, samples, seed, tol).hyperbolic) return false;
    return std::all_of(t_grid.begin(), t_grid.end(), [&](double t) {
        return is_hyperbolic(add_derivative(l, t), samples, seed, tol).hyperbolic;
    });
}

}  // namespace hyperpoly
