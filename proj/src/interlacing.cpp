#include "hyperpoly/interlacing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hyperpoly/errors.hpp"
#include "hyperpoly/hyperbolicity.hpp"

namespace hyperpoly {

namespace {

enum class RootStatus { simple_real, multiple, non_real };

struct RootScan {
    RootStatus status = RootStatus::simple_real;
    std::vector<double> reals;
};

// Multiplicity is checked before reality: a double real root comes back from
// the eigensolver as a conjugate pair about sqrt(eps) apart.
RootScan scan_roots(const ScalarPolynomial& p, double tol) {
    const SpectrumComplex roots = poly_roots(p);
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (std::abs(roots[i] - roots[j]) <= kSimplicityTol * (1.0 + std::abs(roots[i])))
                return {RootStatus::multiple, {}};
    const RootClassification cls = real_root_classify(roots, tol);
    if (!cls.all_real) return {RootStatus::non_real, {}};
    return {RootStatus::simple_real, cls.reals.values()};
}

void require_pair(const ScalarPolynomial& f, const ScalarPolynomial& h) {
    if (!f.is_monic() || !h.is_monic()) throw ShapeError("polynomials must be monic");
    if (f.degree() != h.degree() || f.degree() < 1) throw ShapeError("polynomials must share a positive degree");
    if (!f.is_real(1e-12) || !h.is_real(1e-12)) throw ShapeError("polynomials must have real coefficients");
}

double real_eval(const ScalarPolynomial& p, double x) { return p(x); }

}  // namespace

const char* to_string(SignClass s) {
    switch (s) {
        case SignClass::all_positive: return "all_positive";
        case SignClass::all_negative: return "all_negative";
        case SignClass::mixed: return "mixed";
        case SignClass::degenerate: return "degenerate";
    }
    return "unknown";
}

ResidueDecomposition residues(const ScalarPolynomial& f, const ScalarPolynomial& h, double tol) {
    require_pair(f, h);
    if (!coprime(f, h, kGcdCutoff)) throw DegenerateError("f and h share a root");
    const RootScan scan = scan_roots(f, tol);
    if (scan.status == RootStatus::multiple) throw DegenerateError("f has a multiple root");
    if (scan.status == RootStatus::non_real) throw NonRealRootsError("f has non-real roots");

    ResidueDecomposition d;
    d.lambdas = SpectrumReal(scan.reals);
    const ScalarPolynomial df = f.derivative();
    bool pos = false, neg = false, zero = false;
    for (double lam : scan.reals) {
        const double c = real_eval(h, lam) / real_eval(df, lam);
        d.residues.push_back(c);
        if (std::abs(c) <= kResidueSignTol) zero = true;
        else (c > 0.0 ? pos : neg) = true;
    }
    d.sign_class = zero ? SignClass::degenerate
                 : (pos && neg) ? SignClass::mixed
                 : pos ? SignClass::all_positive
                       : SignClass::all_negative;

    const int ell = f.degree();
    const double center = d.lambdas.sum() / ell;
    double radius = 1.0;
    for (double lam : scan.reals) radius = std::max(radius, 1.0 + std::abs(lam - center));
    for (int k = 0; k < 2 * ell; ++k) {
        const Complex z = center + radius * std::polar(1.0, std::numbers::pi * (k + 0.5) / ell);
        Complex sum{1.0};
        double mag = 1.0;
        for (int j = 0; j < ell; ++j) {
            const Complex term = d.residues[static_cast<std::size_t>(j)] / (z - d.lambdas[static_cast<std::size_t>(j)]);
            sum += term;
            mag += std::abs(term);
        }
        const Complex lhs = h(z);
        const Complex rhs = f(z) * sum;
        if (std::abs(lhs - rhs) > 1e-8 * (std::abs(lhs) + std::abs(f(z)) * mag)) {
            throw DegenerateError("residue decomposition does not reproduce h");
        }
    }
    return d;
}

InterlaceVerdict roots_interlace(const ScalarPolynomial& f, const ScalarPolynomial& h, double tol) {
    require_pair(f, h);
    const RootScan sf = scan_roots(f, tol);
    const RootScan sh = scan_roots(h, tol);
    for (const auto& [scan, name] : {std::pair{&sf, "f"}, std::pair{&sh, "h"}}) {
        if (scan->status == RootStatus::multiple) return {false, std::string(name) + " has a multiple root"};
        if (scan->status == RootStatus::non_real) return {false, std::string(name) + " has non-real roots"};
    }
    std::vector<std::pair<double, int>> merged;
    for (double r : sf.reals) merged.emplace_back(r, 0);
    for (double r : sh.reals) merged.emplace_back(r, 1);
    std::sort(merged.begin(), merged.end());
    for (std::size_t k = 0; k + 1 < merged.size(); ++k) {
        const auto& [x0, w0] = merged[k];
        const auto& [x1, w1] = merged[k + 1];
        if (x1 - x0 <= kSimplicityTol * (1.0 + std::abs(x0))) return {false, "f and h share a root"};
        if (w0 == w1) return {false, "roots do not alternate"};
    }
    return {true, "roots alternate"};
}

std::vector<PencilDirection> circle_directions(int count) {
    std::vector<PencilDirection> g;
    for (int k = 0; k < count; ++k) {
        const double th = 2.0 * std::numbers::pi * k / count;
        g.push_back({std::cos(th), std::sin(th)});
    }
    return g;
}

std::vector<PencilDirection> affine_directions(const std::vector<double>& alphas) {
    std::vector<PencilDirection> g;
    for (double a : alphas) g.push_back({a, 1.0 - a});
    return g;
}

bool pencil_real_rooted(const ScalarPolynomial& f, const ScalarPolynomial& h, const std::vector<PencilDirection>& grid,
                        double tol) {
    if (coeff_distance(f, h) == 0.0) throw PreconditionError("f and h must be distinct");
    for (const auto& [a, b] : grid) {
        if (a == 0.0 && b == 0.0) continue;
        const ScalarPolynomial p = combine(f, a, h, b).trimmed(1e-12);
        if (p.degree() < 1) continue;
        if (!real_root_classify(poly_roots(p.monic()), tol).all_real) return false;
    }
    return true;
}

std::vector<double> critical_ratios(const ScalarPolynomial& f, const ScalarPolynomial& h) {
    std::vector<double> t{1.0};
    const ScalarPolynomial w = (f.derivative() * h - f * h.derivative()).trimmed(1e-12);
    if (w.degree() >= 1) {
        const double hscale = h.norm_inf();
        for (const Complex& z : poly_roots(w.monic())) {
            if (std::abs(z.imag()) > 1e-6 * (1.0 + std::abs(z))) continue;
            const double x = z.real();
            const double hx = real_eval(h, x);
            if (std::abs(hx) <= 1e-14 * hscale * (1.0 + std::pow(std::abs(x), h.degree()))) continue;
            t.push_back(real_eval(f, x) / hx);
        }
    }
    std::sort(t.begin(), t.end());
    std::vector<double> out;
    for (double v : t) {
        if (out.empty() || v - out.back() > 1e-12 * (1.0 + std::abs(v))) out.push_back(v);
    }
    return out;
}

std::vector<double> ratio_probes(const ScalarPolynomial& f, const ScalarPolynomial& h) {
    const std::vector<double> t = critical_ratios(f, h);
    std::vector<double> probes{t.front() - (1.0 + std::abs(t.front()))};
    for (std::size_t k = 0; k + 1 < t.size(); ++k) probes.push_back(0.5 * (t[k] + t[k + 1]));
    probes.push_back(t.back() + 1.0 + std::abs(t.back()));
    return probes;
}

ObreschkoffReport obreschkoff_report(const ScalarPolynomial& f, const ScalarPolynomial& h, double tol) {
    require_pair(f, h);
    if (coeff_distance(f, h) == 0.0) throw PreconditionError("f and h must be distinct");
    if (!coprime(f, h, kGcdCutoff)) throw PreconditionError("f and h must be relatively prime");

    // f - t h is the direction (1, -t), or alpha = 1 / (1 - t) on the affine line.
    const std::vector<double> probes = ratio_probes(f, h);
    std::vector<PencilDirection> g1 = circle_directions();
    std::vector<double> alphas = default_alpha_grid();
    for (double t : probes) {
        const double nrm = std::hypot(1.0, t);
        g1.push_back({1.0 / nrm, -t / nrm});
        if (std::abs(1.0 - t) > 1e-12) alphas.push_back(1.0 / (1.0 - t));
    }
    const std::vector<PencilDirection> g2 = affine_directions(alphas);

    ObreschkoffReport r;
    r.cond1_probes = g1.size();
    r.cond2_probes = g2.size();
    r.cond1 = pencil_real_rooted(f, h, g1, tol);
    r.cond2 = pencil_real_rooted(f, h, g2, tol);
    try {
        const ResidueDecomposition d = residues(f, h, tol);
        r.cond3 = d.sign_class == SignClass::all_positive || d.sign_class == SignClass::all_negative;
        r.cond3_detail = to_string(d.sign_class);
    } catch (const NonRealRootsError& e) {
        r.cond3_detail = e.what();
    } catch (const DegenerateError& e) {
        r.cond3_detail = e.what();
    }
    const InterlaceVerdict v = roots_interlace(f, h, tol);
    r.cond4 = v.holds;
    r.cond4_detail = v.reason;
    return r;
}

SymmetricPair build_symmetric_pair(const ScalarPolynomial& f, const ScalarPolynomial& h, double tol) {
    const ResidueDecomposition d = residues(f, h, tol);
    if (d.sign_class == SignClass::mixed) throw PreconditionError("residues have mixed signs");
    if (d.sign_class == SignClass::degenerate) throw DegenerateError("a residue vanishes");
    const auto ell = static_cast<Eigen::Index>(d.residues.size());
    SymmetricPair p;
    p.sign = d.sign_class == SignClass::all_positive ? -1 : 1;
    p.x = RealVector(ell);
    for (Eigen::Index j = 0; j < ell; ++j) p.x(j) = std::sqrt(std::abs(d.residues[static_cast<std::size_t>(j)]));
    p.a = SymmetricMatrix::diagonal(d.lambdas.values());
    p.b = SymmetricMatrix(p.a.matrix() + p.sign * p.x * p.x.transpose());
    if (coeff_distance(char_poly(p.a.matrix().cast<Complex>()), f) > 1e-8 ||
        coeff_distance(char_poly(p.b.matrix().cast<Complex>()), h) > 1e-8) {
        throw DegenerateError("rank-one pair does not reproduce f and h");
    }
    return p;
}

DiagonalPencilPair build_diagonal_pencil_pair(const MatrixPolynomial& l, const MatrixPolynomial& m, double tol) {
    if (l.size() != m.size() || l.degree() != m.degree()) throw ShapeError("pair needs equal size and degree");
    if (!l.is_diagonal(1e-12) || !m.is_diagonal(1e-12)) throw ShapeError("coefficients must be diagonal");
    if (!l.is_real(1e-12) || !m.is_real(1e-12)) throw ShapeError("coefficients must be real");
    const Eigen::Index n = l.size();
    const Eigen::Index ell = l.degree();
    RealMatrix a = RealMatrix::Zero(n * ell, n * ell);
    RealMatrix b = a;
    auto real_entry = [](const ScalarPolynomial& p) {
        std::vector<double> c;
        for (const auto& v : p.coeffs()) c.push_back(v.real());
        return ScalarPolynomial::from_real(c);
    };
    for (Eigen::Index i = 0; i < n; ++i) {
        const SymmetricPair p = build_symmetric_pair(real_entry(l.diagonal_entry(i)), real_entry(m.diagonal_entry(i)), tol);
        a.block(i * ell, i * ell, ell, ell) = p.a.matrix();
        b.block(i * ell, i * ell, ell, ell) = p.b.matrix();
    }
    DiagonalPencilPair out{SymmetricMatrix(a), SymmetricMatrix(b)};
    if (!verify_coincidence(l, m, out.a, out.b).verdict) {
        throw DegenerateError("direct sum does not reproduce the pencil roots");
    }
    return out;
}

}  // namespace hyperpoly
