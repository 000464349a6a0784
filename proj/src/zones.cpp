#include "hyperpoly/zones.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hyperpoly/errors.hpp"
#include "hyperpoly/hyperbolicity.hpp"

namespace hyperpoly {

namespace {

struct Extremum {
    double value;
    ComplexVector x;
};

// Coordinate search on the unit sphere for the extremum of the j-th section root.
// Returns the endpoint movement over the last few sweeps.
double refine(const MatrixPolynomial& l, std::size_t j, double dir, Extremum& e, int sweeps, double tol) {
    const Eigen::Index n = l.size();
    double step = 0.5;
    std::vector<double> history{e.value};
    for (int s = 0; s < sweeps; ++s) {
        bool improved = false;
        for (Eigen::Index c = 0; c < 2 * n; ++c) {
            for (double sign : {1.0, -1.0}) {
                ComplexVector y = e.x;
                y(c / 2) += c % 2 == 0 ? Complex{sign * step, 0.0} : Complex{0.0, sign * step};
                const double nrm = y.norm();
                if (nrm == 0.0) continue;
                y /= nrm;
                const double v = section_roots(l, y, tol)[j];
                if (dir * (v - e.value) > 0.0) {
                    e.value = v;
                    e.x = y;
                    improved = true;
                    break;
                }
            }
        }
        if (!improved) step = std::max(0.5 * step, 1e-10);
        history.push_back(e.value);
    }
    const std::size_t back = std::min<std::size_t>(history.size() - 1, 10);
    return std::abs(history.back() - history[history.size() - 1 - back]);
}

}  // namespace

SpectrumReal section_roots(const MatrixPolynomial& l, const ComplexVector& x, double tol) {
    const ScalarPolynomial s = scalar_section(l, x);
    if (s.degree() < 1) return SpectrumReal();
    const RootClassification cls = real_root_classify(poly_roots(s.monic()), tol);
    if (!cls.all_real) throw NonRealRootsError("section has non-real roots: L is not hyperbolic");
    return cls.reals;
}

SpectralZones zone_estimates(const MatrixPolynomial& l, const ZoneOptions& opts) {
    const Eigen::Index n = l.size();
    const auto ell = static_cast<std::size_t>(l.degree());
    std::vector<Extremum> lo, hi;
    SpectralZones z;
    auto visit = [&](const ComplexVector& x) {
        const SpectrumReal r = section_roots(l, x, opts.tol);
        ++z.sample_count;
        if (lo.empty()) {
            for (std::size_t j = 0; j < ell; ++j) {
                lo.push_back({r[j], x});
                hi.push_back({r[j], x});
            }
            return;
        }
        for (std::size_t j = 0; j < ell; ++j) {
            if (r[j] < lo[j].value) lo[j] = {r[j], x};
            if (r[j] > hi[j].value) hi[j] = {r[j], x};
        }
    };
    for (Eigen::Index i = 0; i < n; ++i) visit(ComplexVector::Unit(n, i));
    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int k = 0; k < opts.samples; ++k) {
        ComplexVector x(n);
        for (Eigen::Index i = 0; i < n; ++i) x(i) = Complex{g(rng), g(rng)};
        if (x.norm() == 0.0) continue;
        visit(x / x.norm());
    }

    double movement = 0.0, scale = 1.0;
    if (opts.refine_iters > 0) {
        for (std::size_t j = 0; j < ell; ++j) {
            movement = std::max(movement, refine(l, j, -1.0, lo[j], opts.refine_iters, opts.tol));
            movement = std::max(movement, refine(l, j, 1.0, hi[j], opts.refine_iters, opts.tol));
        }
        z.refined = true;
    }
    for (std::size_t j = 0; j < ell; ++j) {
        z.intervals.emplace_back(lo[j].value, hi[j].value);
        scale = std::max({scale, std::abs(lo[j].value), std::abs(hi[j].value)});
    }
    z.tolerance = movement + 1e-8 * scale;
    return z;
}

bool zones_consistent(const SpectralZones& z, double overlap_tol) {
    for (std::size_t j = 0; j + 1 < z.intervals.size(); ++j) {
        if (z.intervals[j].second > z.intervals[j + 1].first + overlap_tol) return false;
    }
    return true;
}

ConvexCombinationVerdict convex_combination_hyperbolic(const MatrixPolynomial& l, const MatrixPolynomial& m,
                                                       const ZoneOptions& opts) {
    if (l.size() != m.size() || l.degree() != m.degree()) throw ShapeError("pair needs equal size and degree");
    ConvexCombinationVerdict v;
    v.zones_l = zone_estimates(l, opts);
    v.zones_m = zone_estimates(m, opts);
    v.tolerance = std::max(v.zones_l.tolerance, v.zones_m.tolerance);
    v.holds = true;
    const auto& a = v.zones_l.intervals;
    const auto& b = v.zones_m.intervals;
    for (std::size_t j = 0; j + 1 < a.size(); ++j) {
        const double margin = std::min(a[j + 1].first, b[j + 1].first) - std::max(a[j].second, b[j].second);
        v.margins.push_back(margin);
        if (std::abs(margin) <= v.tolerance) v.boundary = true;
        if (margin < -v.tolerance && v.holds) {
            v.holds = false;
            v.binding_j = static_cast<int>(j) + 1;
        }
    }
    return v;
}

}  // namespace hyperpoly
