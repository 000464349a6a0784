// Desk-scale acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "hyperpoly/horn.hpp"
#include "hyperpoly/hyperbolicity.hpp"
#include "hyperpoly/interlacing.hpp"
#include "hyperpoly/sdpcheck.hpp"
#include "hyperpoly/zones.hpp"
#include "support.hpp"

using namespace hyperpoly;
using namespace hyperpoly::testing;

namespace {

struct Result {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

SpectrumComplex eigen_eigs(const ComplexMatrix& m) {
    const Eigen::ComplexEigenSolver<ComplexMatrix> es(m, false);
    return SpectrumComplex(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
}

// Roots of det(alpha L + (1 - alpha) M) through det_poly, against Eigen on the combined companions.
Result companion_coincidence() {
    Rng rng(101);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const Eigen::Index n = uniform_int(rng, 1, 3);
        const int ell = uniform_int(rng, 1, 3);
        const MatrixPolynomial l = random_monic(rng, n, ell);
        const MatrixPolynomial m = random_monic(rng, n, ell);
        const ComplexMatrix cl = companion(l), cm = companion(m);
        for (double alpha : default_alpha_grid()) {
            const SpectrumComplex det = poly_roots(det_poly(affine_combine(l, m, alpha)));
            const SpectrumComplex eig = eigen_eigs(alpha * cl + (1.0 - alpha) * cm);
            worst = std::max(worst, spectrum_distance(det, eig));
        }
    }
    return {worst <= 1e-6, "50 pairs x 12 alphas, max root distance " + fmt("%.2e", worst)};
}

ScalarPair random_pair(Rng& rng, int k, int ell) {
    if (k % 2 == 0) return rank_one_pair(rng, ell);
    ScalarPolynomial f = random_real_monic(rng, ell);
    ScalarPolynomial h = random_real_monic(rng, ell);
    return {f, h};
}

Result four_way() {
    Rng rng(202);
    int agree = 0, interlacing = 0, total = 0;
    for (int k = 0; k < 200; ++k) {
        const ScalarPair p = random_pair(rng, k, uniform_int(rng, 1, 6));
        if (!coprime(p.f, p.h)) continue;
        const ObreschkoffReport r = obreschkoff_report(p.f, p.h);
        ++total;
        agree += r.all_agree();
        interlacing += r.cond4;
    }
    return {total == 200 && agree == total,
            std::to_string(agree) + "/" + std::to_string(total) + " agree, " + std::to_string(interlacing) +
                " interlacing"};
}

Result constructive() {
    Rng rng(303);
    double worst = 0.0;
    bool ok = true;
    for (int k = 0; k < 20; ++k) {
        CoincidenceReport r;
        if (k < 10) {
            const ScalarPair p = rank_one_pair(rng, uniform_int(rng, 1, 6));
            const SymmetricPair s = build_symmetric_pair(p.f, p.h);
            r = verify_coincidence(MatrixPolynomial::from_scalar(p.f), MatrixPolynomial::from_scalar(p.h), s.a, s.b);
        } else {
            const int n = uniform_int(rng, 2, 3), ell = uniform_int(rng, 1, 3);
            std::vector<ScalarPolynomial> fs, hs;
            for (int i = 0; i < n; ++i) {
                const ScalarPair p = rank_one_pair(rng, ell);
                fs.push_back(p.f);
                hs.push_back(p.h);
            }
            const MatrixPolynomial l = MatrixPolynomial::diagonal(fs), m = MatrixPolynomial::diagonal(hs);
            const DiagonalPencilPair d = build_diagonal_pencil_pair(l, m);
            r = verify_coincidence(l, m, d.a, d.b);
        }
        ok = ok && r.verdict;
        worst = std::max(worst, r.max_mismatch);
    }
    return {ok && worst <= 1e-7, "10 scalar + 10 diagonal pairs, max mismatch " + fmt("%.2e", worst)};
}

Result sdp_agreement() {
    Rng rng(404);
    int agree = 0, feasible = 0;
    double worst_res = 0.0, worst_eig = INFINITY, worst_asym = 0.0;
    bool certs = true;
    for (int k = 0; k < 100; ++k) {
        const ScalarPair p = random_pair(rng, k, uniform_int(rng, 2, 6));
        const bool truth = obreschkoff_report(p.f, p.h).cond4;
        const RealMatrix cf = companion(MatrixPolynomial::from_scalar(p.f)).real();
        const RealMatrix ch = companion(MatrixPolynomial::from_scalar(p.h)).real();
        const SymmetrizerCertificate sym = feasibility_symmetrizer(cf, ch);
        const Realization real = minimal_realization(p.f, p.h);
        const SymmetrizerCertificate rc = feasibility_realization(real);
        agree += (sym.feasible == truth && rc.feasible == truth);
        for (const SymmetrizerCertificate* c : {&sym, &rc}) {
            if (!c->feasible) continue;
            ++feasible;
            // Re-verify from scratch with Eigen.
            const RealMatrix& pm = c->p.matrix();
            const double me = Eigen::SelfAdjointEigenSolver<RealMatrix>(pm, Eigen::EigenvaluesOnly).eigenvalues()(0);
            double res;
            if (c == &sym)
                res = std::max((pm * cf - cf.transpose() * pm).norm(), (pm * ch - ch.transpose() * pm).norm());
            else
                res = std::max((real.a * pm - pm * real.a.transpose()).norm(),
                               (pm * real.c - c->rhs_scale * real.b).norm());
            const double asym = std::max(congruence_asymmetry(c->p, c == &sym ? cf : RealMatrix(real.a.transpose())),
                                         c == &sym ? congruence_asymmetry(c->p, ch) : 0.0);
            worst_res = std::max(worst_res, res);
            worst_eig = std::min(worst_eig, me);
            worst_asym = std::max(worst_asym, asym);
            certs = certs && res <= 1e-8 && me >= 1e-7 && asym <= 1e-6;
        }
    }
    return {agree == 100 && certs, std::to_string(agree) + "/100 agree; " + std::to_string(feasible) +
                                       " certificates, max residual " + fmt("%.2e", worst_res) + ", min eig " +
                                       fmt("%.2e", worst_eig) + ", max asymmetry " + fmt("%.2e", worst_asym)};
}

Result derivative_pencils() {
    Rng rng(505);
    int passed = 0, total = 0;
    for (Eigen::Index n = 1; n <= 4; ++n)
        for (int k = 0; k < 5; ++k) {
            const ComplexMatrix g = random_complex(rng, n, n);
            const ComplexMatrix c = g * g.adjoint();
            const MatrixPolynomial l({ComplexMatrix(-c), ComplexMatrix::Zero(n, n), ComplexMatrix::Identity(n, n)});
            ++total;
            passed += derivative_pencil_check(l, {-5.0, -1.0, 0.0, 1.0, 5.0}, 200, static_cast<std::uint64_t>(k));
        }
    return {passed == total, std::to_string(passed) + "/" + std::to_string(total) + " z^2 I - C families, n <= 4"};
}

MatrixPolynomial quadratic(const ComplexMatrix& c) {
    const Eigen::Index n = c.rows();
    return MatrixPolynomial({ComplexMatrix(-c), ComplexMatrix::Zero(n, n), ComplexMatrix::Identity(n, n)});
}

Result zone_examples() {
    ComplexMatrix c(2, 2);
    c << 2.0, 1.0, 1.0, 2.0;
    const MatrixPolynomial l = quadratic(c);
    const SpectralZones z = zone_estimates(l);
    const double r3 = std::sqrt(3.0);
    const double err = std::max({std::abs(z.intervals[0].first + r3), std::abs(z.intervals[0].second + 1.0),
                                 std::abs(z.intervals[1].first - 1.0), std::abs(z.intervals[1].second - r3)});
    const bool consistent = zones_consistent(z);
    const ConvexCombinationVerdict scaled = convex_combination_hyperbolic(l, quadratic(9.0 * c));
    const ConvexCombinationVerdict moved = convex_combination_hyperbolic(l, shifted(l, 5.0));
    const bool ok = err <= 5e-3 && consistent && scaled.holds && !moved.holds && moved.binding_j == 1;
    return {ok, "endpoint error " + fmt("%.2e", err) + ", consistent " + (consistent ? "yes" : "no") +
                    ", scaled " + (scaled.holds ? "true" : "false") + ", shifted " + (moved.holds ? "true" : "false") +
                    (moved.binding_j ? " at j=" + std::to_string(*moved.binding_j) : "")};
}

Result horn() {
    const std::vector<HornTriple> two = horn_triples(2);
    const std::set<HornTriple> want{{{2}, {2}, {2}, 2}, {{1}, {2}, {1}, 2}, {{1}, {1}, {2}, 2}, {{1, 2}, {1, 2}, {1, 2}, 2}};
    const bool m2 = std::set<HornTriple>(two.begin(), two.end()) == want;

    int disagreements = 0, candidates = 0;
    for (int m = 1; m <= 4; ++m) {
        const HornSampleBank bank = make_sample_bank(m, 10000, static_cast<std::uint64_t>(m));
        const std::vector<HornTriple> h = horn_triples(m);
        const std::set<HornTriple> set(h.begin(), h.end());
        for (const auto& c : sum_condition_candidates(m)) {
            ++candidates;
            disagreements += (set.count(c) == 1) != empirical_triple_filter(c, bank, 1e-10);
        }
    }

    Rng rng(707);
    const std::vector<HornTriple> t4 = horn_triples(4);
    const std::pair<int, int> shapes[] = {{1, 4}, {2, 2}, {4, 1}};
    int checks = 0, failures = 0;
    for (int k = 0; k < 20; ++k) {
        const auto [n, ell] = shapes[k % 3];
        std::vector<ScalarPolynomial> fs, hs;
        for (int i = 0; i < n; ++i) {
            const ScalarPair p = rank_one_pair(rng, ell);
            fs.push_back(p.f);
            hs.push_back(p.h);
        }
        const MatrixPolynomial l = MatrixPolynomial::diagonal(fs), m = MatrixPolynomial::diagonal(hs);
        build_diagonal_pencil_pair(l, m);
        for (double alpha : default_alpha_grid())
            for (const auto& t : t4) {
                ++checks;
                failures += !verify_horn_inequality(l, m, alpha, t).holds;
            }
    }
    return {m2 && disagreements == 0 && failures == 0,
            std::string("m=2 set ") + (m2 ? "exact" : "WRONG") + "; generator/filter disagreements " +
                std::to_string(disagreements) + "/" + std::to_string(candidates) + " sum-condition candidates; " +
                std::to_string(failures) + "/" + std::to_string(checks) + " inequality failures"};
}

// direction_poly(alpha, -alpha) against (-1)^{n ell} gamma^{n(ell-1)} prod(gamma - mu), mu eigenvalues of -alpha D from Eigen.
Result degeneration() {
    Rng rng(808);
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const Eigen::Index n = uniform_int(rng, 1, 3);
        const int ell = uniform_int(rng, 1, 3);
        const MatrixPolynomial l = random_monic(rng, n, ell), m = random_monic(rng, n, ell);
        const double alpha = normal(rng);
        const ComplexMatrix d = l.coeff(ell - 1) - m.coeff(ell - 1);
        SpectrumComplex roots = eigen_eigs(ComplexMatrix(-alpha * d));
        roots.resize(roots.size() + static_cast<std::size_t>(n * (ell - 1)), Complex{});
        const double sign = (n * ell) % 2 == 0 ? 1.0 : -1.0;
        const ScalarPolynomial oracle = Complex{sign} * ScalarPolynomial::from_roots(std::span<const Complex>(roots));
        worst = std::max(worst, coeff_distance(direction_poly(l, m, alpha, -alpha), oracle));
    }
    return {worst <= 1e-8, "50 pairs, corrected sign of the alpha D term, max relative coefficient error " +
                               fmt("%.2e", worst)};
}

Result eigen_floor() {
    Rng rng(909);
    double worst_roots = 0.0, worst_rev = 0.0;
    for (int m = 1; m <= 12; ++m)
        for (int k = 0; k < 10; ++k) {
            const SymmetricMatrix a = random_symmetric(rng, m);
            const SpectrumReal eig = sym_eigs(a);
            const RootClassification roots = real_root_classify(poly_roots(char_poly(a.matrix().cast<Complex>())));
            worst_roots = std::max(worst_roots, roots.all_real ? spectrum_distance(eig, roots.reals) : INFINITY);
            const SpectrumReal neg = sym_eigs(-1.0 * a);
            for (int j = 0; j < m; ++j)
                worst_rev = std::max(worst_rev, std::abs(neg[static_cast<std::size_t>(j)] +
                                                         eig[static_cast<std::size_t>(m - 1 - j)]));
        }
    return {worst_roots <= 1e-8 && worst_rev <= 1e-10,
            "eig vs char-poly roots " + fmt("%.2e", worst_roots) + ", reversal " + fmt("%.2e", worst_rev)};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Result()>> criteria[] = {
        {"companion coincidence", companion_coincidence},
        {"four interlacing criteria agree", four_way},
        {"constructed symmetric pairs coincide", constructive},
        {"semidefinite programs match interlacing", sdp_agreement},
        {"derivative pencils stay hyperbolic", derivative_pencils},
        {"spectral zones and the zone test", zone_examples},
        {"Horn triples and inequalities", horn},
        {"degeneration along alpha + beta = 0", degeneration},
        {"eigensolver floor", eigen_floor},
    };
    int failed = 0, index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = run();
        } catch (const std::exception& e) {
            r = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d %s: %s (%s; %.1f s)\n", index, r.pass ? "PASS" : "FAIL", name, r.detail.c_str(), secs);
        std::fflush(stdout);
        failed += !r.pass;
    }
    std::printf("%d/%d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
