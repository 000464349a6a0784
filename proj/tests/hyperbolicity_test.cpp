#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <cmath>

#include "hyperpoly/errors.hpp"
#include "hyperpoly/hyperbolicity.hpp"
#include "support.hpp"

using namespace hyperpoly;
using namespace hyperpoly::testing;

namespace {

// z^2 I - C
MatrixPolynomial quadratic(const ComplexMatrix& c) {
    const Eigen::Index n = c.rows();
    return MatrixPolynomial({-c, ComplexMatrix::Zero(n, n), ComplexMatrix::Identity(n, n)});
}

ComplexMatrix c22() {
    ComplexMatrix c(2, 2);
    c << 2.0, 1.0, 1.0, 2.0;
    return c;
}

ComplexMatrix diag(std::initializer_list<double> d) {
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
    Eigen::Index i = 0;
    for (double v : d) {
        m(i, i) = v;
        ++i;
    }
    return m;
}

ComplexMatrix random_psd(Rng& rng, Eigen::Index n) {
    const ComplexMatrix g = random_complex(rng, n, n);
    return g * g.adjoint();
}

SpectrumComplex eigen_oracle(const ComplexMatrix& x) {
    Eigen::ComplexEigenSolver<ComplexMatrix> es(x);
    const ComplexVector v = es.eigenvalues();
    return SpectrumComplex(v.data(), v.data() + v.size());
}

MatrixPolynomial scalar(std::initializer_list<double> c) { return MatrixPolynomial::from_scalar(ScalarPolynomial(c)); }

}  // namespace

TEST(WeaklyHyperbolic, Examples) {
    EXPECT_TRUE(is_weakly_hyperbolic(quadratic(c22())));
    EXPECT_FALSE(is_weakly_hyperbolic(quadratic(-ComplexMatrix::Identity(2, 2))));
    Rng rng(1);
    EXPECT_TRUE(is_weakly_hyperbolic(MatrixPolynomial::linear(random_hermitian(rng, 5))));
}

TEST(WeaklyHyperbolic, SemisimpleMultipleRootsStayReal) {
    // det = (z^2 - 1)^3: every root is triple.
    EXPECT_TRUE(is_weakly_hyperbolic(quadratic(ComplexMatrix::Identity(3, 3))));
    EXPECT_TRUE(is_weakly_hyperbolic(MatrixPolynomial::linear(ComplexMatrix::Identity(4, 4))));
}

TEST(ScalarSection, Examples) {
    const MatrixPolynomial l = quadratic(c22());
    EXPECT_LT(coeff_distance(scalar_section(l, ComplexVector::Unit(2, 0)), ScalarPolynomial({-2.0, 0.0, 1.0})), 1e-15);
    ComplexVector x(2);
    x << 1.0, 1.0;
    // Unnormalized input is normalized internally.
    EXPECT_LT(coeff_distance(scalar_section(l, x), ScalarPolynomial({-3.0, 0.0, 1.0})), 1e-14);
    EXPECT_LT(coeff_distance(scalar_section(l, x / std::sqrt(2.0)), ScalarPolynomial({-3.0, 0.0, 1.0})), 1e-14);

    Rng rng(2);
    const ComplexMatrix h = random_hermitian(rng, 3);
    const ComplexVector u = random_complex(rng, 3, 1).normalized();
    const ScalarPolynomial s = scalar_section(MatrixPolynomial::linear(h), u);
    EXPECT_NEAR(std::abs(s[0] + u.dot(h * u)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(s[1] - 1.0), 0.0, 1e-14);
}

TEST(ScalarSection, Errors) {
    const MatrixPolynomial l = quadratic(c22());
    EXPECT_THROW(scalar_section(l, ComplexVector::Zero(2)), PreconditionError);
    EXPECT_THROW(scalar_section(l, ComplexVector::Zero(3)), ShapeError);
}

TEST(ScalarSection, HermitianCoefficientsGiveRealSections) {
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index n = uniform_int(rng, 1, 5);
        const int ell = uniform_int(rng, 1, 4);
        MatrixCoefficients c;
        for (int j = 0; j < ell; ++j) c.push_back(random_hermitian(rng, n));
        c.push_back(ComplexMatrix::Identity(n, n));
        const ScalarPolynomial s = scalar_section(MatrixPolynomial(c), random_complex(rng, n, 1));
        for (const auto& v : s.coeffs()) EXPECT_LE(std::abs(v.imag()), 1e-14);
        EXPECT_NEAR(std::abs(s.leading() - 1.0), 0.0, 1e-14);
    }
}

TEST(IsHyperbolic, Examples) {
    Rng rng(4);
    const auto psd = is_hyperbolic(quadratic(random_psd(rng, 3)));
    EXPECT_TRUE(psd.hyperbolic);
    EXPECT_EQ(psd.vectors_tested, 3 + 200);

    const auto bad = is_hyperbolic(quadratic(-ComplexMatrix::Identity(2, 2)));
    EXPECT_FALSE(bad.hyperbolic);
    ASSERT_TRUE(bad.witness.has_value());
    EXPECT_FALSE(real_root_classify(poly_roots(scalar_section(quadratic(-ComplexMatrix::Identity(2, 2)), *bad.witness)))
                     .all_real);

    EXPECT_TRUE(is_hyperbolic(MatrixPolynomial::linear(random_hermitian(rng, 4))).hyperbolic);
}

TEST(IsHyperbolic, NonHermitianCoefficientIsImmediateCounterexample) {
    // det = z^2 is real-rooted, so this is weakly hyperbolic but not hyperbolic.
    ComplexMatrix nil = ComplexMatrix::Zero(2, 2);
    nil(0, 1) = 1.0;
    const MatrixPolynomial l = MatrixPolynomial::linear(nil);
    EXPECT_TRUE(is_weakly_hyperbolic(l));
    const auto v = is_hyperbolic(l);
    EXPECT_FALSE(v.hyperbolic);
    ASSERT_TRUE(v.coefficient_witness.has_value());
    EXPECT_EQ(*v.coefficient_witness, 0);
    EXPECT_EQ(v.vectors_tested, 0);
}

TEST(IsHyperbolic, SeededSamplingIsDeterministic) {
    Rng rng(5);
    // Indefinite C: only some directions fail, so the witness depends on the sample stream.
    const ComplexMatrix c = diag({1.0, -0.01, 1.0}) + 0.0 * random_hermitian(rng, 3);
    const auto a = is_hyperbolic(quadratic(c), 200, 42);
    const auto b = is_hyperbolic(quadratic(c), 200, 42);
    EXPECT_FALSE(a.hyperbolic);
    EXPECT_EQ(a.vectors_tested, b.vectors_tested);
    ASSERT_TRUE(a.witness && b.witness);
    EXPECT_EQ(*a.witness, *b.witness);
}

TEST(IsHyperbolic, ImpliesWeaklyHyperbolic) {
    // Sampling is one-sided, so the implication is exercised on families that are truly hyperbolic:
    // Hermitian pencils, z^2 I - C with C PSD, and their derivative pencils.
    Rng rng(6);
    for (int trial = 0; trial < 60; ++trial) {
        const Eigen::Index n = uniform_int(rng, 1, 4);
        MatrixPolynomial l = MatrixPolynomial::linear(random_hermitian(rng, n));
        if (trial % 3 == 1) l = quadratic(random_psd(rng, n));
        if (trial % 3 == 2) l = add_derivative(quadratic(random_psd(rng, n)), uniform(rng, -5.0, 5.0));
        ASSERT_TRUE(is_hyperbolic(l, 100, static_cast<std::uint64_t>(trial)).hyperbolic);
        EXPECT_TRUE(is_weakly_hyperbolic(l));
    }
}

TEST(IsHyperbolic, WideNegativeConeIsFound) {
    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Index n = uniform_int(rng, 2, 4);
        // Half the spectrum of C sits at -1, so a constant fraction of directions fail.
        ComplexMatrix d = ComplexMatrix::Identity(n, n);
        for (Eigen::Index i = 0; i < n / 2; ++i) d(i, i) = -1.0;
        const Eigen::HouseholderQR<ComplexMatrix> qr(random_complex(rng, n, n));
        const ComplexMatrix q = qr.householderQ();
        const auto v = is_hyperbolic(quadratic(q * d * q.adjoint()), 200, static_cast<std::uint64_t>(trial));
        EXPECT_FALSE(v.hyperbolic);
        EXPECT_FALSE(is_weakly_hyperbolic(quadratic(q * d * q.adjoint())));
    }
}

TEST(ConditionStar, InterlacingDiagonalPairHolds) {
    // (z^2-1, z^2-z-1) and ((z-1)(z-3), (z-2)(z-4)) interlace entrywise.
    const MatrixPolynomial l = MatrixPolynomial::diagonal({ScalarPolynomial({-1.0, 0.0, 1.0}),
                                                           ScalarPolynomial({3.0, -4.0, 1.0})});
    const MatrixPolynomial m = MatrixPolynomial::diagonal({ScalarPolynomial({-1.0, -1.0, 1.0}),
                                                           ScalarPolynomial({8.0, -6.0, 1.0})});
    const StarReport r = condition_star(l, m);
    EXPECT_TRUE(r.verdict);
    EXPECT_TRUE(r.failures.empty());
    EXPECT_EQ(r.alpha_grid, default_alpha_grid());
    EXPECT_TRUE(r.leading_diff_real);
}

TEST(ConditionStar, DiagonalCounterexampleFailsAtThree) {
    const MatrixPolynomial l = quadratic(diag({1.0, 4.0}));
    const MatrixPolynomial m = quadratic(diag({2.0, 3.0}));
    const StarReport r = condition_star(l, m, {0.0, 0.5, 1.0, 3.0});
    EXPECT_FALSE(r.verdict);
    ASSERT_EQ(r.failures.size(), 1u);
    EXPECT_EQ(r.failures[0].alpha, 3.0);
    // Entry z^2 - (2 - alpha) = z^2 + 1 contributes +-i.
    int imaginary_units = 0;
    for (const auto& z : r.failures[0].offending_roots) {
        if (std::abs(std::abs(z.imag()) - 1.0) < 1e-8 && std::abs(z.real()) < 1e-8) ++imaginary_units;
    }
    EXPECT_EQ(imaginary_units, 2);
    // Leading difference is zero, so it is trivially real.
    EXPECT_TRUE(r.leading_diff_real);
}

TEST(ConditionStar, EqualPairReducesToWeakHyperbolicity) {
    const MatrixPolynomial good = quadratic(c22());
    const StarReport r = condition_star(good, good);
    EXPECT_EQ(r.verdict, is_weakly_hyperbolic(good));
    for (const auto& z : r.leading_diff_spectrum) EXPECT_EQ(std::abs(z), 0.0);

    const MatrixPolynomial bad = quadratic(-ComplexMatrix::Identity(2, 2));
    EXPECT_FALSE(condition_star(bad, bad).verdict);
}

TEST(ConditionStar, NonRealLeadingDifferenceFails) {
    // Rotation generator as L_0 - M_0 with ell = 1: eigenvalues +-i.
    ComplexMatrix rot = ComplexMatrix::Zero(2, 2);
    rot(0, 1) = 1.0;
    rot(1, 0) = -1.0;
    const StarReport r = condition_star(MatrixPolynomial::linear(-rot), MatrixPolynomial::linear(ComplexMatrix::Zero(2, 2)),
                                        {0.0});
    EXPECT_FALSE(r.leading_diff_real);
    EXPECT_FALSE(r.verdict);
}

TEST(ConditionStar, ShapeMismatchThrows) {
    EXPECT_THROW(condition_star(quadratic(c22()), scalar({-1.0, 0.0, 1.0})), ShapeError);
}

TEST(DirectionPoly, Examples) {
    const MatrixPolynomial f = scalar({-1.0, 0.0, 1.0});
    const MatrixPolynomial h = scalar({-1.0, -1.0, 1.0});
    EXPECT_LT(coeff_distance(direction_poly(f, h, 1.0, 0.0), ScalarPolynomial({-1.0, 0.0, 1.0})), 1e-12);

    // C_f - C_h = [[0,0],[0,-1]], so det(C_f - C_h - gamma I) = gamma (gamma + 1).
    const ScalarPolynomial d = direction_poly(f, h, 1.0, -1.0);
    EXPECT_LT(coeff_distance(d, ScalarPolynomial({0.0, 1.0, 1.0})), 1e-12);
    const auto roots = real_root_classify(poly_roots(d.monic()));
    ASSERT_TRUE(roots.all_real);
    EXPECT_NEAR(roots.reals[0], -1.0, 1e-12);
    EXPECT_NEAR(roots.reals[1], 0.0, 1e-12);

    // (0, 0): (-gamma)^{n ell}
    const ScalarPolynomial zero = direction_poly(quadratic(c22()), quadratic(c22()), 0.0, 0.0);
    EXPECT_LT(coeff_distance(zero, ScalarPolynomial({0.0, 0.0, 0.0, 0.0, 1.0})), 1e-14);
    EXPECT_LT(coeff_distance(direction_poly(f, f, 0.0, 0.0), ScalarPolynomial({0.0, 0.0, 1.0})), 1e-14);
    EXPECT_LT(coeff_distance(direction_poly(MatrixPolynomial::linear(ComplexMatrix::Zero(1, 1)), f.size() == 1 ?
                                            MatrixPolynomial::linear(ComplexMatrix::Zero(1, 1)) : f, 0.0, 0.0),
                             ScalarPolynomial({0.0, -1.0})),
              1e-14);
}

TEST(DirectionPoly, RootsMatchPencilEigenvalues) {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const Eigen::Index n = uniform_int(rng, 1, 3);
        const int ell = uniform_int(rng, 1, 3);
        const MatrixPolynomial l = random_monic(rng, n, ell);
        const MatrixPolynomial m = random_monic(rng, n, ell);
        const double a = normal(rng), b = normal(rng);
        const ScalarPolynomial p = direction_poly(l, m, a, b);
        EXPECT_EQ(p.degree(), static_cast<int>(n) * ell);
        const SpectrumComplex oracle = eigen_oracle(a * companion(l) + b * companion(m));
        EXPECT_LT(spectrum_distance(poly_roots(p.monic()), oracle), 1e-6);
    }
}

TEST(DirectionPoly, Homogeneity) {
    Rng rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        const Eigen::Index n = uniform_int(rng, 1, 3);
        const int ell = uniform_int(rng, 1, 3);
        const int big = static_cast<int>(n) * ell;
        const MatrixPolynomial l = random_monic(rng, n, ell);
        const MatrixPolynomial m = random_monic(rng, n, ell);
        const double a = normal(rng), b = normal(rng);
        const ScalarPolynomial base = direction_poly(l, m, a, b);
        for (double s : {2.0, -1.0}) {
            const ScalarPolynomial scaled = direction_poly(l, m, s * a, s * b);
            // Coefficient k of P(s a, s b, s gamma) is s^k times that of P(s a, s b, .).
            std::vector<Complex> lhs, rhs;
            for (int k = 0; k <= big; ++k) {
                lhs.push_back(scaled[static_cast<std::size_t>(k)] * std::pow(s, k));
                rhs.push_back(base[static_cast<std::size_t>(k)] * std::pow(s, big));
            }
            EXPECT_LT(coeff_distance(ScalarPolynomial(lhs), ScalarPolynomial(rhs)), 1e-8);
        }
    }
}

TEST(Degeneration, ScalarExampleSign) {
    const DegenerationCheck d = degeneration_check(scalar({-1.0, 0.0, 1.0}), scalar({-1.0, -1.0, 1.0}), 1.0);
    EXPECT_LT(d.mismatch, 1e-12);
    EXPECT_EQ(d.sign, 1);
    // With +alpha D in place of -alpha D the roots come out as {0, 1}: no global sign reconciles it.
    const ScalarPolynomial flipped({0.0, -1.0, 1.0});
    EXPECT_GT(coeff_distance(d.direct, flipped), 0.5);
    EXPECT_GT(coeff_distance(d.direct, Complex{-1.0} * flipped), 0.5);
}

TEST(Degeneration, IdentityHoldsOnRandomPairs) {
    Rng rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index n = uniform_int(rng, 1, 3);
        const int ell = uniform_int(rng, 1, 3);
        const MatrixPolynomial l = random_monic(rng, n, ell);
        const MatrixPolynomial m = random_monic(rng, n, ell);
        const double a = normal(rng);
        const DegenerationCheck d = degeneration_check(l, m, a);
        EXPECT_LT(d.mismatch, 1e-8);
        EXPECT_EQ(d.sign, (n * ell) % 2 == 0 ? 1 : -1);
    }
}

TEST(Coincidence, ScalarRankOnePair) {
    const MatrixPolynomial f = scalar({-1.0, 0.0, 1.0});
    const MatrixPolynomial h = scalar({-1.0, -1.0, 1.0});
    RealMatrix b(2, 2);
    b << -0.5, 0.5, 0.5, 1.5;
    const CoincidenceReport r =
        verify_coincidence(f, h, SymmetricMatrix::diagonal({-1.0, 1.0}), SymmetricMatrix(b));
    EXPECT_TRUE(r.verdict);
    EXPECT_LE(r.max_mismatch, 1e-8);
    EXPECT_EQ(r.mismatches.size(), default_alpha_grid().size());
}

TEST(Coincidence, EqualPairIsAlphaIndependent) {
    const MatrixPolynomial l = quadratic(c22());
    const double r3 = std::sqrt(3.0);
    const SymmetricMatrix a = SymmetricMatrix::diagonal({-r3, -1.0, 1.0, r3});
    const CoincidenceReport r = verify_coincidence(l, l, a, a);
    EXPECT_TRUE(r.verdict);
    EXPECT_LE(r.max_mismatch, 1e-8);
}

TEST(Coincidence, UnrelatedPairFails) {
    Rng rng(10);
    const MatrixPolynomial f = scalar({-1.0, 0.0, 1.0});
    const MatrixPolynomial h = scalar({-1.0, -1.0, 1.0});
    EXPECT_FALSE(verify_coincidence(f, h, random_symmetric(rng, 2), random_symmetric(rng, 2)).verdict);
}

TEST(Coincidence, NonRealRootsReportInfinity) {
    const MatrixPolynomial l = quadratic(diag({1.0, 4.0}));
    const MatrixPolynomial m = quadratic(diag({2.0, 3.0}));
    const CoincidenceReport r =
        verify_coincidence(l, m, SymmetricMatrix::identity(4), SymmetricMatrix::identity(4), {3.0});
    EXPECT_TRUE(std::isinf(r.max_mismatch));
    EXPECT_FALSE(r.verdict);
}

TEST(Coincidence, SizeMismatchThrows) {
    const MatrixPolynomial f = scalar({-1.0, 0.0, 1.0});
    EXPECT_THROW(verify_coincidence(f, f, SymmetricMatrix::identity(3), SymmetricMatrix::identity(2)), ShapeError);
}

TEST(DerivativePencil, Examples) {
    Rng rng(11);
    const std::vector<double> ts{-5.0, -1.0, 0.0, 1.0, 5.0};
    EXPECT_TRUE(derivative_pencil_check(quadratic(random_psd(rng, 3)), ts));
    EXPECT_TRUE(derivative_pencil_check(MatrixPolynomial::linear(random_hermitian(rng, 3)), ts));
    const MatrixPolynomial bad = quadratic(diag({1.0, -1.0}));
    EXPECT_EQ(derivative_pencil_check(bad, {0.0}), is_hyperbolic(bad).hyperbolic);
    EXPECT_FALSE(derivative_pencil_check(bad, ts));
    const MatrixPolynomial good = quadratic(c22());
    EXPECT_EQ(derivative_pencil_check(good, {0.0}), is_hyperbolic(good).hyperbolic);
}
