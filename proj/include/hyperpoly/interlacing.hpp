#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyperpoly/matrix_polynomial.hpp"
#include "hyperpoly/polynomial.hpp"
#include "hyperpoly/spectrum.hpp"

namespace hyperpoly {

/// Roots closer than this times (1 + |lambda|) count as one multiple root.
inline constexpr double kSimplicityTol = 1e-7;
/// Residues at most this in magnitude are degenerate (near-common root).
inline constexpr double kResidueSignTol = 1e-10;
/// Relative cutoff of the Euclidean coprimality test.
inline constexpr double kGcdCutoff = 1e-10;

enum class SignClass { all_positive, all_negative, mixed, degenerate };

const char* to_string(SignClass s);

/// h / f = 1 + sum_j c_j / (z - lambda_j) over the simple real roots of f.
struct ResidueDecomposition {
    SpectrumReal lambdas;
    std::vector<double> residues;
    SignClass sign_class = SignClass::degenerate;
};

/**
 * Residues c_j = h(lambda_j) / f'(lambda_j). Checks the decomposition identity
 * at 2 ell points off the real axis before returning.
 * Throws ShapeError for non-monic or unequal degrees, DegenerateError for
 * multiple roots of f or a common factor, NonRealRootsError when f has non-real roots.
 */
ResidueDecomposition residues(const ScalarPolynomial& f, const ScalarPolynomial& h, double tol = 1e-8);

struct InterlaceVerdict {
    bool holds = false;
    std::string reason;
};

/// Both root sets real and simple, strictly alternating once merged. Symmetric in f and h.
InterlaceVerdict roots_interlace(const ScalarPolynomial& f, const ScalarPolynomial& h, double tol = 1e-8);

struct PencilDirection {
    double alpha;
    double beta;
};

/// 16 equally spaced directions on the unit circle of the (alpha, beta) plane.
std::vector<PencilDirection> circle_directions(int count = 16);
/// (alpha, 1 - alpha) over the given alpha values.
std::vector<PencilDirection> affine_directions(const std::vector<double>& alphas);

/**
 * Every alpha f + beta h on the grid is real-rooted. The combination is
 * trimmed at relative 1e-12 first, so the degree drop along alpha + beta = 0
 * is handled; a constant combination counts as real-rooted.
 * Throws PreconditionError when f and h coincide.
 */
bool pencil_real_rooted(const ScalarPolynomial& f, const ScalarPolynomial& h, const std::vector<PencilDirection>& grid,
                        double tol = 1e-8);

/**
 * Ratios t at which the real-root count of f - t h can change: the values f/h
 * at real zeros of the Wronskian f'h - fh', and t = 1 where the degree drops.
 * Sorted and deduplicated.
 */
std::vector<double> critical_ratios(const ScalarPolynomial& f, const ScalarPolynomial& h);

/// One ratio inside each open interval cut out by critical_ratios, plus one beyond each end.
std::vector<double> ratio_probes(const ScalarPolynomial& f, const ScalarPolynomial& h);

struct ObreschkoffReport {
    bool cond1 = false;  // every real (alpha, beta) != 0
    bool cond2 = false;  // every alpha f + (1 - alpha) h
    bool cond3 = false;  // residues of h / f share a sign
    bool cond4 = false;  // roots interlace
    std::size_t cond1_probes = 0;
    std::size_t cond2_probes = 0;
    std::string cond3_detail;
    std::string cond4_detail;

    bool all_agree() const { return cond1 == cond2 && cond2 == cond3 && cond3 == cond4; }
};

/**
 * Evaluates the four conditions independently. Conditions 1 and 2 run on
 * their base grids (circle directions; default alpha grid) augmented by the
 * ratio probes, which visit every interval where the real-root count is constant.
 * Throws ShapeError or PreconditionError for non-monic, unequal-degree, equal
 * or non-coprime inputs. Non-real or multiple roots make conditions 3 and 4 false.
 */
ObreschkoffReport obreschkoff_report(const ScalarPolynomial& f, const ScalarPolynomial& h, double tol = 1e-8);

/// B = A + sign * x x^T with A = diag(lambda) in increasing order.
struct SymmetricPair {
    SymmetricMatrix a;
    SymmetricMatrix b;
    RealVector x;
    int sign = 1;
};

/**
 * Rank-one symmetric pair with det(zI - A) = f and det(zI - B) = h, verified
 * coefficientwise within 1e-8 relative before returning. Needs same-sign
 * residues: PreconditionError on mixed signs, DegenerateError on vanishing residues.
 */
SymmetricPair build_symmetric_pair(const ScalarPolynomial& f, const ScalarPolynomial& h, double tol = 1e-8);

struct DiagonalPencilPair {
    SymmetricMatrix a;
    SymmetricMatrix b;
};

/**
 * Direct sums of the scalar rank-one pairs of the diagonal entries of L and
 * M. The result is checked against the roots of det(alpha L + (1 - alpha) M)
 * on the default alpha grid (DegenerateError when that check fails).
 */
DiagonalPencilPair build_diagonal_pencil_pair(const MatrixPolynomial& l, const MatrixPolynomial& m, double tol = 1e-8);

}  // namespace hyperpoly
