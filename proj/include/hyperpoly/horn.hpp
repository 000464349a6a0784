#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "hyperpoly/matrix_polynomial.hpp"
#include "hyperpoly/spectrum.hpp"

namespace hyperpoly {

/**
 * Index sets (U, S, T) over {1..m}, increasing and of equal size, for the
 * eigenvalue inequality sum_{i in U} l_i(X+Y) <= sum_{j in S} l_j(X) + sum_{k in T} l_k(Y)
 * with eigenvalues in non-decreasing order.
 */
struct HornTriple {
    std::vector<int> u;
    std::vector<int> s;
    std::vector<int> t;
    int m = 0;

    auto operator<=>(const HornTriple&) const = default;
};

/// Throws ShapeError unless the three sets are strictly increasing, equal in size, nonempty and within {1..m}.
void validate(const HornTriple& t);

/// Sorted real roots of det L; NonRealRootsError if any is non-real.
SpectrumReal d_vector(const MatrixPolynomial& l, double tol = 1e-8);

/// {m + 1 - i : i in set}, increasing. Throws ShapeError on out-of-range elements.
std::vector<int> bar(const std::vector<int>& set, int m);

/**
 * The sharp Horn triples for m <= 5: the recursive characterization, run
 * for non-increasing eigenvalues and converted by reversing every index.
 * These satisfy sum(S) + sum(T) = sum(U) + r(m+1) - r(r+1)/2 with r = |U|.
 * Throws PreconditionError outside 1 <= m <= 5.
 */
std::vector<HornTriple> horn_triples(int m);

/// All triples of every size meeting the index-sum condition above.
std::vector<HornTriple> sum_condition_candidates(int m);

/// Sorted spectra of X, Y and X + Y for a bank of Hermitian pairs.
struct HornSampleBank {
    int m = 0;
    std::vector<std::vector<double>> x, y, sum;
};

/**
 * `trials` pairs: half complex Gaussian Hermitian (GUE-style), half diagonal
 * pairs with random spectra and random alignments, which reach the
 * commuting extremes where Horn inequalities become tight.
 */
HornSampleBank make_sample_bank(int m, int trials, std::uint64_t seed = 0);

/// False as soon as some banked pair violates the inequality by more than tol. One-sided.
bool empirical_triple_filter(const HornTriple& t, const HornSampleBank& bank, double tol = 1e-10);
bool empirical_triple_filter(const HornTriple& t, int trials = 10000, std::uint64_t seed = 0, double tol = 1e-10);

struct HornCheck {
    bool holds = false;
    double lhs = 0.0;
    double rhs = 0.0;
};

/**
 * sum_{i in U} d_i(alpha L + (1-alpha) M) against
 * alpha sum_{j in S_alpha} d_j(L) + (1-alpha) sum_{k in T_{1-alpha}} d_k(M),
 * where a set is replaced by its bar when its coefficient is negative.
 * holds = lhs <= rhs + tol * (1 + |lhs| + |rhs|). Needs m = n * ell (ShapeError)
 * and real roots at alpha (NonRealRootsError).
 */
HornCheck verify_horn_inequality(const MatrixPolynomial& l, const MatrixPolynomial& m, double alpha,
                                 const HornTriple& t, double tol = 1e-9);

}  // namespace hyperpoly
