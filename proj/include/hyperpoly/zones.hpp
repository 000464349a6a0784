#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hyperpoly/matrix_polynomial.hpp"
#include "hyperpoly/spectrum.hpp"

namespace hyperpoly {

/**
 * Estimated spectral zones [delta_j^-, delta_j^+], the range of the j-th
 * smallest root of <L(z)x, x> over unit x. These are inner estimates: each
 * endpoint is a running extremum over the visited vectors, so the true zone
 * contains the reported one. `tolerance` bounds the refinement still in
 * progress at the end (the endpoint movement over the last sweeps plus a
 * rounding floor).
 */
struct SpectralZones {
    std::vector<std::pair<double, double>> intervals;
    int sample_count = 0;
    bool refined = false;
    double tolerance = 0.0;
};

struct ZoneOptions {
    int samples = 500;
    int refine_iters = 50;
    std::uint64_t seed = 0;
    double tol = 1e-8;  // real-root classification of each section
};

/// Sorted roots of <L(z)x, x>; NonRealRootsError if one is non-real (x witnesses non-hyperbolicity).
SpectrumReal section_roots(const MatrixPolynomial& l, const ComplexVector& x, double tol = 1e-8);

/**
 * Samples the basis vectors and `samples` seeded complex Gaussian unit
 * vectors, then refines each endpoint by coordinate search over the real
 * and imaginary parts of x with renormalization. The step halves after a
 * sweep without improvement, down to 1e-10. More refinement never shrinks an interval.
 */
SpectralZones zone_estimates(const MatrixPolynomial& l, const ZoneOptions& opts = {});

/// delta_j^+ <= delta_{j+1}^- + overlap_tol for consecutive zones.
bool zones_consistent(const SpectralZones& z, double overlap_tol = 1e-8);

/**
 * Zone test for hyperbolicity of every convex combination of L and M:
 * max(delta_j^+(L), delta_j^+(M)) <= min(delta_{j+1}^-(L), delta_{j+1}^-(M)).
 * Margins are compared against the larger of the two zone tolerances.
 * `binding_j` is the first failing j (1-based). `boundary` flags a margin
 * within tolerance of zero, where touching zones cannot be told apart from a small overlap.
 *
 * holds == true implies every convex combination is hyperbolic. The converse
 * holds for n = 1 only: for n >= 2 the endpoints on each side may be attained
 * at different vectors x, and pairs failing the test can still have only
 * hyperbolic combinations (e.g. diag((z+3)(z-1), (z+1)(z-3)) against
 * diag((z+4)(z-2.5), (z-2)(z-5))).
 */
struct ConvexCombinationVerdict {
    bool holds = false;
    std::optional<int> binding_j;
    bool boundary = false;
    std::vector<double> margins;  // rhs - lhs per j
    double tolerance = 0.0;
    SpectralZones zones_l;
    SpectralZones zones_m;
};

ConvexCombinationVerdict convex_combination_hyperbolic(const MatrixPolynomial& l, const MatrixPolynomial& m,
                                                       const ZoneOptions& opts = {});

}  // namespace hyperpoly
