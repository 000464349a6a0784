#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

#include "hyperpoly/polynomial.hpp"

namespace hyperpoly {

using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Real eigenvalues or roots, sorted non-decreasing, with multiplicity.
class SpectrumReal {
public:
    SpectrumReal() = default;
    explicit SpectrumReal(std::vector<double> values);

    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    double sum() const;

private:
    std::vector<double> values_;
};

/// Unordered multiset of complex eigenvalues or roots.
using SpectrumComplex = std::vector<Complex>;

/**
 * Real symmetric matrix. Construction checks symmetry within a relative
 * tolerance and then stores the exactly symmetrized average, so entry (i,j)
 * and (j,i) are bitwise equal.
 */
class SymmetricMatrix {
public:
    SymmetricMatrix() = default;
    explicit SymmetricMatrix(const RealMatrix& m, double tol = 1e-12);

    static SymmetricMatrix identity(Eigen::Index m);
    static SymmetricMatrix diagonal(const std::vector<double>& d);

    Eigen::Index size() const { return m_.rows(); }
    const RealMatrix& matrix() const { return m_; }
    double operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

    friend SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b);
    friend SymmetricMatrix operator*(double s, const SymmetricMatrix& a);

private:
    RealMatrix m_;
};

struct SymmetricEigen {
    SpectrumReal values;
    RealMatrix vectors;  // column k pairs with values[k]
};

/// Cyclic Jacobi eigen-decomposition of a real symmetric matrix.
SymmetricEigen sym_eigen(const SymmetricMatrix& s);
SpectrumReal sym_eigs(const SymmetricMatrix& s);

/// Eigenvalues of a complex Hermitian matrix through its real symmetric embedding.
SpectrumReal hermitian_eigs(const ComplexMatrix& h);

/**
 * Eigenvalues of a general square complex matrix: balancing, Householder
 * reduction to Hessenberg form, then single-shift QR with Wilkinson shifts.
 * Throws ConvergenceError past 30*m QR sweeps, or when the eigenvalue sum
 * misses the trace by more than the a-posteriori bound.
 */
SpectrumComplex gen_eigs(const ComplexMatrix& m);

/// Roots of a nonzero polynomial through its scalar companion matrix.
SpectrumComplex poly_roots(const ScalarPolynomial& f);

struct RootClassification {
    bool all_real = false;
    SpectrumReal reals;  // real parts of the roots accepted as real
};

/// A root z is real when |Im z| <= tol * (1 + |z|).
RootClassification real_root_classify(const SpectrumComplex& roots, double tol = 1e-8);

/// Max distance between two real spectra matched in sorted order; +inf on size mismatch.
double spectrum_distance(const SpectrumReal& a, const SpectrumReal& b);

/**
 * Max distance between two complex multisets after a minimum-total-cost
 * assignment; +inf on size mismatch.
 */
double spectrum_distance(const SpectrumComplex& a, const SpectrumComplex& b);

}  // namespace hyperpoly
