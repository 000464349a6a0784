#include "hyperpoly/sdpcheck.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "hyperpoly/errors.hpp"

namespace hyperpoly {

namespace {

// Symmetric P <-> (P_ii, sqrt(2) P_ij for i < j), so the Euclidean norm is the Frobenius norm.
RealVector sym_to_vec(const RealMatrix& p) {
    const Eigen::Index m = p.rows();
    RealVector v(m * (m + 1) / 2);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = i; j < m; ++j) v(k++) = i == j ? p(i, i) : std::numbers::sqrt2 * p(i, j);
    return v;
}

RealMatrix vec_to_sym(const RealVector& v, Eigen::Index m) {
    RealMatrix p(m, m);
    Eigen::Index k = 0;
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = i; j < m; ++j) {
            const double x = i == j ? v(k) : v(k) / std::numbers::sqrt2;
            p(i, j) = x;
            p(j, i) = x;
            ++k;
        }
    return p;
}

using LinearMap = std::function<RealVector(const RealMatrix&)>;

// Orthonormal basis of the kernel of a linear map on symmetric m x m matrices.
std::vector<SymmetricMatrix> symmetric_kernel(const LinearMap& op, Eigen::Index m) {
    const Eigen::Index d = m * (m + 1) / 2;
    if (d == 0) return {};
    const Eigen::Index rows = op(RealMatrix::Zero(m, m)).size();
    RealMatrix k(std::max(rows, d), d);
    k.setZero();
    for (Eigen::Index c = 0; c < d; ++c) {
        k.col(c).head(rows) = op(vec_to_sym(RealVector::Unit(d, c), m));
    }
    const Eigen::JacobiSVD<RealMatrix> svd(k, Eigen::ComputeFullV);
    const RealVector& s = svd.singularValues();
    const double thr = 1e-10 * std::max(1.0, s(0));
    std::vector<SymmetricMatrix> out;
    for (Eigen::Index c = 0; c < d; ++c) {
        if (s(c) <= thr) out.emplace_back(vec_to_sym(svd.matrixV().col(c), m));
    }
    return out;
}

RealVector flatten(const RealMatrix& m) { return Eigen::Map<const RealVector>(m.data(), m.size()); }

double lambda_min(const RealMatrix& p) { return sym_eigs(SymmetricMatrix(p))[0]; }

}  // namespace

Realization minimal_realization(const ScalarPolynomial& f, const ScalarPolynomial& h) {
    if (!f.is_monic() || !h.is_monic()) throw ShapeError("polynomials must be monic");
    if (f.degree() != h.degree() || f.degree() < 1) throw ShapeError("polynomials must share a positive degree");
    if (!f.is_real(1e-12) || !h.is_real(1e-12)) throw ShapeError("polynomials must have real coefficients");
    if (!coprime(f, h)) throw PreconditionError("f and h must be relatively prime");
    const int ell = f.degree();
    Realization r;
    r.a = RealMatrix::Zero(ell, ell);
    for (int i = 0; i + 1 < ell; ++i) r.a(i, i + 1) = 1.0;
    for (int j = 0; j < ell; ++j) r.a(ell - 1, j) = -f[static_cast<std::size_t>(j)].real();
    r.b = RealVector::Unit(ell, ell - 1);
    r.c = RealVector(ell);
    for (int j = 0; j < ell; ++j) r.c(j) = (h[static_cast<std::size_t>(j)] - f[static_cast<std::size_t>(j)]).real();

    double radius = 1.0;
    for (int j = 0; j < ell; ++j) radius += std::abs(f[static_cast<std::size_t>(j)]);
    const ComplexMatrix a = r.a.cast<Complex>();
    for (int k = 0; k < 2 * ell; ++k) {
        const Complex z = radius * std::polar(1.0, std::numbers::pi * (k + 0.5) / ell);
        const ComplexMatrix res = z * ComplexMatrix::Identity(ell, ell) - a;
        const ComplexVector x = res.partialPivLu().solve(r.b.cast<Complex>());
        const Complex lhs = 1.0 + r.c.cast<Complex>().dot(x);
        const Complex rhs = h(z) / f(z);
        if (std::abs(lhs - rhs) > 1e-8 * (1.0 + std::abs(rhs))) {
            throw DegenerateError("realization does not reproduce h / f");
        }
    }
    return r;
}

MaxMinEig subspace_max_min_eig(const std::vector<SymmetricMatrix>& basis, Eigen::Index size, const SdpOptions& opts) {
    for (const auto& e : basis)
        if (e.size() != size) throw ShapeError("basis matrices must share the given size");
    if (basis.empty()) {
        return {SymmetricMatrix(RealMatrix::Zero(size, size)), -std::numeric_limits<double>::infinity()};
    }
    const Eigen::Index d = size * (size + 1) / 2;
    const auto k = static_cast<Eigen::Index>(basis.size());
    // Two passes of modified Gram-Schmidt.
    RealMatrix q(d, k);
    for (Eigen::Index c = 0; c < k; ++c) {
        RealVector v = sym_to_vec(basis[static_cast<std::size_t>(c)].matrix());
        const double n0 = v.norm();
        for (int pass = 0; pass < 2; ++pass)
            for (Eigen::Index j = 0; j < c; ++j) v -= q.col(j).dot(v) * q.col(j);
        if (v.norm() <= 1e-10 * n0 || n0 == 0.0) throw PreconditionError("basis is linearly dependent");
        q.col(c) = v / v.norm();
    }
    auto assemble = [&](const RealVector& t) { return vec_to_sym(q * t, size); };
    auto objective = [&](const RealVector& t) { return lambda_min(assemble(t)); };

    RealVector best_t = RealVector::Unit(k, 0);
    double best = -std::numeric_limits<double>::infinity();
    if (k == 1) {
        for (double s : {1.0, -1.0}) {
            const RealVector t = RealVector::Constant(1, s);
            const double v = objective(t);
            if (v > best) best = v, best_t = t;
        }
        return {SymmetricMatrix(assemble(best_t)), best};
    }

    std::vector<RealMatrix> e;
    for (Eigen::Index c = 0; c < k; ++c) e.push_back(vec_to_sym(q.col(c), size));
    for (int s = 0; s < opts.starts; ++s) {
        RealVector t(k);
        if (s == 0) {
            t = q.transpose() * sym_to_vec(RealMatrix::Identity(size, size));
        } else {
            std::mt19937_64 rng(opts.seed + static_cast<std::uint64_t>(s));
            std::normal_distribution<double> g(0.0, 1.0);
            for (Eigen::Index i = 0; i < k; ++i) t(i) = g(rng);
        }
        if (t.norm() < 1e-12) t = RealVector::Unit(k, s % k);
        t.normalize();
        double val = objective(t);
        double step = 0.5;
        for (int it = 0; it < opts.iterations; ++it) {
            const SymmetricEigen eig = sym_eigen(SymmetricMatrix(assemble(t)));
            // Soft-min weights over the eigenvalues, width tied to the current step.
            const double mu = std::max(1e-9, 0.1 * step);
            RealVector grad = RealVector::Zero(k);
            double wsum = 0.0;
            for (std::size_t i = 0; i < eig.values.size(); ++i) {
                const double w = std::exp(-(eig.values[i] - eig.values[0]) / mu);
                if (w < 1e-16) break;
                wsum += w;
                const RealVector u = eig.vectors.col(static_cast<Eigen::Index>(i));
                for (Eigen::Index c = 0; c < k; ++c) grad(c) += w * u.dot(e[static_cast<std::size_t>(c)] * u);
            }
            grad /= wsum;
            grad -= grad.dot(t) * t;
            const double gn = grad.norm();
            if (gn < 1e-15) break;
            bool improved = false;
            while (step > 1e-14) {
                const RealVector tn = (t + step * grad / gn).normalized();
                const double vn = objective(tn);
                if (vn > val) {
                    t = tn;
                    val = vn;
                    step = std::min(1.0, 2.0 * step);
                    improved = true;
                    break;
                }
                step *= 0.5;
            }
            if (!improved) break;
        }
        if (val > best) best = val, best_t = t;
    }
    return {SymmetricMatrix(assemble(best_t)), best};
}

std::vector<SymmetricMatrix> symmetrizer_subspace(const std::vector<RealMatrix>& cs) {
    if (cs.empty()) throw ShapeError("need at least one matrix");
    const Eigen::Index m = cs.front().rows();
    for (const auto& c : cs)
        if (c.rows() != m || c.cols() != m) throw ShapeError("matrices must be square of equal size");
    return symmetric_kernel(
        [&](const RealMatrix& p) {
            RealVector out(static_cast<Eigen::Index>(cs.size()) * m * m);
            for (std::size_t i = 0; i < cs.size(); ++i)
                out.segment(static_cast<Eigen::Index>(i) * m * m, m * m) = flatten(p * cs[i] - cs[i].transpose() * p);
            return out;
        },
        m);
}

SymmetrizerCertificate feasibility_symmetrizer(const RealMatrix& cf, const RealMatrix& ch, const SdpOptions& opts) {
    const std::vector<RealMatrix> cs{cf, ch};
    const std::vector<SymmetricMatrix> basis = symmetrizer_subspace(cs);
    const MaxMinEig best = subspace_max_min_eig(basis, cf.rows(), opts);
    SymmetrizerCertificate cert;
    cert.p = best.p;
    cert.min_eig = basis.empty() ? best.min_eig : lambda_min(cert.p.matrix());
    const RealMatrix& p = cert.p.matrix();
    for (const auto& c : cs) cert.constraint_residual = std::max(cert.constraint_residual, (p * c - c.transpose() * p).norm());
    cert.feasible = cert.min_eig >= opts.pd_margin && cert.constraint_residual <= opts.eq_tol;
    return cert;
}

SymmetrizerCertificate feasibility_realization(const Realization& r, const SdpOptions& opts) {
    const Eigen::Index ell = r.a.rows();
    if (r.a.cols() != ell || r.b.size() != ell || r.c.size() != ell) throw ShapeError("realization shapes disagree");
    // P c^T may only have a component along b.
    RealMatrix off_b = RealMatrix::Identity(ell, ell);
    for (Eigen::Index i = 0; i < ell; ++i) off_b.row(i) -= r.b(i) * r.b.transpose();
    const std::vector<SymmetricMatrix> basis = symmetric_kernel(
        [&](const RealMatrix& p) {
            RealVector out(ell * ell + ell);
            out.head(ell * ell) = flatten(r.a * p - p * r.a.transpose());
            out.tail(ell) = off_b * (p * r.c);
            return out;
        },
        ell);
    const MaxMinEig best = subspace_max_min_eig(basis, ell, opts);
    SymmetrizerCertificate cert;
    cert.p = best.p;
    cert.min_eig = basis.empty() ? best.min_eig : lambda_min(cert.p.matrix());
    const RealMatrix& p = cert.p.matrix();
    const RealVector pc = p * r.c;
    cert.rhs_scale = r.b.dot(pc);
    cert.constraint_residual = std::max((r.a * p - p * r.a.transpose()).norm(), (pc - cert.rhs_scale * r.b).norm());
    cert.feasible = cert.min_eig >= opts.pd_margin && cert.constraint_residual <= opts.eq_tol &&
                    std::abs(cert.rhs_scale) > opts.eq_tol;
    return cert;
}

double congruence_asymmetry(const SymmetricMatrix& p, const RealMatrix& c) {
    const SymmetricEigen eig = sym_eigen(p);
    if (eig.values[0] <= 0.0) return std::numeric_limits<double>::infinity();
    RealVector root(p.size()), inv_root(p.size());
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        root(i) = std::sqrt(eig.values[static_cast<std::size_t>(i)]);
        inv_root(i) = 1.0 / root(i);
    }
    const RealMatrix& v = eig.vectors;
    const RealMatrix d = v * root.asDiagonal() * v.transpose();
    const RealMatrix d_inv = v * inv_root.asDiagonal() * v.transpose();
    const RealMatrix x = d * c * d_inv;
    return (x - x.transpose()).norm() / std::max(1.0, x.norm());
}

}  // namespace hyperpoly
