#include "hyperpoly/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "hyperpoly/errors.hpp"

namespace hyperpoly {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double abs1(const Complex& z) { return std::abs(z.real()) + std::abs(z.imag()); }

// Parlett-Reinsch balancing with radix 2 (no permutations).
void balance(ComplexMatrix& h) {
    const Eigen::Index m = h.rows();
    constexpr double radix = 2.0;
    constexpr double sqrdx = radix * radix;
    bool done = false;
    while (!done) {
        done = true;
        for (Eigen::Index i = 0; i < m; ++i) {
            double c = 0.0;
            double r = 0.0;
            for (Eigen::Index j = 0; j < m; ++j) {
                if (j == i) continue;
                c += abs1(h(j, i));
                r += abs1(h(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            double g = r / radix;
            double f = 1.0;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sqrdx;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                h.row(i) /= f;
                h.col(i) *= f;
            }
        }
    }
}

void reduce_to_hessenberg(ComplexMatrix& h) {
    const Eigen::Index m = h.rows();
    for (Eigen::Index k = 0; k + 2 < m; ++k) {
        const Eigen::Index len = m - k - 1;
        ComplexVector v = h.block(k + 1, k, len, 1);
        const double xnorm = v.norm();
        if (xnorm == 0.0) continue;
        const Complex x0 = v(0);
        const Complex phase = std::abs(x0) == 0.0 ? Complex{1.0} : x0 / std::abs(x0);
        v(0) += phase * xnorm;
        const double vnorm = v.norm();
        if (vnorm == 0.0) continue;
        v /= vnorm;
        // H <- (I - 2vv*) H (I - 2vv*) on the trailing rows/columns.
        Eigen::RowVectorXcd w = v.adjoint() * h.block(k + 1, k, len, m - k);
        h.block(k + 1, k, len, m - k) -= 2.0 * v * w;
        ComplexVector u = h.block(0, k + 1, m, len) * v;
        h.block(0, k + 1, m, len) -= 2.0 * u * v.adjoint();
        for (Eigen::Index i = k + 2; i < m; ++i) h(i, k) = Complex{};
    }
}

struct Givens {
    double c;
    Complex s;
};

// Rotation G = [[c, s], [-conj(s), c]] with G * (a, b)^T = (r, 0)^T.
Givens make_givens(const Complex& a, const Complex& b) {
    if (b == Complex{}) return {1.0, Complex{}};
    if (a == Complex{}) return {0.0, Complex{1.0}};
    const double na = std::abs(a);
    const double norm = std::hypot(na, std::abs(b));
    const double c = na / norm;
    const Complex s = (a / na) * std::conj(b) / norm;
    return {c, s};
}

Complex wilkinson_shift(const ComplexMatrix& h, Eigen::Index hi) {
    const Complex a = h(hi - 1, hi - 1);
    const Complex b = h(hi - 1, hi);
    const Complex c = h(hi, hi - 1);
    const Complex d = h(hi, hi);
    const Complex half = 0.5 * (a - d);
    const Complex disc = std::sqrt(half * half + b * c);
    const Complex mid = 0.5 * (a + d);
    const Complex mu1 = mid + disc;
    const Complex mu2 = mid - disc;
    return std::abs(mu1 - d) <= std::abs(mu2 - d) ? mu1 : mu2;
}

SpectrumComplex hessenberg_qr(ComplexMatrix& h) {
    const Eigen::Index m = h.rows();
    SpectrumComplex eig(static_cast<std::size_t>(m));
    const long cap = 30L * m;
    long sweeps = 0;
    int since_deflation = 0;
    Eigen::Index hi = m - 1;
    std::vector<Givens> rot(static_cast<std::size_t>(m));
    while (hi >= 0) {
        if (hi == 0) {
            eig[0] = h(0, 0);
            break;
        }
        Eigen::Index lo = hi;
        while (lo > 0) {
            const double scale = abs1(h(lo - 1, lo - 1)) + abs1(h(lo, lo));
            if (abs1(h(lo, lo - 1)) <= kEps * (scale == 0.0 ? 1.0 : scale)) {
                h(lo, lo - 1) = Complex{};
                break;
            }
            --lo;
        }
        if (lo == hi) {
            eig[static_cast<std::size_t>(hi)] = h(hi, hi);
            --hi;
            since_deflation = 0;
            continue;
        }
        if (++sweeps > cap) {
            throw ConvergenceError("QR iteration exceeded " + std::to_string(cap) + " sweeps");
        }
        ++since_deflation;
        Complex mu;
        if (since_deflation % 10 == 0) {
            // Exceptional shift to break cycles.
            mu = h(hi, hi) + Complex{0.75 * std::abs(h(hi, hi - 1).real()), 0.25 * std::abs(h(hi, hi - 1))};
        } else {
            mu = wilkinson_shift(h, hi);
        }
        for (Eigen::Index i = lo; i <= hi; ++i) h(i, i) -= mu;
        for (Eigen::Index k = lo; k < hi; ++k) {
            const Givens g = make_givens(h(k, k), h(k + 1, k));
            rot[static_cast<std::size_t>(k)] = g;
            for (Eigen::Index j = k; j <= hi; ++j) {
                const Complex x = h(k, j);
                const Complex y = h(k + 1, j);
                h(k, j) = g.c * x + g.s * y;
                h(k + 1, j) = -std::conj(g.s) * x + g.c * y;
            }
        }
        for (Eigen::Index k = lo; k < hi; ++k) {
            const Givens g = rot[static_cast<std::size_t>(k)];
            const Eigen::Index last = std::min(k + 2, hi);
            for (Eigen::Index i = lo; i <= last; ++i) {
                const Complex x = h(i, k);
                const Complex y = h(i, k + 1);
                h(i, k) = x * g.c + y * std::conj(g.s);
                h(i, k + 1) = -x * g.s + y * g.c;
            }
        }
        for (Eigen::Index i = lo; i <= hi; ++i) h(i, i) += mu;
    }
    return eig;
}

// Minimum-cost perfect assignment (Hungarian algorithm), returns match[i] = j.
std::vector<std::size_t> assignment(const std::vector<std::vector<double>>& cost) {
    const std::size_t n = cost.size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    std::vector<char> used(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::fill(minv.begin(), minv.end(), inf);
        std::fill(used.begin(), used.end(), 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = p[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<std::size_t> match(n);
    for (std::size_t j = 1; j <= n; ++j) match[p[j] - 1] = j - 1;
    return match;
}

}  // namespace

SpectrumReal::SpectrumReal(std::vector<double> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
}

double SpectrumReal::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

SymmetricMatrix::SymmetricMatrix(const RealMatrix& m, double tol) {
    if (m.rows() != m.cols()) throw ShapeError("symmetric matrix must be square");
    const double scale = 1.0 + m.cwiseAbs().maxCoeff();
    if (m.size() > 0 && (m - m.transpose()).cwiseAbs().maxCoeff() > tol * scale) {
        throw PreconditionError("matrix is not symmetric");
    }
    m_ = 0.5 * (m + m.transpose());
}

SymmetricMatrix SymmetricMatrix::identity(Eigen::Index m) {
    return SymmetricMatrix(RealMatrix::Identity(m, m));
}

SymmetricMatrix SymmetricMatrix::diagonal(const std::vector<double>& d) {
    RealMatrix m = RealMatrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
    return SymmetricMatrix(m);
}

SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    if (a.size() != b.size()) throw ShapeError("symmetric matrix size mismatch");
    SymmetricMatrix out;
    out.m_ = a.m_ + b.m_;
    return out;
}

SymmetricMatrix operator*(double s, const SymmetricMatrix& a) {
    SymmetricMatrix out;
    out.m_ = s * a.m_;
    return out;
}

SymmetricEigen sym_eigen(const SymmetricMatrix& s) {
    RealMatrix a = s.matrix();
    const Eigen::Index m = a.rows();
    RealMatrix v = RealMatrix::Identity(m, m);
    const double fro = a.norm();
    for (int sweep = 0; sweep < 100 && m > 1; ++sweep) {
        double off = 0.0;
        for (Eigen::Index p = 0; p < m; ++p)
            for (Eigen::Index q = p + 1; q < m; ++q) off += 2.0 * a(p, q) * a(p, q);
        if (std::sqrt(off) <= 1e-17 * fro || off == 0.0) break;
        for (Eigen::Index p = 0; p < m; ++p) {
            for (Eigen::Index q = p + 1; q < m; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t;
                if (std::abs(tau) > 1e150) {
                    t = 0.5 / tau;
                } else {
                    t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = t * c;
                for (Eigen::Index k = 0; k < m; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - sn * akq;
                    a(k, q) = sn * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < m; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - sn * aqk;
                    a(q, k) = sn * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (Eigen::Index k = 0; k < m; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - sn * vkq;
                    v(k, q) = sn * vkp + c * vkq;
                }
            }
        }
    }
    std::vector<Eigen::Index> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::sort(order.begin(), order.end(), [&a](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });
    std::vector<double> vals;
    vals.reserve(order.size());
    RealMatrix vecs(m, m);
    for (std::size_t k = 0; k < order.size(); ++k) {
        vals.push_back(a(order[k], order[k]));
        vecs.col(static_cast<Eigen::Index>(k)) = v.col(order[k]);
    }
    return {SpectrumReal(std::move(vals)), std::move(vecs)};
}

SpectrumReal sym_eigs(const SymmetricMatrix& s) { return sym_eigen(s).values; }

SpectrumReal hermitian_eigs(const ComplexMatrix& h) {
    if (h.rows() != h.cols()) throw ShapeError("Hermitian matrix must be square");
    const Eigen::Index m = h.rows();
    RealMatrix big(2 * m, 2 * m);
    big.topLeftCorner(m, m) = h.real();
    big.bottomRightCorner(m, m) = h.real();
    big.topRightCorner(m, m) = -h.imag();
    big.bottomLeftCorner(m, m) = h.imag();
    const auto doubled = sym_eigs(SymmetricMatrix(big, 1e-10)).values();
    std::vector<double> vals;
    vals.reserve(static_cast<std::size_t>(m));
    for (std::size_t k = 0; k < doubled.size(); k += 2) vals.push_back(0.5 * (doubled[k] + doubled[k + 1]));
    return SpectrumReal(std::move(vals));
}

SpectrumComplex gen_eigs(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw ShapeError("eigenvalues require a square matrix");
    if (m.rows() == 0) return {};
    ComplexMatrix h = m;
    balance(h);
    reduce_to_hessenberg(h);
    SpectrumComplex eig = hessenberg_qr(h);

    Complex sum{};
    for (const auto& e : eig) sum += e;
    const double bound = 1e-8 * static_cast<double>(m.rows()) * (1.0 + m.norm());
    if (std::abs(sum - m.trace()) > bound) {
        throw ConvergenceError("eigenvalue sum does not reproduce the trace");
    }
    return eig;
}

SpectrumComplex poly_roots(const ScalarPolynomial& f) {
    if (f.is_zero()) throw PreconditionError("the zero polynomial has no well-defined roots");
    const ScalarPolynomial g = f.monic();
    const int d = g.degree();
    if (d == 0) return {};
    ComplexMatrix c = ComplexMatrix::Zero(d, d);
    for (int i = 0; i + 1 < d; ++i) c(i, i + 1) = Complex{1.0};
    for (int j = 0; j < d; ++j) c(d - 1, j) = -g[static_cast<std::size_t>(j)];
    return gen_eigs(c);
}

RootClassification real_root_classify(const SpectrumComplex& roots, double tol) {
    if (!(tol > 0.0)) throw PreconditionError("classification tolerance must be positive");
    RootClassification out;
    out.all_real = true;
    std::vector<double> reals;
    for (const auto& z : roots) {
        if (std::abs(z.imag()) <= tol * (1.0 + std::abs(z))) {
            reals.push_back(z.real());
        } else {
            out.all_real = false;
        }
    }
    out.reals = SpectrumReal(std::move(reals));
    return out;
}

double spectrum_distance(const SpectrumReal& a, const SpectrumReal& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

double spectrum_distance(const SpectrumComplex& a, const SpectrumComplex& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    if (a.empty()) return 0.0;
    std::vector<std::vector<double>> cost(a.size(), std::vector<double>(b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) cost[i][j] = std::abs(a[i] - b[j]);
    const auto match = assignment(cost);
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, cost[i][match[i]]);
    return d;
}

}  // namespace hyperpoly
