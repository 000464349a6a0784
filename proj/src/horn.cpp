#include "hyperpoly/horn.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "hyperpoly/errors.hpp"

namespace hyperpoly {

namespace {

std::vector<std::vector<int>> subsets(int n, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= n - (r - static_cast<int>(cur.size())) + 1; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

int sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

struct Decreasing {
    std::vector<int> i, j, k;
};

// T^n_r for non-increasing eigenvalues: sum k_gamma(A+B) <= sum i_alpha(A) + sum j_beta(B).
const std::vector<Decreasing>& decreasing_triples(int n, int r) {
    static std::map<std::pair<int, int>, std::vector<Decreasing>> memo;
    const auto key = std::make_pair(n, r);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Decreasing> out;
    const std::vector<std::vector<int>> sets = subsets(n, r);
    for (const auto& i : sets)
        for (const auto& j : sets)
            for (const auto& k : sets) {
                if (sum_of(i) + sum_of(j) != sum_of(k) + r * (r + 1) / 2) continue;
                bool ok = true;
                for (int p = 1; p < r && ok; ++p) {
                    for (const auto& [f, g, h] : decreasing_triples(r, p)) {
                        int lhs = 0, rhs = p * (p + 1) / 2;
                        for (int x : f) lhs += i[static_cast<std::size_t>(x - 1)];
                        for (int x : g) lhs += j[static_cast<std::size_t>(x - 1)];
                        for (int x : h) rhs += k[static_cast<std::size_t>(x - 1)];
                        if (lhs > rhs) {
                            ok = false;
                            break;
                        }
                    }
                }
                if (ok) out.push_back({i, j, k});
            }
    return memo.emplace(key, std::move(out)).first->second;
}

double index_sum(const std::vector<double>& lam, const std::vector<int>& idx) {
    double acc = 0.0;
    for (int i : idx) acc += lam[static_cast<std::size_t>(i - 1)];
    return acc;
}

}  // namespace

void validate(const HornTriple& t) {
    if (t.m < 1) throw ShapeError("ambient size must be positive");
    const std::size_t r = t.u.size();
    if (r == 0 || t.s.size() != r || t.t.size() != r) throw ShapeError("index sets must be nonempty and equal in size");
    for (const auto* set : {&t.u, &t.s, &t.t}) {
        for (std::size_t a = 0; a < r; ++a) {
            if ((*set)[a] < 1 || (*set)[a] > t.m) throw ShapeError("index out of range");
            if (a > 0 && (*set)[a] <= (*set)[a - 1]) throw ShapeError("index sets must be strictly increasing");
        }
    }
}

SpectrumReal d_vector(const MatrixPolynomial& l, double tol) {
    const RootClassification cls = real_root_classify(det_roots(l), tol);
    if (!cls.all_real) throw NonRealRootsError("det L has non-real roots");
    return cls.reals;
}

std::vector<int> bar(const std::vector<int>& set, int m) {
    std::vector<int> out;
    for (int i : set) {
        if (i < 1 || i > m) throw ShapeError("index out of range");
        out.push_back(m + 1 - i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<HornTriple> horn_triples(int m) {
    if (m < 1 || m > 5) throw PreconditionError("Horn triples are generated for 1 <= m <= 5");
    std::vector<HornTriple> out;
    for (int r = 1; r <= m; ++r) {
        for (const auto& d : decreasing_triples(m, r)) {
            // Largest eigenvalue first becomes largest last: index i -> m + 1 - i.
            out.push_back({bar(d.k, m), bar(d.i, m), bar(d.j, m), m});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<HornTriple> sum_condition_candidates(int m) {
    if (m < 1) throw PreconditionError("m must be positive");
    std::vector<HornTriple> out;
    for (int r = 1; r <= m; ++r) {
        const std::vector<std::vector<int>> sets = subsets(m, r);
        const int offset = r * (m + 1) - r * (r + 1) / 2;
        for (const auto& u : sets)
            for (const auto& s : sets)
                for (const auto& t : sets)
                    if (sum_of(s) + sum_of(t) == sum_of(u) + offset) out.push_back({u, s, t, m});
    }
    std::sort(out.begin(), out.end());
    return out;
}

HornSampleBank make_sample_bank(int m, int trials, std::uint64_t seed) {
    if (m < 1 || trials < 1) throw PreconditionError("bank needs m >= 1 and trials >= 1");
    HornSampleBank bank;
    bank.m = m;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    auto hermitian = [&] {
        ComplexMatrix a(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) a(i, j) = Complex{g(rng), g(rng)};
        return ComplexMatrix(0.5 * (a + a.adjoint()));
    };
    for (int k = 0; k < trials; ++k) {
        ComplexMatrix x, y;
        if (k % 2 == 0) {
            x = hermitian();
            y = hermitian();
        } else {
            x = ComplexMatrix::Zero(m, m);
            y = ComplexMatrix::Zero(m, m);
            std::vector<int> perm(static_cast<std::size_t>(m));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            for (int i = 0; i < m; ++i) {
                x(i, i) = g(rng);
                y(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i)]) = g(rng);
            }
        }
        bank.x.push_back(hermitian_eigs(x).values());
        bank.y.push_back(hermitian_eigs(y).values());
        bank.sum.push_back(hermitian_eigs(x + y).values());
    }
    return bank;
}

bool empirical_triple_filter(const HornTriple& t, const HornSampleBank& bank, double tol) {
    validate(t);
    if (bank.m != t.m) throw ShapeError("bank size does not match the triple");
    for (std::size_t k = 0; k < bank.x.size(); ++k) {
        const double lhs = index_sum(bank.sum[k], t.u);
        const double rhs = index_sum(bank.x[k], t.s) + index_sum(bank.y[k], t.t);
        if (lhs > rhs + tol) return false;
    }
    return true;
}

bool empirical_triple_filter(const HornTriple& t, int trials, std::uint64_t seed, double tol) {
    validate(t);
    return empirical_triple_filter(t, make_sample_bank(t.m, trials, seed), tol);
}

HornCheck verify_horn_inequality(const MatrixPolynomial& l, const MatrixPolynomial& m, double alpha,
                                 const HornTriple& t, double tol) {
    validate(t);
    if (l.size() != m.size() || l.degree() != m.degree()) throw ShapeError("pair needs equal size and degree");
    if (t.m != l.size() * l.degree()) throw ShapeError("triple must be taken with respect to n * ell");
    const SpectrumReal dc = d_vector(affine_combine(l, m, alpha));
    const SpectrumReal dl = d_vector(l);
    const SpectrumReal dm = d_vector(m);
    const std::vector<int> s = alpha < 0.0 ? bar(t.s, t.m) : t.s;
    const std::vector<int> tt = 1.0 - alpha < 0.0 ? bar(t.t, t.m) : t.t;
    HornCheck c;
    c.lhs = index_sum(dc.values(), t.u);
    c.rhs = alpha * index_sum(dl.values(), s) + (1.0 - alpha) * index_sum(dm.values(), tt);
    c.holds = c.lhs <= c.rhs + tol * (1.0 + std::abs(c.lhs) + std::abs(c.rhs));
    return c;
}

}  // namespace hyperpoly
