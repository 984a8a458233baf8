#include "kschur/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace kschur {

namespace {

// Lattice points of the dominance-filtered orbit set, without the dimension
// guard; shared by permutahedron_points and is_snp_symmetric.
std::vector<std::vector<int>> dominance_points(const Partition& lambda, int n) {
    std::vector<std::vector<int>> points;
    for (const Partition& mu : partitions_of(lambda.size())) {
        if (mu.length() > n || !dominates(mu, lambda)) continue;
        auto perms = padded_permutations(mu, n);
        points.insert(points.end(), perms.begin(), perms.end());
    }
    std::sort(points.begin(), points.end());
    return points;
}

}  // namespace

Support permutahedron_points(const Partition& lambda, int n) {
    if (n < lambda.length())
        throw std::invalid_argument("n must be at least the length of lambda");
    if (n < 1) throw std::invalid_argument("n must be positive");
    return Support{n, dominance_points(lambda, n)};
}

namespace {

// Compact point encoding when coordinates fit a byte and n <= 8; otherwise a
// sorted-vector membership fallback.
struct PointSet {
    bool packed = false;
    std::vector<uint64_t> keys;
    const std::vector<std::vector<int>>* raw = nullptr;

    explicit PointSet(const std::vector<std::vector<int>>& pts) : raw(&pts) {
        if (pts.empty()) return;
        int n = (int)pts[0].size();
        if (n > 8) return;
        for (auto& p : pts)
            for (int x : p)
                if (x < 0 || x > 255) return;
        packed = true;
        keys.reserve(pts.size());
        for (auto& p : pts) keys.push_back(pack(p));
        std::sort(keys.begin(), keys.end());
    }
    static uint64_t pack(const std::vector<int>& p) {
        uint64_t k = 0;
        for (std::size_t i = 0; i < p.size(); ++i) k |= uint64_t(p[i]) << (8 * i);
        return k;
    }
    bool contains(const std::vector<int>& p) const {
        if (packed)
            return std::binary_search(keys.begin(), keys.end(), pack(p));
        return std::binary_search(raw->begin(), raw->end(), p);
    }
};

}  // namespace

std::optional<MConvexWitness> m_convex_violation(const Support& s, SearchBudget* budget) {
    PointSet set(s.points);
    std::vector<int> moved;
    for (const auto& alpha : s.points) {
        for (const auto& beta : s.points) {
            if (budget) budget->charge();
            for (int i = 0; i < s.n; ++i) {
                if (alpha[i] <= beta[i]) continue;
                bool exchanged = false;
                moved = alpha;
                --moved[i];
                for (int j = 0; j < s.n && !exchanged; ++j) {
                    if (alpha[j] >= beta[j]) continue;
                    ++moved[j];
                    if (set.contains(moved)) exchanged = true;
                    --moved[j];
                }
                if (!exchanged) return MConvexWitness{alpha, beta, i};
            }
        }
    }
    return std::nullopt;
}

bool is_m_convex(const Support& s, SearchBudget* budget) {
    return !m_convex_violation(s, budget).has_value();
}

bool is_snp_symmetric(const MonExpansion& f, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (f.coeffs.empty()) return true;
    Partition dominant;
    bool have = false;
    for (const auto& [mu, c] : f.coeffs) {
        bool dominates_all = true;
        for (const auto& [nu, c2] : f.coeffs)
            if (!dominates(nu, mu)) {
                dominates_all = false;
                break;
            }
        if (dominates_all) {
            dominant = mu;
            have = true;
            break;
        }
    }
    if (!have) throw std::invalid_argument("dominance incomparable keys");
    return support(f, n).points == dominance_points(dominant, n);
}

NormalizedPoly normalize(const MonExpansion& f, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    NormalizedPoly out;
    out.n = n;
    out.degree = f.degree;
    for (const auto& [mu, c] : f.coeffs) {
        for (auto& alpha : padded_permutations(mu, n)) {
            mpz_class denom = 1;
            for (int a : alpha) {
                mpz_class fact;
                mpz_fac_ui(fact.get_mpz_t(), a);
                denom *= fact;
            }
            mpq_class q(mpz_class(static_cast<long>(c)), denom);
            q.canonicalize();
            out.terms.emplace(alpha, q);
        }
    }
    return out;
}

std::vector<mpq_class> characteristic_polynomial(const std::vector<std::vector<mpq_class>>& a) {
    int n = (int)a.size();
    using Mat = std::vector<std::vector<mpq_class>>;
    auto mul = [n](const Mat& x, const Mat& y) {
        Mat z(n, std::vector<mpq_class>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (x[i][l] == 0) continue;
                for (int j = 0; j < n; ++j) z[i][j] += x[i][l] * y[l][j];
            }
        return z;
    };
    auto trace = [n](const Mat& x) {
        mpq_class t = 0;
        for (int i = 0; i < n; ++i) t += x[i][i];
        return t;
    };

    std::vector<mpq_class> c(n + 1, 0);
    c[n] = 1;  // coefficient of lambda^n
    Mat m = a;
    for (int j = 1; j <= n; ++j) {
        if (j > 1) {
            for (int i = 0; i < n; ++i) m[i][i] += c[n - j + 1];
            m = mul(a, m);
        }
        c[n - j] = -trace(m) / j;
    }
    return c;  // c[d] is the coefficient of lambda^d
}

int descartes_positive_roots(const std::vector<mpq_class>& coeffs) {
    int variations = 0;
    int prev = 0;
    for (int d = (int)coeffs.size() - 1; d >= 0; --d) {
        int s = sgn(coeffs[d]);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

namespace {

void multisets(int n, int size, std::vector<int>& acc,
               const std::function<void(const std::vector<int>&)>& emit) {
    if ((int)acc.size() == size) {
        emit(acc);
        return;
    }
    int start = acc.empty() ? 0 : acc.back();
    for (int i = start; i < n; ++i) {
        acc.push_back(i);
        multisets(n, size, acc, emit);
        acc.pop_back();
    }
}

}  // namespace

std::optional<LorentzianFailure> lorentzian_violation(const NormalizedPoly& g) {
    if (g.degree < 1) throw std::invalid_argument("degree must be at least 1");

    for (const auto& [alpha, c] : g.terms)
        if (c < 0) {
            LorentzianFailure f;
            f.reason = "negative coefficient";
            f.witness_point = alpha;
            return f;
        }

    Support supp;
    supp.n = g.n;
    for (const auto& [alpha, c] : g.terms)
        if (c != 0) supp.points.push_back(alpha);
    std::sort(supp.points.begin(), supp.points.end());
    if (auto w = m_convex_violation(supp)) {
        LorentzianFailure f;
        f.reason = "support not m-convex";
        f.witness_point = w->alpha;
        f.witness_point2 = w->beta;
        return f;
    }

    if (g.degree < 2) return std::nullopt;

    std::optional<LorentzianFailure> failure;
    std::vector<int> acc;
    multisets(g.n, g.degree - 2, acc, [&](const std::vector<int>& ms) {
        if (failure) return;
        std::vector<int> take(g.n, 0);
        for (int i : ms) ++take[i];

        // quadratic form left after differentiating by the multiset
        std::map<std::vector<int>, mpq_class> quad;
        for (const auto& [alpha, c] : g.terms) {
            mpq_class coeff = c;
            std::vector<int> beta(alpha);
            bool ok = true;
            for (int i = 0; i < g.n && ok; ++i) {
                for (int t = 0; t < take[i]; ++t) {
                    if (beta[i] == 0) {
                        ok = false;
                        break;
                    }
                    coeff *= beta[i];
                    --beta[i];
                }
            }
            if (ok && coeff != 0) quad[beta] += coeff;
        }

        std::vector<std::vector<mpq_class>> hess(g.n, std::vector<mpq_class>(g.n, 0));
        for (const auto& [beta, c] : quad) {
            std::vector<int> idx;
            for (int i = 0; i < g.n; ++i)
                for (int t = 0; t < beta[i]; ++t) idx.push_back(i);
            if (idx.size() != 2) continue;
            if (idx[0] == idx[1]) {
                hess[idx[0]][idx[0]] += 2 * c;
            } else {
                hess[idx[0]][idx[1]] += c;
                hess[idx[1]][idx[0]] += c;
            }
        }

        int positive = descartes_positive_roots(characteristic_polynomial(hess));
        if (positive > 1) {
            LorentzianFailure f;
            f.reason = "hessian signature";
            f.derivative_multiset = ms;
            f.positive_eigenvalues = positive;
            failure = std::move(f);
        }
    });
    return failure;
}

bool lorentzian_check(const NormalizedPoly& g) {
    return !lorentzian_violation(g).has_value();
}

bool rado_containment(const Partition& mu, const Partition& lambda, int n) {
    if (mu.size() != lambda.size())
        throw std::invalid_argument("incomparable sizes");
    if (n < std::max(mu.length(), lambda.length()))
        throw std::invalid_argument("n must cover both lengths");
    return dominates(mu, lambda);
}

}  // namespace kschur
