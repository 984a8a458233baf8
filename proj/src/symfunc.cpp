#include "kschur/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "kschur/tableau.hpp"

namespace kschur {

void MonExpansion::add(const Partition& mu, long long c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs.emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

void MonExpansion::add_scaled(const MonExpansion& other, long long factor) {
    if (factor == 0) return;
    if (other.coeffs.empty()) return;
    if (degree != other.degree) throw std::invalid_argument("degree mismatch");
    for (const auto& [mu, c] : other.coeffs) add(mu, c * factor);
}

MonExpansion schur_monomials(const Partition& lambda, SearchBudget* budget) {
    static std::map<Partition, MonExpansion> memo;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find(lambda);
        if (it != memo.end()) return it->second;
    }
    MonExpansion out;
    out.degree = lambda.size();
    for (const Partition& mu : partitions_of(lambda.size()))
        out.add(mu, kostka(lambda, mu.parts(), budget));
    std::lock_guard<std::mutex> lock(mtx);
    memo.emplace(lambda, out);
    return out;
}

MonExpansion dual_k_schur_monomials(const Partition& lambda, int k,
                                    SearchBudget* budget) {
    if (!lambda.empty() && lambda.parts()[0] > k)
        throw std::invalid_argument("not k-bounded");
    static std::map<std::pair<Partition, int>, MonExpansion> memo;
    static std::mutex mtx;
    std::pair<Partition, int> key{lambda, k};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    MonExpansion out;
    out.degree = lambda.size();
    // K^(k)_{lambda,mu} vanishes unless mu <| lambda, and then mu is k-bounded.
    for (const Partition& mu : partitions_of(lambda.size()))
        out.add(mu, k_kostka(lambda, mu.parts(), k, budget));
    if (out.coefficient(lambda) != 1)
        throw std::logic_error("dual k-Schur leading coefficient is not 1");
    std::lock_guard<std::mutex> lock(mtx);
    memo.emplace(std::move(key), out);
    return out;
}

namespace {

// Dense symmetric polynomial in `nvars` variables: exponent vector -> coeff.
using Dense = std::map<std::vector<int>, long long>;

Dense monomial_to_dense(const Partition& mu, int nvars) {
    Dense out;
    for (auto& alpha : padded_permutations(mu, nvars)) out.emplace(alpha, 1);
    return out;
}

Dense h_row_dense(int m, int nvars) {
    // h_m = sum over all partitions of m of m_mu
    Dense out;
    for (const Partition& mu : partitions_of(m)) {
        Dense part = monomial_to_dense(mu, nvars);
        out.insert(part.begin(), part.end());
    }
    return out;
}

MonExpansion symmetrize(const Dense& poly, int degree) {
    MonExpansion out;
    out.degree = degree;
    std::map<Partition, long long> seen;
    for (const auto& [alpha, c] : poly) {
        Partition mu = sort_to_partition(alpha);
        auto [it, inserted] = seen.emplace(mu, c);
        if (!inserted && it->second != c)
            throw std::logic_error("polynomial is not symmetric");
    }
    for (auto& [mu, c] : seen) out.add(mu, c);
    return out;
}

}  // namespace

MonExpansion complete_homogeneous_monomials(const Partition& lambda) {
    static std::map<Partition, MonExpansion> memo;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find(lambda);
        if (it != memo.end()) return it->second;
    }
    int d = lambda.size();
    int nvars = std::max(d, 1);
    Dense acc;
    acc.emplace(std::vector<int>(nvars, 0), 1);
    for (int part : lambda.parts()) {
        Dense factor = h_row_dense(part, nvars);
        Dense next;
        for (const auto& [a, ca] : acc)
            for (const auto& [b, cb] : factor) {
                std::vector<int> sum(nvars);
                for (int i = 0; i < nvars; ++i) sum[i] = a[i] + b[i];
                next[std::move(sum)] += ca * cb;
            }
        acc = std::move(next);
    }
    MonExpansion out = symmetrize(acc, d);
    std::lock_guard<std::mutex> lock(mtx);
    memo.emplace(lambda, out);
    return out;
}

MonExpansion k_schur_monomials(const Partition& lambda, int k, SearchBudget* budget) {
    if (!lambda.empty() && lambda.parts()[0] > k)
        throw std::invalid_argument("not k-bounded");
    static std::map<std::pair<Partition, int>, MonExpansion> memo;
    static std::mutex mtx;
    std::pair<Partition, int> key{lambda, k};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    int d = lambda.size();
    // Lexicographically descending is a linear extension of dominance, so every
    // strictly dominating mu is solved before lambda is reached.
    std::vector<Partition> shapes = k_bounded_partitions(d, k);
    std::map<Partition, MonExpansion> solved;
    for (const Partition& lam : shapes) {
        MonExpansion s = complete_homogeneous_monomials(lam);
        for (const Partition& mu : shapes) {
            if (mu == lam || !dominates(lam, mu)) continue;
            s.add_scaled(solved.at(mu), -k_kostka(mu, lam.parts(), k, budget));
        }
        solved.emplace(lam, std::move(s));
    }

    std::lock_guard<std::mutex> lock(mtx);
    for (auto& [lam, expansion] : solved)
        memo.emplace(std::make_pair(lam, k), expansion);
    return solved.at(lambda);
}

BasisCoeffs decompose_in_basis(const MonExpansion& f, Basis basis, int k) {
    if (basis != Basis::schur && basis != Basis::dual_k_schur)
        throw std::invalid_argument("unsupported basis");
    BasisCoeffs out;
    out.basis = basis;
    out.k = basis == Basis::schur ? 0 : k;

    MonExpansion residual = f;
    while (!residual.coeffs.empty()) {
        // dominance-maximal surviving key; ties broken lexicographically
        Partition best;
        bool have = false;
        for (const auto& [mu, c] : residual.coeffs) {
            bool maximal = true;
            for (const auto& [nu, c2] : residual.coeffs)
                if (nu != mu && dominates(mu, nu)) {
                    maximal = false;
                    break;
                }
            if (maximal && (!have || best < mu)) {
                best = mu;
                have = true;
            }
        }
        long long c = residual.coefficient(best);
        MonExpansion elem;
        if (basis == Basis::schur) {
            elem = schur_monomials(best);
        } else {
            if (!best.empty() && best.parts()[0] > k)
                throw std::invalid_argument("not in basis span");
            elem = dual_k_schur_monomials(best, k);
        }
        residual.add_scaled(elem, -c);
        out.coeffs.emplace(best, c);
        if (residual.coefficient(best) != 0)
            throw std::logic_error("triangular peel failed to clear leading term");
    }
    return out;
}

std::vector<std::vector<int>> padded_permutations(const Partition& mu, int n) {
    std::vector<std::vector<int>> out;
    if (mu.length() > n) return out;
    std::vector<int> alpha(n, 0);
    std::copy(mu.parts().begin(), mu.parts().end(), alpha.begin());
    std::sort(alpha.begin(), alpha.end());
    do {
        out.push_back(alpha);
    } while (std::next_permutation(alpha.begin(), alpha.end()));
    std::sort(out.begin(), out.end());
    return out;
}

Support support(const MonExpansion& f, int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    Support out;
    out.n = n;
    for (const auto& [mu, c] : f.coeffs) {
        auto perms = padded_permutations(mu, n);
        out.points.insert(out.points.end(), perms.begin(), perms.end());
    }
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
}

}  // namespace kschur
