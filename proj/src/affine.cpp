#include "kschur/affine.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kschur {

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

int pos_mod(int a, int b) {
    int m = a % b;
    return m < 0 ? m + b : m;
}

}  // namespace

AffinePermutation::AffinePermutation(int k, std::vector<int> window)
    : k_(k), window_(std::move(window)) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    int n = k + 1;
    if ((int)window_.size() != n)
        throw std::invalid_argument("window must have k+1 entries");
    std::set<int> residues;
    int sum = 0;
    for (int v : window_) {
        residues.insert(pos_mod(v, n));
        sum += v;
    }
    if ((int)residues.size() != n)
        throw std::invalid_argument("window values must cover all residues");
    if (sum != n * (n + 1) / 2)
        throw std::invalid_argument("window sum must be 1 + ... + k+1");
}

AffinePermutation AffinePermutation::identity(int k) {
    std::vector<int> w(k + 1);
    std::iota(w.begin(), w.end(), 1);
    return AffinePermutation(k, std::move(w));
}

int AffinePermutation::operator()(int i) const {
    int n = k_ + 1;
    int q = floor_div(i - 1, n);
    return window_[i - 1 - q * n] + q * n;
}

AffinePermutation AffinePermutation::operator*(const AffinePermutation& other) const {
    if (k_ != other.k_) throw std::invalid_argument("mismatched groups");
    std::vector<int> w(k_ + 1);
    for (int i = 1; i <= k_ + 1; ++i) w[i - 1] = (*this)(other(i));
    return AffinePermutation(k_, std::move(w));
}

AffinePermutation AffinePermutation::inverse() const {
    int n = k_ + 1;
    std::vector<int> w(n);
    for (int y = 1; y <= n; ++y) {
        for (int i = 1; i <= n; ++i) {
            if (pos_mod(window_[i - 1], n) != pos_mod(y, n)) continue;
            int t = (y - window_[i - 1]) / n;
            w[y - 1] = i + t * n;
            break;
        }
    }
    return AffinePermutation(k_, std::move(w));
}

AffinePermutation AffinePermutation::times_generator(int i) const {
    if (i < 0 || i > k_) throw std::invalid_argument("residue out of range");
    int n = k_ + 1;
    // (w s_i)(x) = w(s_i(x)); s_i sends x = i mod n to x+1 and x = i+1 mod n to x-1
    std::vector<int> w(n);
    for (int x = 1; x <= n; ++x) {
        int sx = x;
        if (pos_mod(x, n) == pos_mod(i, n))
            sx = x + 1;
        else if (pos_mod(x, n) == pos_mod(i + 1, n))
            sx = x - 1;
        w[x - 1] = (*this)(sx);
    }
    return AffinePermutation(k_, std::move(w));
}

bool AffinePermutation::is_identity() const {
    for (int i = 1; i <= k_ + 1; ++i)
        if (window_[i - 1] != i) return false;
    return true;
}

AffinePermutation from_word(const std::vector<int>& word, int k) {
    AffinePermutation w = AffinePermutation::identity(k);
    for (int i : word) w = w.times_generator(i);
    return w;
}

std::vector<int> code(const AffinePermutation& w) {
    int n = w.k() + 1;
    std::vector<int> c(n, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j0 = 1; j0 <= n; ++j0) {
            // j = j0 + m*n with j > i and w(j) < w(i)
            int lo = floor_div(i + 1 - j0 + n - 1, n);
            int hi = floor_div(w(i) - 1 - w(j0), n);
            if (hi >= lo) c[i - 1] += hi - lo + 1;
        }
    }
    return c;
}

int length(const AffinePermutation& w) {
    auto c = code(w);
    return std::accumulate(c.begin(), c.end(), 0);
}

bool is_reduced(const std::vector<int>& word, int k) {
    return length(from_word(word, k)) == (int)word.size();
}

Partition mu_of(const AffinePermutation& w) {
    return conjugate(sort_to_partition(code(w.inverse())));
}

CDElement cyclically_decreasing(const std::set<int>& residues, int k) {
    int n = k + 1;
    if ((int)residues.size() >= n)
        throw std::invalid_argument("residue set must be a proper subset");
    for (int r : residues)
        if (r < 0 || r > k) throw std::invalid_argument("residue out of range");

    // Split into maximal cyclic runs; emit each run from its top end downward.
    std::vector<int> word;
    std::set<int> remaining = residues;
    while (!remaining.empty()) {
        int start = *remaining.begin();
        // walk down to the bottom of the run containing `start`
        while (remaining.count(pos_mod(start - 1, n))) start = pos_mod(start - 1, n);
        int len = 1;
        while (remaining.count(pos_mod(start + len, n))) ++len;
        for (int t = len - 1; t >= 0; --t) {
            int r = pos_mod(start + t, n);
            word.push_back(r);
            remaining.erase(r);
        }
    }
    AffinePermutation element = from_word(word, k);
    if (length(element) != (int)residues.size())
        throw std::logic_error("cyclically decreasing word is not reduced");
    return CDElement{std::move(word), std::move(element)};
}

namespace {

std::vector<std::vector<CDElement>> cd_by_size(int k) {
    static std::map<int, std::vector<std::vector<CDElement>>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    int n = k + 1;
    std::vector<std::vector<CDElement>> by_size(n);
    for (int mask = 0; mask < (1 << n) - 1; ++mask) {
        std::set<int> s;
        for (int r = 0; r < n; ++r)
            if (mask & (1 << r)) s.insert(r);
        by_size[s.size()].push_back(cyclically_decreasing(s, k));
    }
    cache.emplace(k, by_size);
    return by_size;
}

long long count_factorizations(const AffinePermutation& w, const std::vector<int>& comp,
                               std::size_t idx,
                               const std::vector<std::vector<CDElement>>& cd,
                               std::map<std::pair<std::vector<int>, std::vector<int>>,
                                        long long>& memo) {
    if (idx == comp.size()) return w.is_identity() ? 1 : 0;
    std::vector<int> suffix(comp.begin() + idx, comp.end());
    auto key = std::make_pair(w.window(), suffix);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int len = length(w);
    long long total = 0;
    for (const CDElement& v : cd[comp[idx]]) {
        AffinePermutation rest = v.element.inverse() * w;
        if (length(rest) == len - comp[idx])
            total += count_factorizations(rest, comp, idx + 1, cd, memo);
    }
    memo.emplace(std::move(key), total);
    return total;
}

void compositions_of(int d, int maxpart, std::vector<int>& acc,
                     std::vector<std::vector<int>>& out) {
    if (d == 0) {
        out.push_back(acc);
        return;
    }
    for (int p = 1; p <= std::min(d, maxpart); ++p) {
        acc.push_back(p);
        compositions_of(d - p, maxpart, acc, out);
        acc.pop_back();
    }
}

}  // namespace

MonExpansion affine_stanley_monomials(const AffinePermutation& w) {
    int len = length(w);
    MonExpansion out;
    out.degree = len;
    if (len == 0) {
        out.add(Partition{}, 1);
        return out;
    }

    auto cd = cd_by_size(w.k());
    std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;

    // Factors are cyclically decreasing, so parts never exceed k.
    std::vector<std::vector<int>> comps;
    std::vector<int> acc;
    compositions_of(len, w.k(), acc, comps);

    std::map<Partition, long long> counts;
    for (const auto& comp : comps) {
        long long c = count_factorizations(w, comp, 0, cd, memo);
        Partition key = sort_to_partition(comp);
        auto [it, inserted] = counts.emplace(key, c);
        if (!inserted && it->second != c)
            throw std::logic_error("factorization counts are not symmetric");
    }
    for (auto& [mu, c] : counts) out.add(mu, c);
    return out;
}

BasisCoeffs dual_k_schur_coeffs(const AffinePermutation& w) {
    BasisCoeffs out =
        decompose_in_basis(affine_stanley_monomials(w), Basis::dual_k_schur, w.k());
    Partition dominant = mu_of(w);
    for (const auto& [mu, c] : out.coeffs) {
        if (c < 0) throw std::logic_error("negative dual k-Schur coefficient");
        if (!dominates(mu, dominant))
            throw std::logic_error("dual k-Schur support exceeds mu(w)");
    }
    auto it = out.coeffs.find(dominant);
    if (it == out.coeffs.end() || it->second != 1)
        throw std::logic_error("dominant dual k-Schur coefficient is not 1");
    return out;
}

bool is_321_avoiding(const AffinePermutation& w) {
    int n = w.k() + 1;
    int lo = *std::min_element(w.window().begin(), w.window().end());
    int hi = *std::max_element(w.window().begin(), w.window().end());
    int span = n + (hi - lo) + n;  // any pattern with i in [1, n] fits below this bound
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= span; ++j) {
            if (w(j) >= w(i)) continue;
            for (int l = j + 1; l <= span; ++l)
                if (w(l) < w(j)) return false;
        }
    return true;
}

std::vector<AffinePermutation> affine_permutations_up_to_length(int k, int maxlen) {
    std::vector<AffinePermutation> out;
    std::set<std::vector<int>> seen;
    std::vector<AffinePermutation> frontier{AffinePermutation::identity(k)};
    seen.insert(frontier[0].window());
    out.push_back(frontier[0]);
    for (int len = 1; len <= maxlen; ++len) {
        std::vector<AffinePermutation> next;
        for (const auto& w : frontier)
            for (int i = 0; i <= k; ++i) {
                AffinePermutation u = w.times_generator(i);
                if (length(u) == len && seen.insert(u.window()).second)
                    next.push_back(u);
            }
        std::sort(next.begin(), next.end());
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

}  // namespace kschur
