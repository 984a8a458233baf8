#include "kschur/tableau.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace kschur {

namespace {

std::string cell_str(Cell c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

}  // namespace

FayersResult fayers_ssyt(const Partition& lambda, const Partition& mu) {
    if (auto bad = dominance_violation(mu, lambda))
        throw std::invalid_argument("dominance violated at prefix " + std::to_string(*bad));

    std::vector<std::vector<int>> rows(lambda.length());
    for (int i = 1; i <= lambda.length(); ++i)
        rows[i - 1].assign(lambda.part(i), 0);

    int iota_max = mu.length();
    std::vector<Partition> chain(iota_max + 1);
    chain[iota_max] = lambda;

    Partition lam = lambda;
    for (int iota = iota_max; iota >= 1; --iota) {
        int mi = mu.part(iota);
        int l = lam.length();
        int j = 0;
        for (int i = 1; i <= l; ++i)
            if (lam.part(i) >= mi) j = i;
        if (j == 0)
            throw std::logic_error("no row long enough despite dominance");

        std::vector<int> reduced(lam.parts());
        for (int i = l; i > j; --i) {
            for (int c = lam.part(i + 1) + 1; c <= lam.part(i); ++c)
                rows[i - 1][c - 1] = iota;
            reduced[i - 1] = lam.part(i + 1);
        }
        int keep = lam.part(j) - (mi - lam.part(j + 1));
        for (int c = keep + 1; c <= lam.part(j); ++c)
            rows[j - 1][c - 1] = iota;
        reduced[j - 1] = keep;

        lam = Partition(std::move(reduced));
        chain[iota - 1] = lam;
        // Fayers' observation: the reduced weight still dominates downward.
        if (iota > 1) {
            std::vector<int> mhat(mu.parts().begin(), mu.parts().begin() + (iota - 1));
            if (!dominates(Partition(mhat), lam))
                throw std::logic_error("reduced dominance lost in Fayers step");
        }
    }
    return FayersResult{Tableau{lambda, std::move(rows)}, std::move(chain)};
}

PartialKTableau empty_partial(const Partition& lambda, int k) {
    Core core = bounded_to_core(lambda, k).core;
    std::vector<std::vector<int>> rows(core.shape.length());
    for (int i = 1; i <= core.shape.length(); ++i)
        rows[i - 1].assign(core.shape.part(i), 0);
    return PartialKTableau{std::move(core), std::move(rows), {}, {}};
}

PartialKTableau row_fill(PartialKTableau state, const Partition& lambda_cur,
                         int mu_part, int letter) {
    const int k = state.core.k;
    Partition active = bounded_to_core(lambda_cur, k).core.shape;

    auto entry = [&state](Cell c) -> int& { return state.rows[c.row - 1][c.col - 1]; };
    for (int i = 1; i <= state.core.shape.length(); ++i) {
        if (active.part(i) > state.core.shape.part(i))
            throw std::invalid_argument("current shape does not fit inside the core");
        for (int c = 1; c <= state.core.shape.part(i); ++c) {
            bool is_empty = entry({i, c}) == 0;
            if (is_empty != (c <= active.part(i)))
                throw std::invalid_argument("empty cells do not form the expected core shape");
        }
    }
    if (mu_part < 1 || mu_part > lambda_cur.part(1))
        throw std::invalid_argument("row weight exceeds first part");

    state.marked.clear();
    state.shaded.clear();

    const int l = lambda_cur.length();
    int j = 0;
    for (int i = 1; i <= l; ++i)
        if (lambda_cur.part(i) >= mu_part) j = i;

    std::set<int> used;
    auto mark_and_fill_row = [&](int i, int count) {
        if (count == 0) return;
        std::vector<Cell> picked;
        for (int c = active.part(i); c > active.part(i + 1) && (int)picked.size() < count; --c) {
            Cell cell{i, c};
            if (used.count(residue(cell, k))) continue;
            picked.push_back(cell);
        }
        if ((int)picked.size() < count)
            throw std::logic_error("residue exhaustion");
        for (Cell c : picked) {
            state.marked.insert(c);
            used.insert(residue(c, k));
        }
        for (int c = picked.back().col; c <= active.part(i); ++c)
            entry({i, c}) = letter;
    };

    // R2: fill the top rows, right to left within each row.
    if (j == l) {
        mark_and_fill_row(l, mu_part);
    } else {
        mark_and_fill_row(l, active.part(l));
        for (int i = l - 1; i > j; --i)
            mark_and_fill_row(i, lambda_cur.part(i) - lambda_cur.part(i + 1));
        mark_and_fill_row(j, mu_part - lambda_cur.part(j + 1));
    }

    // R3/R4: cascade through removable corners, one residue class per round.
    Partition lam = lambda_cur;
    while (true) {
        CornerData cd = corners(active);
        Cell best{0, 0};
        for (Cell c : cd.removable)
            if (c.row >= j && entry(c) == letter && c.col > best.col) best = c;
        if (best.row == 0)
            throw std::logic_error("residue exhaustion");
        int y = residue(best, k);

        int r = 0;
        int marked_hit = 0;
        std::vector<int> shrink(active.parts());
        for (Cell c : cd.removable) {
            if (residue(c, k) != y) continue;
            entry(c) = letter;
            state.shaded.insert(c);
            if (state.marked.count(c)) ++marked_hit;
            --shrink[c.row - 1];
            r = std::max(r, c.row);
        }
        if (marked_hit != 1)
            throw std::logic_error("corner cascade did not consume exactly one marked cell");
        active = Partition(std::move(shrink));

        std::vector<int> reduced(lam.parts());
        --reduced[r - 1];
        lam = Partition(std::move(reduced));

        bool survivor = false;
        for (const Cell& c : state.marked)
            if (c.row >= j && !state.shaded.count(c)) survivor = true;
        if (!survivor) break;
    }

    // Delete-l consistency: the unfilled region is again a core diagram.
    for (int i = 1; i <= state.core.shape.length(); ++i)
        for (int c = 1; c <= state.core.shape.part(i); ++c)
            if ((entry({i, c}) == 0) != (c <= active.part(i)))
                throw std::logic_error("unfilled region is not the reduced core");
    return state;
}

KTableau build_kssyt(const Partition& lambda, const Partition& mu, int k) {
    if ((!lambda.empty() && lambda.parts()[0] > k) || (!mu.empty() && mu.parts()[0] > k))
        throw std::invalid_argument("not k-bounded");
    if (auto bad = dominance_violation(mu, lambda))
        throw std::invalid_argument("dominance violated at prefix " + std::to_string(*bad));

    FayersResult fr = fayers_ssyt(lambda, mu);
    PartialKTableau state = empty_partial(lambda, k);
    for (int iota = mu.length(); iota >= 1; --iota)
        state = row_fill(std::move(state), fr.chain[iota], mu.part(iota), iota);

    Composition kw = validate_kssyt(state.core, state.rows);
    if (sort_to_partition(kw) != mu || (int)kw.size() != mu.length())
        throw std::logic_error("constructed tableau has wrong k-weight");
    for (int i = 1; i <= mu.length(); ++i)
        if (kw[i - 1] != mu.part(i))
            throw std::logic_error("constructed tableau has wrong k-weight");
    return KTableau{state.core, state.rows, std::move(kw)};
}

Composition validate_kssyt(const Core& shape, const std::vector<std::vector<int>>& rows) {
    const Partition& gamma = shape.shape;
    if ((int)rows.size() != gamma.length())
        throw std::invalid_argument("row count does not match shape");
    for (int i = 1; i <= gamma.length(); ++i)
        if ((int)rows[i - 1].size() != gamma.part(i))
            throw std::invalid_argument("row " + std::to_string(i) + " does not match shape");

    int max_letter = 0;
    for (int i = 1; i <= gamma.length(); ++i) {
        for (int c = 1; c <= gamma.part(i); ++c) {
            int v = rows[i - 1][c - 1];
            if (v < 1)
                throw std::invalid_argument("empty cell " + cell_str({i, c}));
            if (c > 1 && rows[i - 1][c - 2] > v)
                throw std::invalid_argument("row violation at cell " + cell_str({i, c}));
            if (i > 1 && gamma.part(i - 1) >= c && rows[i - 2][c - 1] >= v)
                throw std::invalid_argument("column violation at cell " + cell_str({i, c}));
            max_letter = std::max(max_letter, v);
        }
    }
    std::vector<std::set<int>> res(max_letter);
    for (int i = 1; i <= gamma.length(); ++i)
        for (int c = 1; c <= gamma.part(i); ++c)
            res[rows[i - 1][c - 1] - 1].insert(residue({i, c}, shape.k));
    Composition weight;
    for (const auto& s : res) weight.push_back((int)s.size());
    return weight;
}

namespace {

// Shared row-major DFS over SSYT fillings of `shape`.  `admissible` filters a
// candidate letter at a cell, `place`/`unplace` maintain caller state, and
// `at_leaf` decides whether a complete filling is emitted.
struct FillingSearch {
    const Partition& shape;
    int max_letter;
    SearchBudget* budget;
    std::vector<std::vector<int>>& rows;
    std::vector<int> colheight;
    std::vector<Cell> order;

    explicit FillingSearch(const Partition& shape_, int max_letter_,
                           std::vector<std::vector<int>>& rows_, SearchBudget* budget_)
        : shape(shape_), max_letter(max_letter_), budget(budget_), rows(rows_) {
        colheight = conjugate(shape).parts();
        for (int i = 1; i <= shape.length(); ++i)
            for (int c = 1; c <= shape.part(i); ++c) order.push_back({i, c});
    }

    template <typename Admissible, typename Place, typename Unplace, typename AtLeaf>
    void run(std::size_t idx, Admissible&& admissible, Place&& place, Unplace&& unplace,
             AtLeaf&& at_leaf) {
        if (budget) budget->charge();
        if (idx == order.size()) {
            at_leaf();
            return;
        }
        Cell cell = order[idx];
        int left = cell.col > 1 ? rows[cell.row - 1][cell.col - 2] : 1;
        int below = cell.row > 1 && shape.part(cell.row - 1) >= cell.col
                        ? rows[cell.row - 2][cell.col - 1]
                        : 0;
        int lo = std::max(left, below + 1);
        int hi = max_letter - (colheight[cell.col - 1] - cell.row);
        for (int v = lo; v <= hi; ++v) {
            if (!admissible(cell, v)) continue;
            rows[cell.row - 1][cell.col - 1] = v;
            place(cell, v);
            run(idx + 1, admissible, place, unplace, at_leaf);
            unplace(cell, v);
            rows[cell.row - 1][cell.col - 1] = 0;
        }
    }
};

template <typename Sink>
void for_each_kssyt(const Partition& lambda, const Composition& alpha, int k,
                    SearchBudget* budget, Sink&& sink) {
    long long total = 0;
    for (int a : alpha) {
        if (a < 0) throw std::invalid_argument("composition parts must be nonnegative");
        total += a;
    }
    if (total != lambda.size()) throw std::invalid_argument("size mismatch");

    Core core = bounded_to_core(lambda, k).core;
    int L = (int)alpha.size();
    std::vector<std::vector<int>> rows(core.shape.length());
    for (int i = 1; i <= core.shape.length(); ++i)
        rows[i - 1].assign(core.shape.part(i), 0);

    std::vector<std::vector<int>> rescells(L + 1, std::vector<int>(k + 1, 0));
    std::vector<int> rescount(L + 1, 0);

    FillingSearch search(core.shape, L, rows, budget);
    search.run(
        0,
        [&](Cell c, int v) {
            if (alpha[v - 1] == 0) return false;
            int r = residue(c, k);
            return rescells[v][r] > 0 || rescount[v] < alpha[v - 1];
        },
        [&](Cell c, int v) {
            if (rescells[v][residue(c, k)]++ == 0) ++rescount[v];
        },
        [&](Cell c, int v) {
            if (--rescells[v][residue(c, k)] == 0) --rescount[v];
        },
        [&]() {
            for (int v = 1; v <= L; ++v)
                if (rescount[v] != alpha[v - 1]) return;
            sink(rows);
        });
}

}  // namespace

std::vector<KTableau> enumerate_kssyts(const Partition& lambda, const Composition& alpha,
                                       int k, SearchBudget* budget) {
    Core core = bounded_to_core(lambda, k).core;
    std::vector<KTableau> out;
    for_each_kssyt(lambda, alpha, k, budget, [&](const std::vector<std::vector<int>>& rows) {
        out.push_back(KTableau{core, rows, alpha});
    });
    return out;
}

long long k_kostka(const Partition& lambda, const Composition& alpha, int k,
                   SearchBudget* budget) {
    using Key = std::tuple<std::vector<int>, Composition, int>;
    static std::map<Key, long long> memo;
    static std::mutex mtx;
    Key key{lambda.parts(), alpha, k};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    long long count = 0;
    for_each_kssyt(lambda, alpha, k, budget, [&](const std::vector<std::vector<int>>&) { ++count; });
    std::lock_guard<std::mutex> lock(mtx);
    memo.emplace(std::move(key), count);
    return count;
}

long long kostka(const Partition& lambda, const Composition& mu, SearchBudget* budget) {
    using Key = std::pair<std::vector<int>, Composition>;
    static std::map<Key, long long> memo;
    static std::mutex mtx;
    Key key{lambda.parts(), mu};
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    long long total = 0;
    for (int a : mu) {
        if (a < 0) throw std::invalid_argument("composition parts must be nonnegative");
        total += a;
    }
    if (total != lambda.size()) throw std::invalid_argument("size mismatch");

    int L = (int)mu.size();
    std::vector<std::vector<int>> rows(lambda.length());
    for (int i = 1; i <= lambda.length(); ++i)
        rows[i - 1].assign(lambda.part(i), 0);
    std::vector<int> cnt(L + 1, 0);

    long long count = 0;
    FillingSearch search(lambda, L, rows, budget);
    search.run(
        0, [&](Cell, int v) { return cnt[v] < mu[v - 1]; },
        [&](Cell, int v) { ++cnt[v]; }, [&](Cell, int v) { --cnt[v]; },
        [&]() {
            for (int v = 1; v <= L; ++v)
                if (cnt[v] != mu[v - 1]) return;
            ++count;
        });

    std::lock_guard<std::mutex> lock(mtx);
    memo.emplace(std::move(key), count);
    return count;
}

}  // namespace kschur
