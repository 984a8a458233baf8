#include "kschur/cylindric.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace kschur {

namespace {

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

CylindricShape::CylindricShape(int n_, int m_, std::vector<int> profile_)
    : n(n_), m(m_), profile(std::move(profile_)) {
    if (m < 1 || m > n - 1)
        throw std::invalid_argument("cylindric shape requires 1 <= m <= n-1");
    if ((int)profile.size() != m)
        throw std::invalid_argument("profile must have m entries");
    for (int i = 0; i + 1 < m; ++i)
        if (profile[i] < profile[i + 1])
            throw std::invalid_argument("profile must be weakly decreasing");
    if (profile[m - 1] < profile[0] - (n - m))
        throw std::invalid_argument("profile violates the period wraparound");
}

int CylindricShape::row(int i) const {
    int q = floor_div(i - 1, m);
    return profile[i - 1 - q * m] - q * (n - m);
}

bool cyl_includes(const CylindricShape& outer, const CylindricShape& inner) {
    if (outer.n != inner.n || outer.m != inner.m)
        throw std::invalid_argument("shapes live on different cylinders");
    for (int i = 1; i <= outer.m; ++i)
        if (inner.row(i) > outer.row(i)) return false;
    return true;
}

int cyl_period_boxes(const CylindricShape& outer, const CylindricShape& inner) {
    if (!cyl_includes(outer, inner))
        throw std::invalid_argument("inner shape does not fit inside outer");
    int boxes = 0;
    for (int i = 1; i <= outer.m; ++i) boxes += outer.row(i) - inner.row(i);
    return boxes;
}

int cyl_boxes_in_window(const CylindricShape& from, const CylindricShape& to, int c0) {
    // Row extents decrease weakly in the row index and drop by n-m per period,
    // so the rows meeting a fixed column window form a finite interval.
    int width = from.n - from.m;
    int i_hi = 1;
    while (to.row(i_hi) <= c0) --i_hi;
    while (to.row(i_hi + 1) > c0) ++i_hi;
    int i_lo = i_hi;
    while (from.row(i_lo - 1) < c0 + width) --i_lo;

    int count = 0;
    for (int i = i_lo; i <= i_hi; ++i) {
        int lo = std::max(from.row(i), c0);
        int hi = std::min(to.row(i), c0 + width);
        if (hi > lo) count += hi - lo;
    }
    return count;
}

namespace {

// Horizontal-strip interlacing on the cylinder: from(i) >= to(i+1) for all i.
bool cyl_interlaces(const CylindricShape& from, const CylindricShape& to) {
    for (int i = 1; i <= from.m; ++i)
        if (to.row(i + 1) > from.row(i)) return false;
    return true;
}

void enumerate_steps(const CylindricShape& cur, const CylindricShape& outer,
                     std::vector<int>& acc, int idx,
                     std::vector<CylindricShape>& out) {
    if (idx == cur.m) {
        if (acc[cur.m - 1] < acc[0] - (cur.n - cur.m)) return;  // wraparound violated
        CylindricShape next(cur.n, cur.m, acc);
        if (cyl_interlaces(cur, next)) out.push_back(std::move(next));
        return;
    }
    for (int v = cur.profile[idx]; v <= outer.profile[idx]; ++v) {
        if (idx > 0 && v > acc[idx - 1]) break;  // keep the profile decreasing
        acc.push_back(v);
        enumerate_steps(cur, outer, acc, idx + 1, out);
        acc.pop_back();
    }
}

void chains_dfs(const CylindricShape& cur, const CylindricShape& outer,
                std::vector<CylindricShape>& chain, Composition& weight,
                std::vector<CylindricTableau>& out) {
    if (cur == outer) {
        out.push_back(CylindricTableau{chain, weight});
        return;
    }
    std::vector<CylindricShape> steps;
    std::vector<int> acc;
    enumerate_steps(cur, outer, acc, 0, steps);
    for (const CylindricShape& next : steps) {
        int boxes = cyl_period_boxes(next, cur);
        if (boxes == 0) continue;
        // validity of the construction: window counts match the step size
        if (cyl_boxes_in_window(cur, next, 0) != boxes ||
            cyl_boxes_in_window(cur, next, 1) != boxes)
            throw std::logic_error("strip window counts disagree with the period");
        chain.push_back(next);
        weight.push_back(boxes);
        chains_dfs(next, outer, chain, weight, out);
        chain.pop_back();
        weight.pop_back();
    }
}

}  // namespace

std::vector<CylindricTableau> cylindric_tableaux(const CylindricShape& outer,
                                                 const CylindricShape& inner) {
    if (!cyl_includes(outer, inner))
        throw std::invalid_argument("inner shape does not fit inside outer");
    std::vector<CylindricTableau> out;
    std::vector<CylindricShape> chain{inner};
    Composition weight;
    chains_dfs(inner, outer, chain, weight, out);
    return out;
}

MonExpansion cylindric_skew_schur_monomials(const CylindricShape& outer,
                                            const CylindricShape& inner, int degree) {
    int boxes = cyl_period_boxes(outer, inner);
    if (degree != boxes)
        throw std::invalid_argument("degree does not match the period box count");

    MonExpansion out;
    out.degree = degree;
    if (degree == 0) {
        out.add(Partition{}, 1);
        return out;
    }
    std::map<Composition, long long> counts;
    for (const CylindricTableau& t : cylindric_tableaux(outer, inner))
        ++counts[t.weight];

    std::map<Partition, long long> grouped;
    for (const auto& [comp, c] : counts) {
        Partition key = sort_to_partition(comp);
        auto [it, inserted] = grouped.emplace(key, c);
        if (!inserted && it->second != c)
            throw std::logic_error("tableau counts are not symmetric");
    }
    for (auto& [mu, c] : grouped) out.add(mu, c);
    return out;
}

namespace {

using Pair = std::pair<CylindricShape, CylindricShape>;

// Translate so the inner profile's last entry lies in [0, n-m).
Pair column_normalize(const CylindricShape& outer, const CylindricShape& inner) {
    int width = outer.n - outer.m;
    int shift = -width * floor_div(inner.profile[inner.m - 1], width);
    auto shifted = [&](const CylindricShape& s) {
        std::vector<int> p = s.profile;
        for (int& v : p) v += shift;
        return CylindricShape(s.n, s.m, std::move(p));
    };
    return {shifted(outer), shifted(inner)};
}

// Translate rows down by r (profile entry i becomes row i + r).
Pair row_rotate(const Pair& pair, int r) {
    auto rot = [&](const CylindricShape& s) {
        std::vector<int> p(s.m);
        for (int i = 1; i <= s.m; ++i) p[i - 1] = s.row(i + r);
        return CylindricShape(s.n, s.m, std::move(p));
    };
    return {rot(pair.first), rot(pair.second)};
}

std::pair<std::vector<int>, std::vector<int>> pair_key(const Pair& p) {
    return {p.second.profile, p.first.profile};
}

Pair canonical_form(const Pair& pair) {
    Pair best = column_normalize(pair.first, pair.second);
    for (int r = 1; r < pair.first.m; ++r) {
        Pair cand = row_rotate(pair, r);
        cand = column_normalize(cand.first, cand.second);
        if (pair_key(cand) < pair_key(best)) best = cand;
    }
    return best;
}

}  // namespace

std::vector<Pair> canonical_cylindric_pairs(int n, int max_boxes) {
    std::vector<Pair> out;
    for (int m = 1; m <= n - 1; ++m) {
        int width = n - m;
        // Inner profiles: weakly decreasing, last entry in [0, width), first
        // entry within the wraparound bound of the last.
        std::vector<std::vector<int>> inners;
        std::vector<std::vector<int>> partial{{}};
        for (int pos = 0; pos < m; ++pos) {
            std::vector<std::vector<int>> next;
            for (auto& pre : partial) {
                int hi = pos == 0 ? 2 * width - 1 : pre[pos - 1];
                for (int v = 0; v <= hi; ++v) {
                    auto cand = pre;
                    cand.push_back(v);
                    next.push_back(std::move(cand));
                }
            }
            partial = std::move(next);
        }
        for (auto& prof : partial) {
            if (prof[m - 1] < 0 || prof[m - 1] >= width) continue;
            if (prof[0] > prof[m - 1] + width) continue;
            inners.push_back(prof);
        }

        for (auto& iprof : inners) {
            CylindricShape inner(n, m, iprof);
            // outer = inner + delta, delta >= 0 componentwise
            std::vector<std::vector<int>> deltas{{}};
            for (int pos = 0; pos < m; ++pos) {
                std::vector<std::vector<int>> next;
                for (auto& pre : deltas) {
                    int used = 0;
                    for (int v : pre) used += v;
                    for (int v = 0; v + used <= max_boxes; ++v) {
                        auto cand = pre;
                        cand.push_back(v);
                        next.push_back(std::move(cand));
                    }
                }
                deltas = std::move(next);
            }
            for (auto& delta : deltas) {
                int boxes = 0;
                std::vector<int> oprof(m);
                for (int i = 0; i < m; ++i) {
                    oprof[i] = iprof[i] + delta[i];
                    boxes += delta[i];
                }
                if (boxes == 0 || boxes > max_boxes) continue;
                bool ok = true;
                for (int i = 0; i + 1 < m && ok; ++i)
                    if (oprof[i] < oprof[i + 1]) ok = false;
                if (ok && oprof[m - 1] < oprof[0] - width) ok = false;
                if (!ok) continue;
                Pair pair{CylindricShape(n, m, oprof), inner};
                if (canonical_form(pair) == pair) out.push_back(std::move(pair));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Pair& a, const Pair& b) {
        return std::tuple(a.first.m, pair_key(a)) < std::tuple(b.first.m, pair_key(b));
    });
    return out;
}

}  // namespace kschur
