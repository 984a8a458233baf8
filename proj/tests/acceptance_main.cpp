// Acceptance suite: runs every end-to-end criterion at its stated range and
// prints one pass/fail line per criterion.  Exit code is nonzero when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "kschur/affine.hpp"
#include "kschur/core.hpp"
#include "kschur/cylindric.hpp"
#include "kschur/io.hpp"
#include "kschur/polytope.hpp"
#include "kschur/symfunc.hpp"
#include "kschur/tableau.hpp"
#include "kschur/verify.hpp"

using namespace kschur;
using Rows = std::vector<std::vector<int>>;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<std::string()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
        problem = body();
    } catch (const std::exception& e) {
        problem = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty()) {
        std::printf("PASS  %-14s (%.2fs)\n", name.c_str(), secs);
    } else {
        std::printf("FAIL  %-14s (%.2fs): %s\n", name.c_str(), secs, problem.c_str());
        ++failures;
    }
    std::fflush(stdout);
}

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::string run_sweep(const SweepConfig& config, bool conjecture_findings_ok = false) {
    std::ostringstream problems;
    int findings = 0;
    run_checks(config, [&](const Verdict& v) {
        if (v.result == "pass") return;
        if (conjecture_findings_ok && v.result == "fail") {
            // conjecture evidence: report, do not fail the criterion
            std::printf("      finding: %s %s %s\n", v.check.c_str(), v.params.dump().c_str(),
                        v.witness.dump().c_str());
            ++findings;
            return;
        }
        problems << v.check << ' ' << v.params.dump() << " -> " << v.result << ' '
                 << v.witness.dump() << "; ";
    });
    return problems.str();
}

}  // namespace

int main() {
    criterion("criterion-1", [] {
        CoreConstruction cc = bounded_to_core(P({4, 4, 4, 2, 1}), 5);
        if (cc.core.shape != P({9, 6, 5, 2, 1})) return std::string("core construction");

        FayersResult fr = fayers_ssyt(P({4, 4, 4, 2, 1}), P({3, 3, 3, 3, 3}));
        if (fr.tableau.rows != Rows{{1, 1, 1, 2}, {2, 2, 3, 3}, {3, 4, 4, 5}, {4, 5}, {5}})
            return std::string("fayers tableau");

        KTableau t = build_kssyt(P({4, 4, 4, 2, 1}), P({3, 3, 3, 3, 3}), 5);
        if (t.rows != Rows{{1, 1, 1, 2, 3, 4, 4, 5, 5},
                           {2, 2, 3, 3, 4, 5},
                           {3, 4, 4, 5, 5},
                           {4, 5},
                           {5}})
            return std::string("k-tableau");

        PartialKTableau st = row_fill(empty_partial(P({4, 4, 4, 2, 1}), 5),
                                      P({4, 4, 4, 2, 1}), 3, 5);
        if (st.rows != Rows{{0, 0, 0, 0, 0, 0, 0, 5, 5},
                            {0, 0, 0, 0, 0, 5},
                            {0, 0, 0, 5, 5},
                            {0, 5},
                            {5}})
            return std::string("row filling stage");

        if (hook_length(P({4, 4, 4, 2, 1}), {3, 1}) != 6) return std::string("hook length");
        if (h_between(P({4, 4, 4, 2, 1}), {3, 1}, {1, 3}) != 5) return std::string("h value");
        return std::string();
    });

    criterion("criterion-2", [] {
        if (k_kostka(P({3, 2, 1, 1}), {1, 2, 1, 2, 1}, 3) != 2)
            return std::string("k-kostka of the figure");
        return std::string();
    });

    criterion("criterion-3", [] {
        SweepConfig config;
        config.k_lo = 2;
        config.k_hi = 4;
        config.size_lo = 1;
        config.size_hi = 8;
        config.budget = 4'000'000'000LL;
        config.checks = {"k-kostka-iff-dominance"};
        return run_sweep(config);
    });

    criterion("criterion-4", [] {
        SweepConfig config;
        config.k_lo = 2;
        config.k_hi = 4;
        config.size_lo = 1;
        config.size_hi = 8;
        config.n_lo = 1;
        config.n_hi = 8;
        config.budget = 4'000'000'000LL;
        config.checks = {"support-equality"};
        return run_sweep(config);
    });

    criterion("criterion-5", [] {
        AffinePermutation w = from_word({2, 1, 0, 2}, 2);
        MonExpansion f = affine_stanley_monomials(w);
        MonExpansion expect;
        expect.degree = 4;
        expect.add(P({1, 1, 1, 1}), 1);
        expect.add(P({2, 1, 1}), 1);
        expect.add(P({2, 2}), 1);
        if (f != expect) return std::string("monomial expansion");
        BasisCoeffs bc = decompose_in_basis(f, Basis::schur);
        std::map<Partition, long long> want{{P({2, 2}), 1}, {P({1, 1, 1, 1}), -1}};
        if (bc.coeffs != want) return std::string("schur decomposition");
        return std::string();
    });

    criterion("criterion-6", [] {
        SweepConfig s3;
        s3.k_lo = s3.k_hi = 2;
        s3.size_lo = 1;
        s3.size_hi = 5;
        s3.checks = {"m-convex-affine-stanley"};
        std::string bad = run_sweep(s3);
        if (!bad.empty()) return bad;

        SweepConfig s4;
        s4.k_lo = s4.k_hi = 3;
        s4.size_lo = 1;
        s4.size_hi = 4;
        s4.checks = {"m-convex-affine-stanley"};
        return run_sweep(s4);
    });

    criterion("criterion-7", [] {
        SweepConfig config;
        config.k_lo = 3;  // cylinders C^{4,.} and C^{5,.}
        config.k_hi = 4;
        config.size_lo = 1;
        config.size_hi = 6;
        config.checks = {"m-convex-cylindric"};
        std::string bad = run_sweep(config);
        if (!bad.empty()) return bad;

        // the figure-8 pair, translated to canonical position
        CylindricShape outer(5, 2, {5, 4}), inner(5, 2, {2, 1});
        std::vector<CylindricShape> chain{
            CylindricShape(5, 2, {2, 1}), CylindricShape(5, 2, {3, 1}),
            CylindricShape(5, 2, {4, 2}), CylindricShape(5, 2, {4, 3}),
            CylindricShape(5, 2, {5, 4})};
        for (const auto& t : cylindric_tableaux(outer, inner))
            if (t.chain == chain && t.weight == Composition{1, 2, 1, 2})
                return std::string();
        return std::string("figure-8 chain missing");
    });

    criterion("criterion-8", [] {
        SweepConfig schur;
        schur.size_lo = 1;
        schur.size_hi = 6;
        schur.n_lo = 1;
        schur.n_hi = 6;
        schur.checks = {"lorentzian-schur"};
        std::string bad = run_sweep(schur);  // known theorem: must pass
        if (!bad.empty()) return bad;

        SweepConfig conj;
        conj.k_lo = 1;
        conj.k_hi = 3;
        conj.size_lo = 1;
        conj.size_hi = 6;
        conj.n_lo = 1;
        conj.n_hi = 6;
        conj.checks = {"lorentzian-dual-k-schur", "lorentzian-k-schur"};
        return run_sweep(conj, /*conjecture_findings_ok=*/true);
    });

    criterion("criterion-9", [] {
        // Rado equivalence, d <= 8
        SweepConfig rado;
        rado.size_lo = 1;
        rado.size_hi = 8;
        rado.n_lo = 1;
        rado.n_hi = 8;
        rado.checks = {"rado"};
        rado.budget = 100'000'000;
        std::string bad = run_sweep(rado);
        if (!bad.empty()) return bad;

        // core propositions at size <= 10, k <= 5
        for (int k = 1; k <= 5; ++k) {
            std::vector<Partition> cores;
            for (int s = 0; s <= 10; ++s)
                for (const Partition& lam : partitions_of(s))
                    if (is_core(lam, k)) cores.push_back(lam);

            for (const Partition& gamma : cores) {
                CornerData cd = corners(gamma);
                for (Cell a : cd.top_cells)
                    for (Cell b : cd.top_cells) {
                        if (a == b) continue;
                        if (b.row > a.row || b.col < a.col) continue;
                        bool same = residue(a, k) == residue(b, k);
                        if (same != (h_between(gamma, a, b) % (k + 2) == 0))
                            return std::string("same-residue proposition");
                    }
                for (int i = 0; i <= k; ++i) {
                    Core g{gamma, k};
                    if (!is_core(apply_generator(g, i, GeneratorMode::remove).shape, k) ||
                        !is_core(apply_generator(g, i, GeneratorMode::add).shape, k))
                        return std::string("generator closure");
                }
            }
        }

        for (int k = 1; k <= 5; ++k)
            for (int d = 0; d <= 10; ++d)
                for (const Partition& lam : k_bounded_partitions(d, k)) {
                    CoreConstruction cc = bounded_to_core(lam, k);
                    if (core_to_bounded(cc.core) != lam)
                        return std::string("bijection round trip");

                    const Partition& gamma = cc.core.shape;
                    for (int i = 1; i <= lam.length(); ++i) {
                        int t = cc.shifts[i - 1];
                        for (int c = t + 1; c <= t + lam.part(i); ++c) {
                            if (hook_length(gamma, {i, c}) > k)
                                return std::string("skew hook bound");
                            for (int x = 1; x < i; ++x)
                                if (c <= cc.shifts[x - 1] &&
                                    hook_length(gamma, {x, c}) <= k + 2)
                                    return std::string("rho hook bound");
                        }
                    }

                    auto rs = row_residue_sets(cc);
                    for (int i = 1; i <= lam.length(); ++i) {
                        std::set<int> uni;
                        for (int j = i; j <= lam.length(); ++j)
                            uni.insert(rs[j - 1].begin(), rs[j - 1].end());
                        if ((int)uni.size() != lam.part(i))
                            return std::string("residue union count");
                    }

                    if (d >= 1) {
                        CornerData cd = corners(gamma);
                        std::set<int> seen;
                        for (Cell c : cd.removable) {
                            int i = residue(c, k);
                            if (!seen.insert(i).second) continue;
                            int r = 0;
                            for (Cell c2 : cd.removable)
                                if (residue(c2, k) == i) r = std::max(r, c2.row);
                            std::vector<int> reduced(lam.parts());
                            --reduced[r - 1];
                            if (apply_generator(Core{gamma, k}, i, GeneratorMode::remove)
                                    .shape !=
                                bounded_to_core(Partition(reduced), k).core.shape)
                                return std::string("generator vs reduced shape");
                        }
                    }
                }

        // Coxeter relations by exhaustive braid/commutation checks at k <= 3
        for (int k = 2; k <= 3; ++k)
            for (const auto& w : affine_permutations_up_to_length(k, 3)) {
                for (int i = 0; i <= k; ++i) {
                    if (w.times_generator(i).times_generator(i) != w)
                        return std::string("involution relation");
                    int j = (i + 1) % (k + 1);
                    auto braid1 = w.times_generator(i).times_generator(j).times_generator(i);
                    auto braid2 = w.times_generator(j).times_generator(i).times_generator(j);
                    if (braid1 != braid2) return std::string("braid relation");
                    for (int f = 0; f <= k; ++f) {
                        int diff = (i - f) % (k + 1);
                        if (diff < 0) diff += k + 1;
                        if (diff == 1 || diff == k) continue;
                        if (f == i) continue;
                        if (w.times_generator(i).times_generator(f) !=
                            w.times_generator(f).times_generator(i))
                            return std::string("commutation relation");
                    }
                }
            }

        // exchange-axiom fixtures
        if (is_m_convex(Support{2, {{0, 2}, {2, 0}}}))
            return std::string("bad support accepted");
        auto witness = m_convex_violation(Support{2, {{0, 2}, {2, 0}}});
        if (!witness || witness->alpha != std::vector<int>{0, 2} ||
            witness->beta != std::vector<int>{2, 0})
            return std::string("witness mismatch");
        if (!is_m_convex(Support{2, {{0, 1}, {1, 0}}}))
            return std::string("good support rejected");

        return std::string();
    });

    if (failures == 0) std::printf("all acceptance criteria passed\n");
    return failures == 0 ? 0 : 1;
}
