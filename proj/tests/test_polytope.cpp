#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "kschur/polytope.hpp"

using namespace kschur;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

MonExpansion expansion(int degree, std::vector<std::pair<Partition, long long>> terms) {
    MonExpansion f;
    f.degree = degree;
    for (auto& [mu, c] : terms) f.add(mu, c);
    return f;
}
}  // namespace

TEST_CASE("permutahedron lattice points") {
    CHECK(permutahedron_points(P({2, 1}), 3).points.size() == 7);
    CHECK(permutahedron_points(P({4}), 1).points ==
          std::vector<std::vector<int>>{{4}});
    CHECK(permutahedron_points(P({1, 1}), 2).points ==
          std::vector<std::vector<int>>{{1, 1}});
    CHECK_THROWS(permutahedron_points(P({1, 1}), 1));

    // brute force against all compositions
    for (int n = 2; n <= 4; ++n)
        for (const Partition& lam : partitions_of(4)) {
            if (lam.length() > n) continue;
            auto points = permutahedron_points(lam, n).points;
            std::vector<std::vector<int>> brute;
            std::vector<int> alpha(n, 0);
            auto rec = [&](auto&& self, int idx, int left) -> void {
                if (idx == n) {
                    if (left == 0 && dominates(sort_to_partition(alpha), lam))
                        brute.push_back(alpha);
                    return;
                }
                for (int v = 0; v <= left; ++v) {
                    alpha[idx] = v;
                    self(self, idx + 1, left - v);
                    alpha[idx] = 0;
                }
            };
            rec(rec, 0, 4);
            std::sort(brute.begin(), brute.end());
            CHECK(points == brute);
        }
}

TEST_CASE("m-convexity") {
    CHECK(is_m_convex(Support{2, {{0, 1}, {1, 0}}}));
    auto witness = m_convex_violation(Support{2, {{0, 2}, {2, 0}}});
    REQUIRE(witness.has_value());
    CHECK(witness->alpha == std::vector<int>{0, 2});
    CHECK(witness->beta == std::vector<int>{2, 0});
    CHECK(witness->index == 1);
    CHECK(is_m_convex(support(schur_monomials(P({2, 1})), 3)));
}

TEST_CASE("snp for symmetric expansions") {
    CHECK(is_snp_symmetric(expansion(2, {{P({2}), 1}, {P({1, 1}), 1}}), 2));
    CHECK_FALSE(is_snp_symmetric(expansion(2, {{P({2}), 1}}), 2));
    CHECK(is_snp_symmetric(dual_k_schur_monomials(P({2, 1}), 2), 3));
    // (3,1,1,1) and (2,2,2) are dominance-incomparable
    CHECK_THROWS_WITH(
        is_snp_symmetric(expansion(6, {{P({3, 1, 1, 1}), 1}, {P({2, 2, 2}), 1}}), 6),
        "dominance incomparable keys");
}

TEST_CASE("normalization") {
    NormalizedPoly n1 = normalize(expansion(1, {{P({1}), 1}}), 2);
    CHECK(n1.terms.at({1, 0}) == 1);
    CHECK(n1.terms.at({0, 1}) == 1);

    NormalizedPoly n2 = normalize(expansion(2, {{P({2}), 1}}), 1);
    CHECK(n2.terms.at({2}) == mpq_class(1, 2));

    NormalizedPoly s2 = normalize(schur_monomials(P({2})), 2);
    CHECK(s2.terms.at({2, 0}) == mpq_class(1, 2));
    CHECK(s2.terms.at({1, 1}) == 1);
    CHECK(s2.terms.at({0, 2}) == mpq_class(1, 2));
}

TEST_CASE("characteristic polynomial and descartes") {
    std::vector<std::vector<mpq_class>> ones{{1, 1}, {1, 1}};
    auto p = characteristic_polynomial(ones);
    CHECK(p == std::vector<mpq_class>{0, -2, 1});  // x^2 - 2x
    CHECK(descartes_positive_roots(p) == 1);

    std::vector<std::vector<mpq_class>> diag{{2, 0}, {0, -3}};
    auto q = characteristic_polynomial(diag);
    CHECK(descartes_positive_roots(q) == 1);

    std::vector<std::vector<mpq_class>> zero{{0, 0}, {0, 0}};
    CHECK(descartes_positive_roots(characteristic_polynomial(zero)) == 0);

    std::vector<std::vector<mpq_class>> posdef{{2, 1}, {1, 2}};
    CHECK(descartes_positive_roots(characteristic_polynomial(posdef)) == 2);
}

TEST_CASE("lorentzian check") {
    CHECK(lorentzian_check(normalize(schur_monomials(P({1})), 3)));
    CHECK_FALSE(lorentzian_check(normalize(expansion(2, {{P({2}), 1}}), 2)));
    CHECK(lorentzian_check(normalize(schur_monomials(P({2})), 2)));

    auto fail = lorentzian_violation(normalize(expansion(2, {{P({2}), 1}}), 2));
    REQUIRE(fail.has_value());
    CHECK(fail->reason == "support not m-convex");
}

TEST_CASE("normalized schur polynomials are lorentzian") {
    for (int d = 1; d <= 5; ++d)
        for (const Partition& lam : partitions_of(d))
            for (int n = 1; n <= 4; ++n) {
                NormalizedPoly g = normalize(schur_monomials(lam), n);
                if (g.terms.empty()) continue;
                CHECK(lorentzian_check(g));
            }
}

TEST_CASE("rado containment") {
    CHECK(rado_containment(P({2, 2}), P({3, 1}), 2));
    CHECK(rado_containment(P({2, 2}), P({2, 2}), 2));
    CHECK_FALSE(rado_containment(P({3, 1}), P({2, 2}), 2));
    CHECK_THROWS_WITH(rado_containment(P({2}), P({1}), 2), "incomparable sizes");

    auto inner = permutahedron_points(P({2, 2}), 2).points;
    auto outer = permutahedron_points(P({3, 1}), 2).points;
    CHECK(inner.size() == 1);
    CHECK(outer.size() == 3);
    CHECK(std::includes(outer.begin(), outer.end(), inner.begin(), inner.end()));
}

TEST_CASE("rado equivalence at small sizes") {
    for (int d = 1; d <= 6; ++d)
        for (const Partition& mu : partitions_of(d))
            for (const Partition& lam : partitions_of(d)) {
                int n = d;
                auto pm = permutahedron_points(mu, n).points;
                auto pl = permutahedron_points(lam, n).points;
                bool contained = std::includes(pl.begin(), pl.end(), pm.begin(), pm.end());
                CHECK(contained == dominates(mu, lam));
            }
}
