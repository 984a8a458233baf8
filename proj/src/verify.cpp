#include "kschur/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

#include "kschur/affine.hpp"
#include "kschur/core.hpp"
#include "kschur/cylindric.hpp"
#include "kschur/io.hpp"
#include "kschur/polytope.hpp"
#include "kschur/symfunc.hpp"
#include "kschur/tableau.hpp"

namespace kschur {

namespace {

using nlohmann::json;

struct Runner {
    const SweepConfig& config;
    const std::function<void(const Verdict&)>& sink;
    bool all_pass = true;

    // Runs one instance; `body` either returns a witness (fail) or null (pass).
    void instance(const std::string& check, json params,
                  const std::function<json(SearchBudget&)>& body) {
        Verdict v;
        v.check = check;
        v.params = std::move(params);
        SearchBudget budget(config.budget);
        auto start = std::chrono::steady_clock::now();
        try {
            json witness = body(budget);
            if (witness.is_null()) {
                v.result = "pass";
            } else {
                v.result = "fail";
                v.witness = std::move(witness);
            }
        } catch (const BudgetExceeded&) {
            v.result = "budget-exceeded";
            v.witness = json{{"nodes", budget.used()}};
        } catch (const std::exception& e) {
            v.result = "fail";
            v.witness = json{{"error", e.what()}};
        }
        v.elapsed_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        if (v.result != "pass") all_pass = false;
        sink(v);
    }
};

json point_json(const std::vector<int>& p) { return json(p); }

json mconvex_witness_json(const MConvexWitness& w) {
    return json{{"alpha", w.alpha}, {"beta", w.beta}, {"index", w.index}};
}

json lorentzian_witness_json(const LorentzianFailure& f, int n) {
    json out{{"reason", f.reason}, {"n", n}};
    if (!f.witness_point.empty()) out["point"] = f.witness_point;
    if (!f.witness_point2.empty()) out["point2"] = f.witness_point2;
    if (!f.derivative_multiset.empty()) out["derivative"] = f.derivative_multiset;
    if (f.positive_eigenvalues) out["positive_eigenvalues"] = f.positive_eigenvalues;
    return out;
}

void check_support_equality(Runner& r) {
    for (int k = r.config.k_lo; k <= r.config.k_hi; ++k)
        for (int d = std::max(1, r.config.size_lo); d <= r.config.size_hi; ++d)
            for (const Partition& lambda : k_bounded_partitions(d, k))
                r.instance(
                    "support-equality",
                    json{{"k", k}, {"d", d}, {"lambda", lambda.to_string()}},
                    [&, k](SearchBudget& budget) -> json {
                        MonExpansion dual = dual_k_schur_monomials(lambda, k, &budget);
                        MonExpansion schur = schur_monomials(lambda, &budget);
                        int n_lo = std::max(r.config.n_lo, lambda.length());
                        int n_hi = std::min(r.config.n_hi, lambda.size());
                        for (int n = n_lo; n <= n_hi; ++n) {
                            Support a = support(dual, n);
                            Support b = support(schur, n);
                            Support c = permutahedron_points(lambda, n);
                            if (a != b)
                                return json{{"n", n}, {"mismatch", "dual vs schur"}};
                            if (a.points != c.points)
                                return json{{"n", n}, {"mismatch", "support vs permutahedron"}};
                            if (auto w = m_convex_violation(a, &budget))
                                return mconvex_witness_json(*w);
                        }
                        return nullptr;
                    });
}

void check_k_kostka_iff_dominance(Runner& r) {
    for (int k = r.config.k_lo; k <= r.config.k_hi; ++k)
        for (int d = std::max(1, r.config.size_lo); d <= r.config.size_hi; ++d)
            for (const Partition& lambda : k_bounded_partitions(d, k))
                r.instance(
                    "k-kostka-iff-dominance",
                    json{{"k", k}, {"d", d}, {"lambda", lambda.to_string()}},
                    [&, k](SearchBudget& budget) -> json {
                        for (const Partition& mu : k_bounded_partitions(lambda.size(), k)) {
                            bool dom = dominates(mu, lambda);
                            if (dom) {
                                auto list = enumerate_kssyts(lambda, mu.parts(), k, &budget);
                                if (list.empty())
                                    return json{{"mu", mu.to_string()},
                                                {"mismatch", "dominated but no tableau"}};
                                KTableau t = build_kssyt(lambda, mu, k);
                                bool member = false;
                                for (const auto& cand : list)
                                    if (cand.rows == t.rows) member = true;
                                if (!member)
                                    return json{{"mu", mu.to_string()},
                                                {"mismatch", "constructed tableau not enumerated"}};
                            } else {
                                if (k_kostka(lambda, mu.parts(), k, &budget) != 0)
                                    return json{{"mu", mu.to_string()},
                                                {"mismatch", "nonzero without dominance"}};
                            }
                        }
                        return nullptr;
                    });
}

void check_rado(Runner& r) {
    for (int d = std::max(1, r.config.size_lo); d <= r.config.size_hi; ++d)
        r.instance("rado", json{{"d", d}}, [&, d](SearchBudget& budget) -> json {
            auto shapes = partitions_of(d);
            std::map<std::pair<Partition, int>, Support> cache;
            auto points = [&](const Partition& p, int n) -> const Support& {
                auto key = std::make_pair(p, n);
                auto it = cache.find(key);
                if (it == cache.end())
                    it = cache.emplace(key, permutahedron_points(p, n)).first;
                return it->second;
            };
            for (const Partition& mu : shapes)
                for (const Partition& lambda : shapes) {
                    bool dom = rado_containment(mu, lambda, d);
                    int n_lo = std::max({r.config.n_lo, mu.length(), lambda.length()});
                    int n_hi = std::min(r.config.n_hi, d);
                    for (int n = n_lo; n <= n_hi; ++n) {
                        budget.charge();
                        const Support& pm = points(mu, n);
                        const Support& pl = points(lambda, n);
                        bool contained = std::includes(pl.points.begin(), pl.points.end(),
                                                       pm.points.begin(), pm.points.end());
                        if (contained != dom)
                            return json{{"mu", mu.to_string()},
                                        {"lambda", lambda.to_string()},
                                        {"n", n},
                                        {"dominates", dom},
                                        {"contained", contained}};
                    }
                }
            return nullptr;
        });
}

void check_m_convex_affine_stanley(Runner& r) {
    for (int k = r.config.k_lo; k <= r.config.k_hi; ++k) {
        auto all = affine_permutations_up_to_length(k, r.config.size_hi);
        for (int len = std::max(1, r.config.size_lo); len <= r.config.size_hi; ++len)
            r.instance(
                "m-convex-affine-stanley", json{{"k", k}, {"length", len}},
                [&, k, len](SearchBudget& budget) -> json {
                    for (const auto& w : all) {
                        if (length(w) != len) continue;
                        json where = json(w.window());
                        MonExpansion f = affine_stanley_monomials(w);
                        BasisCoeffs bc = dual_k_schur_coeffs(w);  // asserts Lam bounds
                        (void)bc;
                        Partition dominant = mu_of(w);
                        int n = len;
                        Support sup = support(f, n);
                        if (sup.points != permutahedron_points(dominant, n).points)
                            return json{{"window", where}, {"mismatch", "newton polytope"}};
                        if (!is_snp_symmetric(f, n))
                            return json{{"window", where}, {"mismatch", "snp"}};
                        if (auto viol = m_convex_violation(sup, &budget)) {
                            json out = mconvex_witness_json(*viol);
                            out["window"] = where;
                            return out;
                        }
                    }
                    return nullptr;
                });
    }
}

void check_m_convex_cylindric(Runner& r) {
    for (int k = r.config.k_lo; k <= r.config.k_hi; ++k) {
        int n_cyl = k + 1;
        for (const auto& [outer, inner] : canonical_cylindric_pairs(n_cyl, r.config.size_hi)) {
            int boxes = cyl_period_boxes(outer, inner);
            r.instance(
                "m-convex-cylindric",
                json{{"n", n_cyl},
                     {"m", outer.m},
                     {"outer", outer.profile},
                     {"inner", inner.profile},
                     {"boxes", boxes}},
                [&, boxes](SearchBudget& budget) -> json {
                    const auto& out_shape = outer;
                    const auto& in_shape = inner;
                    MonExpansion f =
                        cylindric_skew_schur_monomials(out_shape, in_shape, boxes);
                    Support sup = support(f, boxes);
                    if (auto viol = m_convex_violation(sup, &budget))
                        return mconvex_witness_json(*viol);
                    return nullptr;
                });
        }
    }
}

void lorentzian_sweep(Runner& r, const std::string& check, bool k_indexed,
                      const std::function<MonExpansion(const Partition&, int, SearchBudget*)>& expand) {
    int k_lo = k_indexed ? r.config.k_lo : 0;
    int k_hi = k_indexed ? r.config.k_hi : 0;
    for (int k = k_lo; k <= k_hi; ++k)
        for (int d = std::max(1, r.config.size_lo); d <= r.config.size_hi; ++d) {
            auto shapes = k_indexed ? k_bounded_partitions(d, k) : partitions_of(d);
            for (const Partition& lambda : shapes) {
                json params{{"d", d}, {"lambda", lambda.to_string()}};
                if (k_indexed) params["k"] = k;
                r.instance(check, params, [&, k](SearchBudget& budget) -> json {
                    MonExpansion f = expand(lambda, k, &budget);
                    for (int n = std::max(1, r.config.n_lo); n <= r.config.n_hi; ++n) {
                        NormalizedPoly g = normalize(f, n);
                        if (g.terms.empty()) continue;
                        if (auto fail = lorentzian_violation(g))
                            return lorentzian_witness_json(*fail, n);
                    }
                    return nullptr;
                });
            }
        }
}

void check_k_schur_dominant_term(Runner& r) {
    for (int k = r.config.k_lo; k <= r.config.k_hi; ++k)
        for (int d = std::max(1, r.config.size_lo); d <= r.config.size_hi; ++d)
            r.instance(
                "k-schur-dominant-term", json{{"k", k}, {"d", d}},
                [&, k, d](SearchBudget& budget) -> json {
                    for (const Partition& lambda : k_bounded_partitions(d, k)) {
                        BasisCoeffs bc = decompose_in_basis(
                            k_schur_monomials(lambda, k, &budget), Basis::schur);
                        Partition dominant;
                        bool have = false;
                        for (const auto& [mu, c] : bc.coeffs) {
                            if (c < 0)
                                return json{{"lambda", lambda.to_string()},
                                            {"mismatch", "negative schur coefficient"},
                                            {"mu", mu.to_string()}};
                            bool top = true;
                            for (const auto& [nu, c2] : bc.coeffs)
                                if (!dominates(nu, mu)) {
                                    top = false;
                                    break;
                                }
                            if (top) {
                                dominant = mu;
                                have = true;
                            }
                        }
                        if (!have)
                            return json{{"lambda", lambda.to_string()},
                                        {"mismatch", "no dominant schur term"}};
                        if (bc.coeffs.at(dominant) <= 0)
                            return json{{"lambda", lambda.to_string()},
                                        {"mismatch", "dominant term not positive"}};
                    }
                    return nullptr;
                });
}

void check_self_test(Runner& r) {
    r.instance("self-test-bad-support", json{{"fixture", "{(2,0),(0,2)}"}},
               [](SearchBudget&) -> json {
                   Support bad{2, {{0, 2}, {2, 0}}};
                   if (auto w = m_convex_violation(bad)) return mconvex_witness_json(*w);
                   return json{{"error", "bad support was not detected"}};
               });
}

}  // namespace

json verdict_payload(const Verdict& v) {
    json out{{"check", v.check}, {"params", v.params}, {"result", v.result}};
    if (!v.witness.is_null()) out["witness"] = v.witness;
    return out;
}

const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> names{
        "support-equality",        "k-kostka-iff-dominance", "rado",
        "m-convex-affine-stanley", "m-convex-cylindric",     "lorentzian-dual-k-schur",
        "lorentzian-k-schur",      "k-schur-dominant-term",  "lorentzian-schur",
        "self-test-bad-support"};
    return names;
}

bool run_checks(const SweepConfig& config, const std::function<void(const Verdict&)>& sink) {
    std::vector<std::string> selected =
        config.checks.empty() ? std::vector<std::string>{all_check_names().begin(),
                                                         all_check_names().end() - 1}
                              : config.checks;
    Runner runner{config, sink};
    for (const std::string& name : selected) {
        if (name == "support-equality") {
            check_support_equality(runner);
        } else if (name == "k-kostka-iff-dominance") {
            check_k_kostka_iff_dominance(runner);
        } else if (name == "rado") {
            check_rado(runner);
        } else if (name == "m-convex-affine-stanley") {
            check_m_convex_affine_stanley(runner);
        } else if (name == "m-convex-cylindric") {
            check_m_convex_cylindric(runner);
        } else if (name == "lorentzian-schur") {
            lorentzian_sweep(runner, name, false,
                             [](const Partition& lambda, int, SearchBudget* b) {
                                 return schur_monomials(lambda, b);
                             });
        } else if (name == "lorentzian-dual-k-schur") {
            lorentzian_sweep(runner, name, true,
                             [](const Partition& lambda, int k, SearchBudget* b) {
                                 return dual_k_schur_monomials(lambda, k, b);
                             });
        } else if (name == "lorentzian-k-schur") {
            lorentzian_sweep(runner, name, true,
                             [](const Partition& lambda, int k, SearchBudget* b) {
                                 return k_schur_monomials(lambda, k, b);
                             });
        } else if (name == "k-schur-dominant-term") {
            check_k_schur_dominant_term(runner);
        } else if (name == "self-test-bad-support") {
            check_self_test(runner);
        } else {
            throw std::invalid_argument("unknown check: " + name);
        }
    }
    return runner.all_pass;
}

}  // namespace kschur
