#pragma once

// Monomial-basis expansions of Schur, complete homogeneous, dual k-Schur and
// k-Schur polynomials, unitriangular basis decomposition, and finite-variable
// supports.  All coefficients are exact integers.

#include <map>
#include <vector>

#include "kschur/budget.hpp"
#include "kschur/partition.hpp"

namespace kschur {

// Finite integer combination of monomial symmetric functions m_mu, all mu of
// one common degree.  Zero coefficients are never stored.
struct MonExpansion {
    int degree = 0;
    std::map<Partition, long long> coeffs;

    long long coefficient(const Partition& mu) const {
        auto it = coeffs.find(mu);
        return it == coeffs.end() ? 0 : it->second;
    }
    void add(const Partition& mu, long long c);
    void add_scaled(const MonExpansion& other, long long factor);
    bool operator==(const MonExpansion&) const = default;
};

MonExpansion schur_monomials(const Partition& lambda, SearchBudget* budget = nullptr);
MonExpansion dual_k_schur_monomials(const Partition& lambda, int k,
                                    SearchBudget* budget = nullptr);
MonExpansion complete_homogeneous_monomials(const Partition& lambda);

// Solves h_lambda = s^(k)_lambda + sum_{mu > lambda} K^(k)_{mu,lambda} s^(k)_mu
// over all k-bounded partitions of |lambda|, top of the dominance order first.
MonExpansion k_schur_monomials(const Partition& lambda, int k,
                                 SearchBudget* budget = nullptr);

enum class Basis { schur, dual_k_schur, k_schur };

struct BasisCoeffs {
    Basis basis = Basis::schur;
    int k = 0;  // meaningful for the k-indexed bases
    std::map<Partition, long long> coeffs;
    bool operator==(const BasisCoeffs&) const = default;
};

// Peels the dominance-maximal surviving monomial repeatedly (lexicographically
// largest among maximal keys).  Throws "not in basis span" when the residual
// cannot be expressed.  Supported bases: schur, dual_k_schur.
BasisCoeffs decompose_in_basis(const MonExpansion& f, Basis basis, int k = 0);

// Exponent vectors with nonzero coefficient, as points in N^n, sorted.
struct Support {
    int n = 0;
    std::vector<std::vector<int>> points;
    bool operator==(const Support&) const = default;
};

Support support(const MonExpansion& f, int n);

// All distinct permutations of mu padded with zeros to length n, sorted.
// Empty when mu has more than n parts.
std::vector<std::vector<int>> padded_permutations(const Partition& mu, int n);

}  // namespace kschur
