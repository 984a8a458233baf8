#pragma once

// Semistandard Young tableaux and semistandard k-tableaux: Fayers' row-end
// filling, the residue-aware row filling on cores, the full construction of a
// k-tableau for a dominated k-weight, brute-force enumeration oracles, and
// Kostka / k-Kostka numbers.

#include <set>
#include <vector>

#include "kschur/budget.hpp"
#include "kschur/core.hpp"
#include "kschur/partition.hpp"

namespace kschur {

// rows[i] holds row i+1 of the filling, bottom row first (French convention).
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> rows;
};

struct FayersResult {
    Tableau tableau;
    std::vector<Partition> chain;  // chain[i] = cells holding letters <= i; chain[0] empty
};

// Fayers' construction of an SSYT of shape lambda and weight mu, filling
// letters from the largest down and packing them at row ends.
FayersResult fayers_ssyt(const Partition& lambda, const Partition& mu);

// Partial filling of a core diagram; entry 0 means empty.  marked/shaded track
// the bookkeeping of one row-filling operation.
struct PartialKTableau {
    Core core;
    std::vector<std::vector<int>> rows;
    std::set<Cell> marked;
    std::set<Cell> shaded;
};

PartialKTableau empty_partial(const Partition& lambda, int k);

// One row filling c(lambda_cur) <- {letter}: fills the top rows right to left
// under residue disjointness, then cascades through removable corners of the
// chosen residues.  The state's empty cells must form c(lambda_cur).
PartialKTableau row_fill(PartialKTableau state, const Partition& lambda_cur,
                         int mu_part, int letter);

struct KTableau {
    Core core;
    std::vector<std::vector<int>> rows;
    Composition k_weight;
};

// Runs Fayers' chain and applies row_fill per letter; the result is a
// semistandard k-tableau of shape c(lambda) and k-weight mu.
KTableau build_kssyt(const Partition& lambda, const Partition& mu, int k);

// Checks SSYT conditions on a core shape and returns the per-letter counts of
// distinct residues; throws naming the violated cell.
Composition validate_kssyt(const Core& shape, const std::vector<std::vector<int>>& rows);

// Exhaustive oracle: all SSYT fillings of c(lambda) with letters <= len(alpha)
// whose k-weight is exactly alpha, in row-major lexicographic order.
std::vector<KTableau> enumerate_kssyts(const Partition& lambda, const Composition& alpha,
                                       int k, SearchBudget* budget = nullptr);

// |enumerate_kssyts|; memoized on (lambda, alpha, k).
long long k_kostka(const Partition& lambda, const Composition& alpha, int k,
                   SearchBudget* budget = nullptr);

// Classical Kostka number by brute-force SSYT enumeration; memoized.
long long kostka(const Partition& lambda, const Composition& mu,
                 SearchBudget* budget = nullptr);

}  // namespace kschur
