#pragma once

// (k+1)-cores and the Lapointe-Morse bijections between cores and k-bounded
// partitions, the residue generator action on cores, and per-row residue sets.

#include <set>
#include <vector>

#include "kschur/partition.hpp"

namespace kschur {

struct Core {
    Partition shape;
    int k = 1;
    auto operator<=>(const Core&) const = default;
};

bool is_core(const Partition& lambda, int k);

// Validating constructor; throws if shape has a hook of length k+1.
Core as_core(Partition shape, int k);

// The map p: number of cells per row with hook length <= k.
Partition core_to_bounded(const Core& gamma);

struct CoreConstruction {
    Core core;
    std::vector<int> shifts;  // t_1 >= ... >= t_l = 0, row slide amounts
    Partition inner;          // rho; skew core/rho is the slid copy of lambda
};

// The map c: slide each row of the k-bounded partition right to the first
// offset where none of its cells has hook length > k.  Throws
// std::invalid_argument("not k-bounded") when lambda_1 > k.
CoreConstruction bounded_to_core(const Partition& lambda, int k);

enum class GeneratorMode { remove, add };

// s_i action: removes (or adds) every removable (addable) corner of residue i;
// identity when there is none.
Core apply_generator(const Core& gamma, int i, GeneratorMode mode);

// R(i): distinct residues of the top cells in row i of the constructed core,
// for i = 1..length(lambda).
std::vector<std::set<int>> row_residue_sets(const CoreConstruction& cc);

}  // namespace kschur
