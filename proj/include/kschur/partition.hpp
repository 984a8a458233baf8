#pragma once

// Integer partitions, cells of Young diagrams (French convention, rows
// 1-indexed bottom to top), hooks, residues and the dominance order.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kschur {

struct Cell {
    int row = 1;  // 1-indexed from the bottom
    int col = 1;  // 1-indexed from the left
    auto operator<=>(const Cell&) const = default;
};

// A composition: finite sequence of nonnegative integers, trailing zeros allowed.
using Composition = std::vector<int>;

// Weakly decreasing sequence of positive parts; trailing zeros are never stored,
// so equal partitions compare equal as vectors.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }

    // 1-indexed part access; parts beyond the length are 0.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }
    bool contains(Cell c) const {
        return c.row >= 1 && c.col >= 1 && c.col <= part(c.row);
    }

    std::string to_string() const;  // "[4,4,4,2,1]", "[]" for empty
    static Partition parse(std::string_view text);

    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);

// mu <| lambda in dominance order.  Defined only for equal sizes; throws
// std::invalid_argument("incomparable sizes") otherwise.
bool dominates(const Partition& mu, const Partition& lambda);

// First prefix index at which dominance fails, or nullopt when mu <| lambda.
// Still throws on unequal sizes.
std::optional<int> dominance_violation(const Partition& mu, const Partition& lambda);

int hook_length(const Partition& lambda, Cell c);

// (col - row) mod (k+1), normalized to [0, k].
int residue(Cell c, int k);

// Number of cells of lambda on the hook path from a to b (b weakly southeast
// of a): column col_a between the two rows plus row row_b strictly right of
// col_a up to col_b.
int h_between(const Partition& lambda, Cell a, Cell b);

struct CornerData {
    std::vector<Cell> top_cells;
    std::vector<Cell> removable;
    std::vector<Cell> addable;
};
CornerData corners(const Partition& lambda);

// p(alpha): parts sorted weakly decreasing, zeros dropped.
Partition sort_to_partition(const Composition& alpha);

// Enumeration helpers used throughout the sweeps; lexicographically descending.
std::vector<Partition> partitions_of(int d);
std::vector<Partition> k_bounded_partitions(int d, int k);

}  // namespace kschur
