#pragma once

// Cylindric shapes (period-encoded infinite lattice paths), cylindric skew
// tableaux as chains of shapes, and cylindric skew Schur polynomials.

#include <utility>
#include <vector>

#include "kschur/symfunc.hpp"

namespace kschur {

// One period of a shape in C^{n,m}: the induced Z-indexed row sequence is
// s_i = profile[(i-1) mod m] - (n-m) * floor((i-1)/m), weakly decreasing.
struct CylindricShape {
    int n = 2;
    int m = 1;
    std::vector<int> profile;

    CylindricShape() = default;
    CylindricShape(int n_, int m_, std::vector<int> profile_);

    int row(int i) const;  // s_i for any integer i

    auto operator<=>(const CylindricShape&) const = default;
};

// inner lies weakly to the left of outer (same n, m).
bool cyl_includes(const CylindricShape& outer, const CylindricShape& inner);

// Boxes of outer/inner in one period.
int cyl_period_boxes(const CylindricShape& outer, const CylindricShape& inner);

// Strip boxes with column in (c0, c0 + n - m]; constant over c0 for a valid
// horizontal strip, which the tableau enumeration asserts on two offsets.
int cyl_boxes_in_window(const CylindricShape& from, const CylindricShape& to, int c0);

struct CylindricTableau {
    std::vector<CylindricShape> chain;  // inner = chain[0] ... chain.back() = outer
    Composition weight;
};

// All chains from inner to outer whose steps are cylindric horizontal strips,
// every step nonempty.
std::vector<CylindricTableau> cylindric_tableaux(const CylindricShape& outer,
                                                 const CylindricShape& inner);

// Coefficient of m_mu counts the tableaux of weight mu; counts grouped by
// rearrangement are asserted equal.  `degree` must match the period box count.
MonExpansion cylindric_skew_schur_monomials(const CylindricShape& outer,
                                            const CylindricShape& inner, int degree);

// Representatives of all skew pairs in C^{n,.} with 1..max_boxes period boxes,
// up to translation: inner's last period entry lies in [0, n-m) and the pair
// is lexicographically minimal among its row rotations.
std::vector<std::pair<CylindricShape, CylindricShape>> canonical_cylindric_pairs(
    int n, int max_boxes);

}  // namespace kschur
