#pragma once

// The affine symmetric group in window notation, reduced words, codes and the
// dominant partition mu(w), cyclically decreasing elements, and affine Stanley
// symmetric polynomials with their dual k-Schur expansions.

#include <set>
#include <vector>

#include "kschur/symfunc.hpp"

namespace kschur {

// Element of the affine symmetric group on k+1 letters: a bijection of the
// integers with w(i + k + 1) = w(i) + k + 1 and window sum 1 + ... + (k+1).
class AffinePermutation {
  public:
    AffinePermutation(int k, std::vector<int> window);
    static AffinePermutation identity(int k);

    int k() const { return k_; }
    const std::vector<int>& window() const { return window_; }
    int operator()(int i) const;  // periodic extension

    AffinePermutation operator*(const AffinePermutation& other) const;  // (u*v)(x) = u(v(x))
    AffinePermutation inverse() const;
    AffinePermutation times_generator(int i) const;  // right multiplication by s_i
    bool is_identity() const;

    auto operator<=>(const AffinePermutation&) const = default;

  private:
    int k_;
    std::vector<int> window_;
};

// Left-to-right product of generators applied to the identity.
AffinePermutation from_word(const std::vector<int>& word, int k);

// Number of affine inversions, computed as the sum of the code.
int length(const AffinePermutation& w);
bool is_reduced(const std::vector<int>& word, int k);

// c_i = #{j > i : w(j) < w(i)} over all integers j, for i = 1..k+1.
std::vector<int> code(const AffinePermutation& w);

// Conjugate of the sorted code of the inverse; the dominant dual k-Schur index.
Partition mu_of(const AffinePermutation& w);

struct CDElement {
    std::vector<int> word;
    AffinePermutation element;
};

// The cyclically decreasing element on a proper residue subset: each maximal
// cyclic run contributes its generators with s_{i+1} before s_i.
CDElement cyclically_decreasing(const std::set<int>& residues, int k);

// Coefficient of m_mu is the number of factorizations of w into cyclically
// decreasing factors of lengths mu_1, mu_2, ...; the raw counts for a
// composition and its sorted rearrangement are asserted equal.
MonExpansion affine_stanley_monomials(const AffinePermutation& w);

// decompose_in_basis in the dual k-Schur basis, with Lam's positivity and the
// dominant-term normalization asserted.
BasisCoeffs dual_k_schur_coeffs(const AffinePermutation& w);

bool is_321_avoiding(const AffinePermutation& w);

// All elements with length <= maxlen, BFS order (length, then window).
std::vector<AffinePermutation> affine_permutations_up_to_length(int k, int maxlen);

}  // namespace kschur
