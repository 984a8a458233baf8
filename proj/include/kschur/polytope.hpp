#pragma once

// Lattice points of lambda-permutahedra, M-convexity and saturated-Newton-
// polytope checks, normalization, and the operational Lorentzian test.
// Rational arithmetic is exact (GMP).

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kschur/budget.hpp"
#include "kschur/symfunc.hpp"

namespace kschur {

// All alpha in N^n with sum = |lambda| and p(alpha) <| lambda; by Rado these
// are exactly the lattice points of the lambda-permutahedron.  Requires
// n >= length(lambda).
Support permutahedron_points(const Partition& lambda, int n);

struct MConvexWitness {
    std::vector<int> alpha;
    std::vector<int> beta;
    int index = 0;  // 0-based coordinate with alpha[i] > beta[i] and no exchange
};

// Exchange-axiom scan over all ordered pairs; returns the lexicographically
// smallest violation, or nullopt when the set is M-convex.
std::optional<MConvexWitness> m_convex_violation(const Support& s, SearchBudget* budget = nullptr);
bool is_m_convex(const Support& s, SearchBudget* budget = nullptr);

// SNP test for symmetric expansions with a dominance-maximal key: the support
// must equal the dominance-filtered lattice point set of that key.  Throws
// "dominance incomparable keys" when no key dominates all others.
bool is_snp_symmetric(const MonExpansion& f, int n);

struct NormalizedPoly {
    int n = 0;
    int degree = 0;
    std::map<std::vector<int>, mpq_class> terms;
};

// N(f): expand into exponent vectors in n variables and divide each
// coefficient by the product of factorials of the exponents.
NormalizedPoly normalize(const MonExpansion& f, int n);

struct LorentzianFailure {
    std::string reason;            // "negative coefficient" | "support not m-convex" | "hessian signature"
    std::vector<int> witness_point;    // offending exponent vector, when applicable
    std::vector<int> witness_point2;   // second point of an exchange violation
    std::vector<int> derivative_multiset;  // indices (0-based) of the failing derivative
    int positive_eigenvalues = 0;
};

// Nonnegative coefficients, M-convex support, and at most one positive
// eigenvalue for the Hessian of every (degree-2)-fold partial derivative.
// Eigenvalue counts are exact: Descartes' rule on the characteristic
// polynomial, which has only real roots for symmetric matrices.
std::optional<LorentzianFailure> lorentzian_violation(const NormalizedPoly& g);
bool lorentzian_check(const NormalizedPoly& g);

// Equivalent to dominates(mu, lambda) by Rado's theorem; the point-set
// inclusion is what the property tests compare against.
bool rado_containment(const Partition& mu, const Partition& lambda, int n);

// Characteristic polynomial coefficients of a symmetric rational matrix,
// highest degree first (monic), via the Faddeev-LeVerrier recurrence.
std::vector<mpq_class> characteristic_polynomial(const std::vector<std::vector<mpq_class>>& a);

// Number of positive roots of a real-rooted polynomial by sign variations.
int descartes_positive_roots(const std::vector<mpq_class>& coeffs);

}  // namespace kschur
