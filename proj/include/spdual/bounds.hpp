#pragma once

#include <optional>

#include "spdual/orderings.hpp"

namespace spdual {

enum class GroupKind { Sp, SOOdd };

// Dimension of the standard representation of the dual group: 2q+1 for
// Sp(2q,F) and 2q for SO(2q+1,F).
long long dual_dimension(GroupKind g, int q);

// Exponent of the half modular character of the minimal parabolic restricted
// to the long torus coordinate: q+1 resp. q+1/2. Every cuspidal reducibility
// point is capped by this value.
Rational half_modulus_exponent(GroupKind g, int q);

// Exponent norm of the trivial representation: (q,...,1) for Sp and
// (q-1/2,...,1/2) for SO-odd.
ExpVector trivial_norm(GroupKind g, int q);

// Upper bound for alpha^2 when the cuspidal reducibility point alpha is >= 1:
// q*/p for integral alpha, q*/p + 1/4 otherwise.
Rational cuspidal_alpha_sq_bound(int p, GroupKind g, int q, bool integral);

enum class CFormula {
    Reconciled,     // largest half integer t with t^2 <= q*/denom + 1/4
    IntroSqrt,      // largest half integer t with t <= sqrt(2q/(denom+1))
    Multiplicity,   // the Reconciled rule read with the multiplicity as denom
};

// Base value c of the fixed-parabolic bound ladder (r,...,c+1,c). The default
// uses the GL rank p as the denominator; the alternative readings are kept
// behind the formula switch for comparison. All square-root comparisons are
// exact integer inequalities.
Rational c_parabolic(int p, GroupKind g, int q);
Rational c_parabolic(int denom, GroupKind g, int q, CFormula formula);

// (c+n-1, ..., c+1, c) with c = c_parabolic(p, g, q).
ExpVector parabolic_bound_vector(int p, int n, GroupKind g, int q);
ExpVector parabolic_bound_vector(int p, int n, GroupKind g, int q, CFormula formula);

// (c+n-1, ..., c) with c = (1 + jord_card)/2.
ExpVector bernstein_bound_vector(int jord_card, int n);

// (n/2, (n-1)/2, ..., 1, 1/2).
ExpVector nonselfdual_bound_vector(int n);

// Absolute support exponents of one cuspidal class, plus the reducibility
// point of the class when it is self dual.
struct ExponentClassData {
    ExpVector abs_exponents;
    std::optional<Rational> alpha_cusp;
};

// Necessary condition for a non-self-dual class: the i-th smallest absolute
// exponent is <= i/2.
bool filter_nonselfdual(const ExponentClassData& data);

// Necessary condition for a self-dual class with reducibility point
// alpha_cusp (a non-negative half integer). Checks the unit gap rule on the
// distinct values above alpha_cusp, then:
//  - when some exponent is <= alpha_cusp, anchors the ladder there:
//    alpha_1 - a <= 1 and alpha_i <= a + i with a the largest such exponent
//    (exponents equal to alpha_cusp count, including 0 when alpha_cusp = 0);
//  - when alpha_cusp >= 1/2 and no exponent is that low, rejects;
//  - when alpha_cusp = 0 with nothing at 0, requires alpha_i <= i - 1/2.
bool filter_selfdual(const ExponentClassData& data);

// Strongly negative norms sit below (q,...,1), and strictly below in the
// sense of also fitting under (q-1,...,0) unless the block is trivial.
bool sn_bound_check(const ExpVector& norm, int q, bool is_trivial);

// Negative-but-not-strongly-negative norms fit under (q-1,...,0) or under
// (q-2,...,1,1/2,1/2).
bool neg_bound_check(const ExpVector& norm, int q);

// Non-negative unitary norms fit under (q-1,...,1,1/2) and their sum is at
// most q(q-1)/2.
bool nonneg_unitary_bound_check(const ExpVector& norm, int q);

}  // namespace spdual
