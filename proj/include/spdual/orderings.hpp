#pragma once

#include <string>
#include <vector>

#include "spdual/rational.hpp"

namespace spdual {

// Finite sequence of exact exponents. Possibly empty.
using ExpVector = std::vector<Rational>;

ExpVector sort_desc(ExpVector x);
ExpVector abs_vec(const ExpVector& x);
ExpVector concat(const ExpVector& x, const ExpVector& y);

// Prefix-sum ordering: every partial sum of x is <= the matching partial sum
// of y. Both orderings require equal length and are vacuously true on empty
// vectors.
bool leq_w(const ExpVector& x, const ExpVector& y);

// Entrywise ordering.
bool leq_s(const ExpVector& x, const ExpVector& y);

// Strict in every coordinate.
bool lt_s_all(const ExpVector& x, const ExpVector& y);

// Descending unit-step run (v, v-1, ..., u+1, u); empty when v < u.
// Throws when v - u is positive but not an integer.
ExpVector interval_desc(const Rational& u, const Rational& v);

// Ascending unit-step run r1, r1+1, ..., r2; empty when r2 < r1.
ExpVector segment_exponents(const Rational& r1, const Rational& r2);

Rational vec_sum(const ExpVector& x);

// "(3,2,1)" with exact entries, "()" when empty.
std::string vec_str(const ExpVector& x);

}  // namespace spdual
