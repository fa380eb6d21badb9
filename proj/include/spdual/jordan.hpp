#pragma once

#include <string>
#include <vector>

#include "spdual/orderings.hpp"

namespace spdual {

// The two self-dual unramified characters of F^x.
enum class SelfDualChar { Trivial, Sign };

// Pair of partitions into distinct odd positive integers parameterizing a
// strongly negative unramified representation of Sp(2q,F):
//   sum(t) + sum(s) = 2q + 1 and s has an even number of parts.
struct JordSn {
    std::vector<int> t;  // trivial-character parts, strictly decreasing
    std::vector<int> s;  // sign-character parts, strictly decreasing
    int q = 0;

    friend bool operator==(const JordSn&, const JordSn&) = default;
};

bool jord_valid(const JordSn& J);

// Every valid (t,s) pair of rank q, ordered lexicographically on (t,s) with
// larger leading parts first.
std::vector<JordSn> enumerate_jord_sn(int q);

// J(chi)' sorted descending: t with -1 adjoined for the trivial character,
// s unchanged for sign. The result always has even cardinality.
std::vector<int> adjoin_prime(const JordSn& J, SelfDualChar chi);

// Absolute support exponents contributed by one character: walk J(chi)' two
// at a time as (larger a, smaller b) and expand the run -(a-1)/2 .. (b-1)/2.
// Unsorted.
ExpVector sigma_char_exponents(const JordSn& J, SelfDualChar chi);

// Exponent norm of the strongly negative representation attached to J: the
// per-character exponents of both self-dual characters, sorted descending.
// Length is always q.
ExpVector sigma_norm(const JordSn& J);

// True exactly for t = (2q+1), s empty, the block of the trivial
// representation.
bool is_trivial_block(const JordSn& J);

// Does p appear in J(chi)?
bool jord_membership(const JordSn& J, SelfDualChar chi, int p);

std::string jord_str(const JordSn& J);

}  // namespace spdual
