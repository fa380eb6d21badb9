#pragma once

#include <string>
#include <vector>

#include "spdual/jordan.hpp"
#include "spdual/orderings.hpp"

namespace spdual {

// Unramified unitary character of F^x, modeled as a root of unity: the
// reduced angle k/n in [0,1) stands for exp(2*pi*i*k/n). The two self-dual
// characters sit at angles 0 (trivial) and 1/2 (sign).
struct UnitaryChar {
    int num = 0;
    int den = 1;

    static UnitaryChar make(long long k, long long n);
    static UnitaryChar from_angle(const Rational& a) { return make(a.num(), a.den()); }

    bool self_dual() const { return num == 0 || 2 * num == den; }
    UnitaryChar inverse() const { return make(den - num, den); }
    // Representative of {chi, chi^-1} with angle <= 1/2.
    UnitaryChar canonical() const;

    friend bool operator==(const UnitaryChar&, const UnitaryChar&) = default;
    friend bool operator<(const UnitaryChar& a, const UnitaryChar& b) {
        return static_cast<long long>(a.num) * b.den < static_cast<long long>(b.num) * a.den;
    }

    std::string str() const;
};

// Maps the self-dual characters onto their partition labels. Throws on a
// non-self-dual input.
SelfDualChar self_dual_label(const UnitaryChar& chi);

// Unitary unramified character of GL(n,F) appearing in the negative part.
struct PsiChar {
    UnitaryChar chi;
    int n = 1;

    friend bool operator==(const PsiChar&, const PsiChar&) = default;
    friend bool operator<(const PsiChar& a, const PsiChar& b) {
        if (a.chi != b.chi) return a.chi < b.chi;
        return a.n < b.n;
    }
};

// Character of GL(p,F) twisted by nu^e. Its cuspidal support exponents are
// e-(p-1)/2, ..., e+(p-1)/2.
struct GLChar {
    UnitaryChar chi;
    int p = 1;
    Rational e;

    ExpVector support_exponents() const;

    friend bool operator==(const GLChar&, const GLChar&) = default;
    friend bool operator<(const GLChar& a, const GLChar& b) {
        if (a.chi != b.chi) return a.chi < b.chi;
        if (a.p != b.p) return a.p < b.p;
        return a.e < b.e;
    }
};

// Negative unramified representation: unitary characters over a strongly
// negative block. Canonical form folds each character onto its angle <= 1/2
// representative and sorts, so equality of canonical forms is equivalence.
struct NegativeRep {
    std::vector<PsiChar> psis;
    JordSn block;

    int total_rank() const;
    NegativeRep canonical() const;

    friend bool operator==(const NegativeRep&, const NegativeRep&) = default;
};

// Candidate point of the unramified unitary dual: positive-exponent GL
// characters over a negative representation.
struct DualPoint {
    std::vector<GLChar> phis;
    NegativeRep neg;

    int rank() const;
};

// nu^{1/2} phi x 1_{Sp(0)} reduces exactly for even GL rank.
bool reduces_at_half(int p);

// Reducibility of phi x sigma_neg at the unitary point, for self-dual phi
// with e = 0: rank odd, (chi,p) absent from the block, and phi absent from
// the psi list. Throws if the precondition on phi fails.
bool reduces_at_zero(const GLChar& phi, const NegativeRep& neg);

ExpVector negative_norm(const NegativeRep& neg);
ExpVector dual_point_norm(const DualPoint& pt);

enum class DualReject {
    None,
    C1,       // inverse-pair exponent multisets differ
    C2,       // exponent >= 1/2 in a rigid class
    C3Range,  // exponent >= 1 in a deformable class
    C3Order,  // repeated exponent above 1/2
    C3a,
    C3b,
    C3c,
    C3d,
};

const char* reject_tag(DualReject r);

struct DualVerdict {
    bool accepted = false;
    DualReject reason = DualReject::None;
};

// Membership test for the unramified unitary dual. Rejections report the
// first failed condition in the fixed order C1, C2, C3Range, C3Order, C3a,
// C3b, C3c, C3d.
DualVerdict check_dual_conditions(const DualPoint& pt);

std::string psi_str(const PsiChar& c);
std::string phi_str(const GLChar& c);
std::string neg_str(const NegativeRep& r);
std::string point_str(const DualPoint& pt);

}  // namespace spdual
