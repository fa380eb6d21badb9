#include "spdual/spectrum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace spdual {

UnitaryChar UnitaryChar::make(long long k, long long n) {
    if (n <= 0) throw std::invalid_argument("UnitaryChar: non-positive order");
    k %= n;
    if (k < 0) k += n;
    long long g = std::gcd(k, n);
    return UnitaryChar{static_cast<int>(k / g), static_cast<int>(n / g)};
}

UnitaryChar UnitaryChar::canonical() const {
    return (2LL * num <= den) ? *this : inverse();
}

std::string UnitaryChar::str() const { return Rational(num, den).str(); }

SelfDualChar self_dual_label(const UnitaryChar& chi) {
    if (chi.num == 0) return SelfDualChar::Trivial;
    if (2 * chi.num == chi.den) return SelfDualChar::Sign;
    throw std::invalid_argument("self_dual_label: character " + chi.str() + " is not self dual");
}

ExpVector GLChar::support_exponents() const {
    Rational half_span(p - 1, 2);
    return segment_exponents(e - half_span, e + half_span);
}

int NegativeRep::total_rank() const {
    int r = block.q;
    for (const auto& psi : psis) r += psi.n;
    return r;
}

NegativeRep NegativeRep::canonical() const {
    NegativeRep out = *this;
    for (auto& psi : out.psis) psi.chi = psi.chi.canonical();
    std::sort(out.psis.begin(), out.psis.end());
    return out;
}

int DualPoint::rank() const {
    int r = neg.total_rank();
    for (const auto& phi : phis) r += phi.p;
    return r;
}

bool reduces_at_half(int p) { return p % 2 == 0; }

bool reduces_at_zero(const GLChar& phi, const NegativeRep& neg) {
    if (phi.e != Rational(0) || !phi.chi.self_dual())
        throw std::invalid_argument("reduces_at_zero: phi must be self dual with e = 0");
    if (phi.p % 2 == 0) return false;
    if (jord_membership(neg.block, self_dual_label(phi.chi), phi.p)) return false;
    for (const auto& psi : neg.psis)
        if (psi.chi.canonical() == phi.chi && psi.n == phi.p) return false;
    return true;
}

ExpVector negative_norm(const NegativeRep& neg) {
    ExpVector out;
    for (const auto& psi : neg.psis) {
        Rational half_span(psi.n - 1, 2);
        for (const auto& x : segment_exponents(-half_span, half_span)) out.push_back(x.abs());
    }
    for (const auto& x : sigma_norm(neg.block)) out.push_back(x);
    return sort_desc(std::move(out));
}

ExpVector dual_point_norm(const DualPoint& pt) {
    ExpVector out;
    for (const auto& phi : pt.phis)
        for (const auto& x : phi.support_exponents()) out.push_back(x.abs());
    for (const auto& x : negative_norm(pt.neg)) out.push_back(x);
    return sort_desc(std::move(out));
}

const char* reject_tag(DualReject r) {
    switch (r) {
        case DualReject::None: return "accepted";
        case DualReject::C1: return "condition-1";
        case DualReject::C2: return "condition-2";
        case DualReject::C3Range: return "condition-3-range";
        case DualReject::C3Order: return "condition-3-order";
        case DualReject::C3a: return "condition-3a";
        case DualReject::C3b: return "condition-3b";
        case DualReject::C3c: return "condition-3c";
        case DualReject::C3d: return "condition-3d";
    }
    return "unknown";
}

namespace {

struct ExponentClass {
    UnitaryChar cchi;  // canonical representative
    int p = 1;
    std::vector<Rational> main;  // twists attached to cchi
    std::vector<Rational> inv;   // twists attached to its inverse
};

std::vector<ExponentClass> group_by_class(const DualPoint& pt) {
    std::map<std::pair<UnitaryChar, int>, ExponentClass> classes;
    for (const auto& phi : pt.phis) {
        if (!(Rational(0) < phi.e))
            throw std::invalid_argument("check_dual_conditions: phi exponent must be positive");
        UnitaryChar cc = phi.chi.canonical();
        auto& cls = classes[{cc, phi.p}];
        cls.cchi = cc;
        cls.p = phi.p;
        if (phi.chi == cc)
            cls.main.push_back(phi.e);
        else
            cls.inv.push_back(phi.e);
    }
    std::vector<ExponentClass> out;
    out.reserve(classes.size());
    for (auto& [key, cls] : classes) {
        std::sort(cls.main.begin(), cls.main.end());
        std::sort(cls.inv.begin(), cls.inv.end());
        out.push_back(std::move(cls));
    }
    return out;
}

}  // namespace

DualVerdict check_dual_conditions(const DualPoint& pt) {
    const Rational half(1, 2), one(1);
    auto classes = group_by_class(pt);

    // (1): for an inverse pair the two exponent multisets agree.
    for (const auto& c : classes)
        if (!c.cchi.self_dual() && c.main != c.inv) return {false, DualReject::C1};

    // (2): rigid classes stay below 1/2.
    for (const auto& c : classes) {
        if (c.cchi.self_dual() && !reduces_at_half(c.p)) continue;
        for (const auto& e : c.main)
            if (!(e < half)) return {false, DualReject::C2};
        for (const auto& e : c.inv)
            if (!(e < half)) return {false, DualReject::C2};
    }

    // (3): self-dual classes of odd rank.
    for (const auto& c : classes) {
        if (!(c.cchi.self_dual() && !reduces_at_half(c.p))) continue;
        for (const auto& e : c.main)
            if (!(e < one)) return {false, DualReject::C3Range};
    }
    auto deformable = [&](const ExponentClass& c) {
        return c.cchi.self_dual() && !reduces_at_half(c.p);
    };
    // Split into alphas (<= 1/2) and betas (> 1/2), both ascending.
    auto split = [&](const ExponentClass& c) {
        std::pair<std::vector<Rational>, std::vector<Rational>> ab;
        for (const auto& e : c.main)
            (e <= half ? ab.first : ab.second).push_back(e);
        return ab;
    };
    for (const auto& c : classes) {
        if (!deformable(c)) continue;
        auto [alphas, betas] = split(c);
        for (std::size_t j = 1; j < betas.size(); ++j)
            if (betas[j - 1] == betas[j]) return {false, DualReject::C3Order};
    }
    for (const auto& c : classes) {
        if (!deformable(c)) continue;
        auto [alphas, betas] = split(c);
        for (const auto& a : alphas)
            for (const auto& b : betas)
                if (a + b == one) return {false, DualReject::C3a};
        if (alphas.size() > 1 && alphas[alphas.size() - 2] == half)
            return {false, DualReject::C3a};
    }
    for (const auto& c : classes) {
        if (!deformable(c)) continue;
        auto [alphas, betas] = split(c);
        if (betas.empty()) continue;
        int count = 0;
        for (const auto& a : alphas)
            if (a > one - betas[0]) ++count;
        if (count % 2 != 0) return {false, DualReject::C3b};
    }
    for (const auto& c : classes) {
        if (!deformable(c)) continue;
        auto [alphas, betas] = split(c);
        for (std::size_t j = 0; j + 1 < betas.size(); ++j) {
            int count = 0;
            for (const auto& a : alphas)
                if (one - betas[j] > a && a > one - betas[j + 1]) ++count;
            if (count % 2 != 1) return {false, DualReject::C3c};
        }
    }
    for (const auto& c : classes) {
        if (!deformable(c)) continue;
        auto [alphas, betas] = split(c);
        if (reduces_at_zero(GLChar{c.cchi, c.p, Rational(0)}, pt.neg) &&
            (alphas.size() + betas.size()) % 2 != 0)
            return {false, DualReject::C3d};
    }

    return {true, DualReject::None};
}

std::string psi_str(const PsiChar& c) {
    return "psi(" + c.chi.str() + ",n=" + std::to_string(c.n) + ")";
}

std::string phi_str(const GLChar& c) {
    return "phi(" + c.chi.str() + ",p=" + std::to_string(c.p) + ",e=" + c.e.str() + ")";
}

std::string neg_str(const NegativeRep& r) {
    NegativeRep c = r.canonical();
    std::string out;
    for (const auto& psi : c.psis) out += psi_str(psi) + " x ";
    out += jord_str(c.block);
    return out;
}

std::string point_str(const DualPoint& pt) {
    std::vector<GLChar> phis = pt.phis;
    std::sort(phis.begin(), phis.end());
    std::string out;
    for (const auto& phi : phis) out += phi_str(phi) + " x ";
    out += neg_str(pt.neg);
    return out;
}

}  // namespace spdual
