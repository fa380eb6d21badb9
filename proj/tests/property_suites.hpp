// Randomized property suites shared by the unit tests and the acceptance
// runner. Each suite returns its failure count; seeds are fixed so runs are
// reproducible.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spdual/verifier.hpp"

namespace props {

using namespace spdual;

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int below(int n) { return n <= 0 ? 0 : static_cast<int>(next() % static_cast<unsigned>(n)); }
};

inline Rational half_int(Rng& rng, int lo = -16, int hi = 16) {
    return Rational(lo + rng.below(hi - lo + 1), 2);
}

inline ExpVector random_vec(Rng& rng, int len) {
    ExpVector v;
    for (int i = 0; i < len; ++i) v.push_back(half_int(rng));
    return v;
}

inline UnitaryChar random_char(Rng& rng) {
    int den = 1 + rng.below(8);
    return UnitaryChar::make(rng.below(den + 1), den);
}

inline NegativeRep random_neg(Rng& rng, int max_rank) {
    int m = rng.below(max_rank + 1);
    int msn = rng.below(m + 1);
    auto blocks = enumerate_jord_sn(msn);
    JordSn J = blocks[rng.below(static_cast<int>(blocks.size()))];
    std::vector<PsiChar> psis;
    int rest = m - msn;
    while (rest > 0) {
        int n = 1 + rng.below(rest);
        psis.push_back({random_char(rng), n});
        rest -= n;
    }
    return NegativeRep{psis, J};
}

inline DualPoint random_point(Rng& rng, int max_rank) {
    int q = 1 + rng.below(max_rank);
    int m = rng.below(q + 1);
    NegativeRep neg = random_neg(rng, m);
    // pad the negative part up to rank m exactly
    while (neg.total_rank() < m) neg.psis.push_back({random_char(rng), 1});
    std::vector<GLChar> phis;
    int rest = q - neg.total_rank();
    while (rest > 0) {
        int p = 1 + rng.below(rest);
        phis.push_back({random_char(rng), p, Rational(1 + rng.below(11), 8)});
        rest -= p;
    }
    return DualPoint{phis, neg};
}

// x descending and x >=_s y entrywise implies x >=_s sorted(y).
inline int lemma_ineq_i(int iters, std::uint64_t seed) {
    Rng rng(seed);
    int failures = 0;
    for (int it = 0; it < iters; ++it) {
        int len = rng.below(9);
        ExpVector x = sort_desc(random_vec(rng, len));
        ExpVector y;
        for (const auto& xi : x) y.push_back(xi - Rational(rng.below(7), 2));
        if (!leq_s(sort_desc(y), x)) ++failures;
    }
    return failures;
}

// componentwise domination of descending blocks survives merging and sorting
inline int lemma_ineq_ii(int iters, std::uint64_t seed) {
    Rng rng(seed);
    int failures = 0;
    for (int it = 0; it < iters; ++it) {
        int lq = rng.below(7), lp = rng.below(7);
        ExpVector x = sort_desc(random_vec(rng, lq));
        ExpVector y = sort_desc(random_vec(rng, lp));
        ExpVector xs, ys;
        for (const auto& v : x) xs.push_back(v - Rational(rng.below(5), 2));
        for (const auto& v : y) ys.push_back(v - Rational(rng.below(5), 2));
        xs = sort_desc(xs);
        ys = sort_desc(ys);
        if (!leq_s(xs, x) || !leq_s(ys, y)) continue;  // sorting can only help, but be safe
        if (!leq_s(sort_desc(concat(xs, ys)), sort_desc(concat(x, y)))) ++failures;
    }
    return failures;
}

inline int s_implies_w(int iters, std::uint64_t seed) {
    Rng rng(seed);
    int failures = 0;
    for (int it = 0; it < iters; ++it) {
        int len = rng.below(9);
        ExpVector y = random_vec(rng, len);
        ExpVector x;
        for (const auto& v : y) x.push_back(v - Rational(rng.below(7), 2));
        if (!(leq_s(x, y) && leq_w(x, y))) ++failures;
    }
    return failures;
}

inline int leqw_sorted(int iters, std::uint64_t seed) {
    Rng rng(seed);
    int failures = 0;
    for (int it = 0; it < iters; ++it) {
        ExpVector x = random_vec(rng, rng.below(9));
        if (!leq_w(x, sort_desc(x))) ++failures;
        if (!leq_w(x, abs_vec(x)) || !leq_s(x, abs_vec(x))) ++failures;
    }
    return failures;
}

inline int sort_idempotent(int iters, std::uint64_t seed) {
    Rng rng(seed);
    int failures = 0;
    for (int it = 0; it < iters; ++it) {
        ExpVector x = random_vec(rng, rng.below(9));
        if (sort_desc(sort_desc(x)) != sort_desc(x)) ++failures;
    }
    return failures;
}

inline int additivity(int iters, std::uint64_t seed) {
    Rng rng(seed);
    int failures = 0;
    for (int it = 0; it < iters; ++it) {
        int len = rng.below(8);
        ExpVector y = random_vec(rng, len), yp = random_vec(rng, len);
        ExpVector x, xp;
        for (const auto& v : y) x.push_back(v - Rational(rng.below(5), 2));
        for (const auto& v : yp) xp.push_back(v - Rational(rng.below(5), 2));
        ExpVector xsum, ysum;
        for (int i = 0; i < len; ++i) {
            xsum.push_back(x[i] + xp[i]);
            ysum.push_back(y[i] + yp[i]);
        }
        if (!(leq_s(xsum, ysum) && leq_w(xsum, ysum))) ++failures;
    }
    return failures;
}

inline int canonical_idempotent(int iters, std::uint64_t seed) {
    Rng rng(seed);
    int failures = 0;
    for (int it = 0; it < iters; ++it) {
        NegativeRep rep = random_neg(rng, 5);
        if (rep.canonical().canonical() != rep.canonical()) ++failures;
    }
    return failures;
}

inline int char_inversion(int iters, std::uint64_t seed) {
    Rng rng(seed);
    int failures = 0;
    for (int it = 0; it < iters; ++it) {
        // flipping one psi character is invisible after canonicalization
        NegativeRep rep = random_neg(rng, 5);
        if (!rep.psis.empty()) {
            NegativeRep flipped = rep;
            auto& psi = flipped.psis[rng.below(static_cast<int>(flipped.psis.size()))];
            psi.chi = psi.chi.inverse();
            if (flipped.canonical() != rep.canonical()) ++failures;
            if (negative_norm(flipped) != negative_norm(rep)) ++failures;
        }

        // inverting every character preserves the verdict and the norm
        DualPoint pt = random_point(rng, 4);
        DualPoint inv = pt;
        for (auto& phi : inv.phis) phi.chi = phi.chi.inverse();
        for (auto& psi : inv.neg.psis) psi.chi = psi.chi.inverse();
        auto va = check_dual_conditions(pt);
        auto vb = check_dual_conditions(inv);
        if (va.accepted != vb.accepted || va.reason != vb.reason) ++failures;
        if (dual_point_norm(pt) != dual_point_norm(inv)) ++failures;

        // flipping a single phi character never changes the norm
        if (!pt.phis.empty()) {
            DualPoint one = pt;
            auto& phi = one.phis[rng.below(static_cast<int>(one.phis.size()))];
            phi.chi = phi.chi.inverse();
            if (dual_point_norm(one) != dual_point_norm(pt)) ++failures;
        }
    }
    return failures;
}

inline int accepted_exponents_below_one(int iters, std::uint64_t seed) {
    Rng rng(seed);
    int failures = 0;
    for (int it = 0; it < iters; ++it) {
        DualPoint pt = random_point(rng, 4);
        if (!check_dual_conditions(pt).accepted) continue;
        for (const auto& phi : pt.phis)
            if (!(phi.e < Rational(1))) ++failures;
    }
    return failures;
}

struct Suite {
    const char* name;
    int (*run)(int, std::uint64_t);
};

inline const std::vector<Suite>& all_suites() {
    static const std::vector<Suite> suites = {
        {"lemma-ineq-i", lemma_ineq_i},
        {"lemma-ineq-ii", lemma_ineq_ii},
        {"s-implies-w", s_implies_w},
        {"leqw-sorted-and-abs", leqw_sorted},
        {"sort-idempotent", sort_idempotent},
        {"additivity", additivity},
        {"canonical-idempotent", canonical_idempotent},
        {"char-inversion", char_inversion},
        {"accepted-exponents-below-one", accepted_exponents_below_one},
    };
    return suites;
}

}  // namespace props
