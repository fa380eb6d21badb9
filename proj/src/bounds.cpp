#include "spdual/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace spdual {

long long dual_dimension(GroupKind g, int q) {
    if (q < 0) throw std::invalid_argument("dual_dimension: negative rank");
    return g == GroupKind::Sp ? 2LL * q + 1 : 2LL * q;
}

Rational half_modulus_exponent(GroupKind g, int q) {
    return g == GroupKind::Sp ? Rational(q + 1) : Rational(2 * q + 1, 2);
}

ExpVector trivial_norm(GroupKind g, int q) {
    if (q < 1) throw std::invalid_argument("trivial_norm: rank must be positive");
    if (g == GroupKind::Sp) return interval_desc(Rational(1), Rational(q));
    return interval_desc(Rational(1, 2), Rational(2 * q - 1, 2));
}

Rational cuspidal_alpha_sq_bound(int p, GroupKind g, int q, bool integral) {
    if (p < 1) throw std::invalid_argument("cuspidal_alpha_sq_bound: rank must be positive");
    Rational base(dual_dimension(g, q), p);
    return integral ? base : base + Rational(1, 4);
}

// Largest m with m*m*mul <= cap, in plain integer arithmetic.
static long long isqrt_capped(long long cap, long long mul) {
    long long m = 0;
    while ((m + 1) * (m + 1) * mul <= cap) ++m;
    return m;
}

Rational c_parabolic(int p, GroupKind g, int q) {
    return c_parabolic(p, g, q, CFormula::Reconciled);
}

Rational c_parabolic(int denom, GroupKind g, int q, CFormula formula) {
    if (denom < 1) throw std::invalid_argument("c_parabolic: denominator must be positive");
    if (q < 0) throw std::invalid_argument("c_parabolic: negative rank");
    switch (formula) {
        case CFormula::Reconciled:
        case CFormula::Multiplicity: {
            // (m/2)^2 <= q*/denom + 1/4  <=>  m^2 * denom <= 4 q* + denom
            long long cap = 4 * dual_dimension(g, q) + denom;
            return Rational(isqrt_capped(cap, denom), 2);
        }
        case CFormula::IntroSqrt: {
            // m/2 <= sqrt(2q/(denom+1))  <=>  m^2 (denom+1) <= 8q
            long long cap = 8LL * q;
            return Rational(isqrt_capped(cap, denom + 1), 2);
        }
    }
    throw std::invalid_argument("c_parabolic: unknown formula");
}

ExpVector parabolic_bound_vector(int p, int n, GroupKind g, int q) {
    return parabolic_bound_vector(p, n, g, q, CFormula::Reconciled);
}

ExpVector parabolic_bound_vector(int p, int n, GroupKind g, int q, CFormula formula) {
    if (n < 1) throw std::invalid_argument("parabolic_bound_vector: multiplicity must be positive");
    Rational c = c_parabolic(p, g, q, formula);
    return interval_desc(c, c + Rational(n - 1));
}

ExpVector bernstein_bound_vector(int jord_card, int n) {
    if (jord_card < 0 || n < 1)
        throw std::invalid_argument("bernstein_bound_vector: bad arguments");
    Rational c(1 + jord_card, 2);
    return interval_desc(c, c + Rational(n - 1));
}

ExpVector nonselfdual_bound_vector(int n) {
    if (n < 1) throw std::invalid_argument("nonselfdual_bound_vector: rank must be positive");
    ExpVector out;
    out.reserve(n);
    for (int k = n; k >= 1; --k) out.push_back(Rational(k, 2));
    return out;
}

bool filter_nonselfdual(const ExponentClassData& data) {
    ExpVector exps = data.abs_exponents;
    std::sort(exps.begin(), exps.end());
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (!(exps[i] <= Rational(static_cast<long long>(i) + 1, 2))) return false;
    return true;
}

bool filter_selfdual(const ExponentClassData& data) {
    if (!data.alpha_cusp)
        throw std::invalid_argument("filter_selfdual: reducibility point required");
    const Rational alpha = *data.alpha_cusp;
    if (alpha < Rational(0) || !alpha.is_half_integer())
        throw std::invalid_argument("filter_selfdual: reducibility point must be a non-negative half integer");

    ExpVector exps = data.abs_exponents;
    std::sort(exps.begin(), exps.end());
    if (exps.empty()) return true;

    // Distinct values strictly above alpha.
    ExpVector tops;
    for (const auto& x : exps)
        if (alpha < x && (tops.empty() || tops.back() != x)) tops.push_back(x);

    for (std::size_t i = 1; i < tops.size(); ++i)
        if (!(tops[i] - tops[i - 1] <= Rational(1))) return false;

    bool has_anchor = !exps.empty() && exps.front() <= alpha;
    if (has_anchor) {
        Rational anchor(0);
        for (const auto& x : exps)
            if (x <= alpha) anchor = x;
        if (!tops.empty() && !(tops.front() - anchor <= Rational(1))) return false;
        for (std::size_t i = 0; i < tops.size(); ++i)
            if (!(tops[i] <= anchor + Rational(static_cast<long long>(i) + 1))) return false;
        return true;
    }
    if (alpha >= Rational(1, 2)) return false;  // some exponent must sit at or below alpha
    for (std::size_t i = 0; i < tops.size(); ++i)
        if (!(tops[i] <= Rational(2 * static_cast<long long>(i) + 1, 2))) return false;
    return true;
}

bool sn_bound_check(const ExpVector& norm, int q, bool is_trivial) {
    if (static_cast<int>(norm.size()) != q)
        throw std::invalid_argument("sn_bound_check: norm length must equal the rank");
    if (!leq_s(norm, interval_desc(Rational(1), Rational(q)))) return false;
    if (!is_trivial && !leq_s(norm, interval_desc(Rational(0), Rational(q - 1)))) return false;
    return true;
}

bool neg_bound_check(const ExpVector& norm, int q) {
    if (static_cast<int>(norm.size()) != q || q < 2)
        throw std::invalid_argument("neg_bound_check: need a descending norm of length q >= 2");
    if (leq_s(norm, interval_desc(Rational(0), Rational(q - 1)))) return true;
    ExpVector alt = concat(interval_desc(Rational(1), Rational(q - 2)),
                           {Rational(1, 2), Rational(1, 2)});
    return leq_s(norm, alt);
}

bool nonneg_unitary_bound_check(const ExpVector& norm, int q) {
    if (static_cast<int>(norm.size()) != q || q < 2)
        throw std::invalid_argument("nonneg_unitary_bound_check: need a descending norm of length q >= 2");
    ExpVector bound = sort_desc(concat(interval_desc(Rational(1), Rational(q - 1)), {Rational(1, 2)}));
    if (!leq_s(norm, bound)) return false;
    return vec_sum(norm) <= Rational(static_cast<long long>(q) * (q - 1), 2);
}

}  // namespace spdual
