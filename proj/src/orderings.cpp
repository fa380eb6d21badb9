#include "spdual/orderings.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace spdual {

ExpVector sort_desc(ExpVector x) {
    std::sort(x.begin(), x.end(), std::greater<Rational>());
    return x;
}

ExpVector abs_vec(const ExpVector& x) {
    ExpVector out;
    out.reserve(x.size());
    for (const auto& v : x) out.push_back(v.abs());
    return out;
}

ExpVector concat(const ExpVector& x, const ExpVector& y) {
    ExpVector out = x;
    out.insert(out.end(), y.begin(), y.end());
    return out;
}

static void require_same_length(const ExpVector& x, const ExpVector& y, const char* who) {
    if (x.size() != y.size())
        throw std::invalid_argument(std::string(who) + ": length mismatch (" +
                                    std::to_string(x.size()) + " vs " + std::to_string(y.size()) + ")");
}

bool leq_w(const ExpVector& x, const ExpVector& y) {
    require_same_length(x, y, "leq_w");
    Rational sx(0), sy(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx = sx + x[i];
        sy = sy + y[i];
        if (!(sx <= sy)) return false;
    }
    return true;
}

bool leq_s(const ExpVector& x, const ExpVector& y) {
    require_same_length(x, y, "leq_s");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!(x[i] <= y[i])) return false;
    return true;
}

bool lt_s_all(const ExpVector& x, const ExpVector& y) {
    require_same_length(x, y, "lt_s_all");
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!(x[i] < y[i])) return false;
    return true;
}

ExpVector interval_desc(const Rational& u, const Rational& v) {
    if (v < u) return {};
    Rational span = v - u;
    if (!span.is_integer())
        throw std::invalid_argument("interval_desc: span " + span.str() + " is not an integer");
    ExpVector out;
    long long n = span.num();
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (long long k = n; k >= 0; --k) out.push_back(u + Rational(k));
    return out;
}

ExpVector segment_exponents(const Rational& r1, const Rational& r2) {
    if (r2 < r1) return {};
    Rational span = r2 - r1;
    if (!span.is_integer())
        throw std::invalid_argument("segment_exponents: span " + span.str() + " is not an integer");
    ExpVector out;
    long long n = span.num();
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (long long k = 0; k <= n; ++k) out.push_back(r1 + Rational(k));
    return out;
}

Rational vec_sum(const ExpVector& x) {
    Rational s(0);
    for (const auto& v : x) s = s + v;
    return s;
}

std::string vec_str(const ExpVector& x) {
    std::string out = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out += ",";
        out += x[i].str();
    }
    out += ")";
    return out;
}

}  // namespace spdual
