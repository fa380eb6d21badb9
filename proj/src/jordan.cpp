#include "spdual/jordan.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spdual {

bool jord_valid(const JordSn& J) {
    auto strictly_decreasing_odds = [](const std::vector<int>& p) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] < 1 || p[i] % 2 == 0) return false;
            if (i && p[i - 1] <= p[i]) return false;
        }
        return true;
    };
    if (J.q < 0) return false;
    if (!strictly_decreasing_odds(J.t) || !strictly_decreasing_odds(J.s)) return false;
    if (J.s.size() % 2 != 0) return false;
    long long total = std::accumulate(J.t.begin(), J.t.end(), 0LL) +
                      std::accumulate(J.s.begin(), J.s.end(), 0LL);
    return total == 2LL * J.q + 1;
}

// Partitions of `total` into strictly decreasing odd parts, each emitted with
// parts descending.
static void distinct_odd_partitions(int total, int max_part, std::vector<int>& cur,
                                    std::vector<std::vector<int>>& out) {
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    int start = std::min(max_part, total);
    if (start % 2 == 0) --start;
    for (int p = start; p >= 1; p -= 2) {
        cur.push_back(p);
        distinct_odd_partitions(total - p, p - 2, cur, out);
        cur.pop_back();
    }
}

static std::vector<std::vector<int>> odd_partitions_of(int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    if (total == 0) {
        out.push_back({});
        return out;
    }
    distinct_odd_partitions(total, total, cur, out);
    return out;
}

static bool lex_desc_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        std::greater<int>());
}

std::vector<JordSn> enumerate_jord_sn(int q) {
    if (q < 0) throw std::invalid_argument("enumerate_jord_sn: negative rank");
    std::vector<JordSn> out;
    int target = 2 * q + 1;
    for (int ts = 1; ts <= target; ts += 2) {
        auto tparts = odd_partitions_of(ts);
        auto sparts = odd_partitions_of(target - ts);
        for (const auto& t : tparts) {
            for (const auto& s : sparts) {
                if (s.size() % 2 != 0) continue;
                out.push_back(JordSn{t, s, q});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const JordSn& a, const JordSn& b) {
        if (a.t != b.t) return lex_desc_less(a.t, b.t);
        return lex_desc_less(a.s, b.s);
    });
    return out;
}

std::vector<int> adjoin_prime(const JordSn& J, SelfDualChar chi) {
    std::vector<int> out = (chi == SelfDualChar::Trivial) ? J.t : J.s;
    if (chi == SelfDualChar::Trivial) out.push_back(-1);
    std::sort(out.begin(), out.end(), std::greater<int>());
    return out;
}

ExpVector sigma_char_exponents(const JordSn& J, SelfDualChar chi) {
    ExpVector out;
    auto prime = adjoin_prime(J, chi);
    for (std::size_t i = 0; i + 1 < prime.size(); i += 2) {
        int a = prime[i];      // larger
        int b = prime[i + 1];  // smaller
        auto seg = segment_exponents(Rational(-(a - 1), 2), Rational(b - 1, 2));
        for (const auto& x : seg) out.push_back(x.abs());
    }
    return out;
}

ExpVector sigma_norm(const JordSn& J) {
    ExpVector out = sigma_char_exponents(J, SelfDualChar::Trivial);
    for (const auto& x : sigma_char_exponents(J, SelfDualChar::Sign)) out.push_back(x);
    return sort_desc(std::move(out));
}

bool is_trivial_block(const JordSn& J) {
    return J.s.empty() && J.t.size() == 1 && J.t[0] == 2 * J.q + 1;
}

bool jord_membership(const JordSn& J, SelfDualChar chi, int p) {
    const auto& parts = (chi == SelfDualChar::Trivial) ? J.t : J.s;
    return std::find(parts.begin(), parts.end(), p) != parts.end();
}

std::string jord_str(const JordSn& J) {
    auto list = [](const std::vector<int>& p) {
        std::string out = "[";
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(p[i]);
        }
        return out + "]";
    };
    return "sn(t=" + list(J.t) + ";s=" + list(J.s) + ")";
}

}  // namespace spdual
