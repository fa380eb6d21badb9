#include "spdual/verifier.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace spdual {

GridSpec make_grid(int denominator, int max_rank, std::vector<UnitaryChar> characters) {
    if (denominator < 2) throw std::invalid_argument("make_grid: denominator must be at least 2");
    if (max_rank < 0) throw std::invalid_argument("make_grid: negative rank cap");
    characters.push_back(UnitaryChar::make(0, 1));
    characters.push_back(UnitaryChar::make(1, 2));
    std::size_t given = characters.size();
    for (std::size_t i = 0; i < given; ++i) characters.push_back(characters[i].inverse());
    std::sort(characters.begin(), characters.end());
    characters.erase(std::unique(characters.begin(), characters.end()), characters.end());
    return GridSpec{denominator, max_rank, std::move(characters)};
}

GridSpec default_grid() { return make_grid(8, 4, {UnitaryChar::make(1, 4)}); }

std::vector<UnitaryChar> canonical_characters(const GridSpec& grid) {
    std::vector<UnitaryChar> out;
    for (const auto& chi : grid.characters)
        if (chi.canonical() == chi) out.push_back(chi);
    return out;
}

Rational class_alpha_cusp(SelfDualChar chi) {
    return chi == SelfDualChar::Trivial ? Rational(1) : Rational(0);
}

bool is_trivial_point(const DualPoint& pt) {
    return pt.phis.empty() && pt.neg.psis.empty() && is_trivial_block(pt.neg.block);
}

std::vector<std::pair<JordSn, ExpVector>> enumerate_strongly_negative(int q) {
    std::vector<std::pair<JordSn, ExpVector>> out;
    for (auto& J : enumerate_jord_sn(q)) {
        ExpVector norm = sigma_norm(J);
        out.emplace_back(std::move(J), std::move(norm));
    }
    return out;
}

namespace {

// Multisets of (character, rank) pairs with prescribed total rank, emitted as
// non-decreasing index sequences over the item alphabet.
void extend_psis(const std::vector<PsiChar>& items, std::size_t start, int remaining,
                 std::vector<PsiChar>& cur, const JordSn& block,
                 std::vector<std::pair<NegativeRep, ExpVector>>& out) {
    if (remaining == 0) {
        NegativeRep rep{cur, block};
        out.emplace_back(rep, negative_norm(rep));
        return;
    }
    for (std::size_t i = start; i < items.size(); ++i) {
        if (items[i].n > remaining) continue;
        cur.push_back(items[i]);
        extend_psis(items, i, remaining - items[i].n, cur, block, out);
        cur.pop_back();
    }
}

// Item order matches PsiChar ordering so non-decreasing index sequences come
// out canonically sorted.
std::vector<PsiChar> make_psi_items(int max_rank, const GridSpec& grid) {
    std::vector<PsiChar> items;
    for (const auto& chi : canonical_characters(grid))
        for (int n = 1; n <= max_rank; ++n) items.push_back({chi, n});
    return items;
}

}  // namespace

std::vector<std::pair<NegativeRep, ExpVector>> enumerate_negative(int q, const GridSpec& grid) {
    if (q < 0) throw std::invalid_argument("enumerate_negative: negative rank");
    std::vector<std::pair<NegativeRep, ExpVector>> out;
    auto items = make_psi_items(q, grid);
    for (int msn = q; msn >= 0; --msn) {
        for (const auto& J : enumerate_jord_sn(msn)) {
            std::vector<PsiChar> cur;
            extend_psis(items, 0, q - msn, cur, J, out);
        }
    }
    return out;
}

DualScan::DualScan(int q, GridSpec grid) : q_(q), grid_(std::move(grid)) {
    if (q < 1) throw std::invalid_argument("DualScan: rank must be positive");

    // Phi alphabet: grid exponents strictly between 0 and 1. Rigid classes
    // (non-self-dual character, or even rank) only ever accept exponents
    // below 1/2, so the upper half of their grid is skipped; this drops no
    // accepted point.
    const Rational half(1, 2);
    for (int p = 1; p <= q; ++p) {
        for (const auto& chi : grid_.characters) {
            bool rigid = !chi.self_dual() || reduces_at_half(p);
            for (int k = 1; k < grid_.denominator; ++k) {
                Rational e(k, grid_.denominator);
                if (rigid && !(e < half)) continue;
                items_.push_back(GLChar{chi, p, e});
            }
        }
    }
    std::sort(items_.begin(), items_.end(), [](const GLChar& a, const GLChar& b) {
        if (a.p != b.p) return a.p < b.p;
        if (a.chi != b.chi) return a.chi < b.chi;
        return a.e < b.e;
    });

    for (int m = 0; m <= q; ++m)
        for (auto& [rep, norm] : enumerate_negative(m, grid_)) negs_.push_back(rep);

    for (std::size_t ni = 0; ni < negs_.size(); ++ni) {
        int r = q_ - negs_[ni].total_rank();
        if (r == 0) {
            tasks_.push_back({ni, 0, -1});
            continue;
        }
        for (std::size_t i = 0; i < items_.size(); ++i) {
            if (items_[i].p > r) break;
            tasks_.push_back({ni, r, static_cast<long long>(i)});
        }
    }
}

std::size_t DualScan::bucket_count(ExecMode mode) const {
    return mode == ExecMode::Parallel ? tasks_.size() : 1;
}

void DualScan::extend(std::size_t start, int remaining, std::vector<GLChar>& cur,
                      const NegativeRep& neg, std::size_t bucket,
                      const std::function<void(const DualPoint&, std::size_t)>& fn) const {
    if (remaining == 0) {
        DualPoint pt{cur, neg};
        if (check_dual_conditions(pt).accepted) fn(pt, bucket);
        return;
    }
    for (std::size_t i = start; i < items_.size(); ++i) {
        if (items_[i].p > remaining) break;
        cur.push_back(items_[i]);
        extend(i, remaining - items_[i].p, cur, neg, bucket, fn);
        cur.pop_back();
    }
}

void DualScan::run_task(const Task& task, std::size_t bucket,
                        const std::function<void(const DualPoint&, std::size_t)>& fn) const {
    const NegativeRep& neg = negs_[task.neg_index];
    if (task.first_item < 0) {
        DualPoint pt{{}, neg};
        if (check_dual_conditions(pt).accepted) fn(pt, bucket);
        return;
    }
    const GLChar& first = items_[static_cast<std::size_t>(task.first_item)];
    std::vector<GLChar> cur{first};
    extend(static_cast<std::size_t>(task.first_item), task.remaining - first.p, cur, neg, bucket, fn);
}

void DualScan::run(ExecMode mode,
                   const std::function<void(const DualPoint&, std::size_t)>& fn) const {
    if (mode == ExecMode::Serial) {
        // Reference path: one plain recursion per negative configuration.
        std::vector<GLChar> cur;
        for (const auto& neg : negs_) {
            int r = q_ - neg.total_rank();
            if (r == 0) {
                DualPoint pt{{}, neg};
                if (check_dual_conditions(pt).accepted) fn(pt, 0);
                continue;
            }
            cur.clear();
            extend(0, r, cur, neg, 0, fn);
        }
        return;
    }
    long long n = static_cast<long long>(tasks_.size());
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < n; ++i)
        run_task(tasks_[static_cast<std::size_t>(i)], static_cast<std::size_t>(i), fn);
}

std::vector<DualPoint> enumerate_dual_points(int q, const GridSpec& grid) {
    std::vector<DualPoint> out;
    DualScan scan(q, grid);
    scan.run(ExecMode::Serial, [&](const DualPoint& pt, std::size_t) { out.push_back(pt); });
    return out;
}

namespace {

template <typename Chunk, typename Work>
std::vector<Chunk> scan_in_chunks(const DualScan& scan, ExecMode mode, Work&& work) {
    std::vector<Chunk> chunks(scan.bucket_count(mode));
    scan.run(mode, [&](const DualPoint& pt, std::size_t b) { work(pt, chunks[b]); });
    return chunks;
}

struct BasicChunk {
    long long checked = 0;
    std::vector<Violation> violations;
    std::vector<std::string> equality;
};

Report merge_basic(std::string theorem, int q, const GridSpec& grid,
                   std::vector<BasicChunk> chunks) {
    Report rep;
    rep.theorem = std::move(theorem);
    rep.q = q;
    rep.grid = grid;
    for (auto& c : chunks) {
        rep.points_checked += c.checked;
        for (auto& v : c.violations) rep.violations.push_back(std::move(v));
        for (auto& e : c.equality) rep.equality_witnesses.push_back(std::move(e));
    }
    return rep;
}

}  // namespace

Report verify_bound_by_trivial(int q, const GridSpec& grid, ExecMode mode) {
    if (q < 1) throw std::invalid_argument("verify_bound_by_trivial: q must be at least 1");
    const ExpVector bound = trivial_norm(GroupKind::Sp, q);
    const std::string bound_str = vec_str(bound);
    DualScan scan(q, grid);
    auto chunks = scan_in_chunks<BasicChunk>(scan, mode, [&](const DualPoint& pt, BasicChunk& c) {
        ++c.checked;
        ExpVector norm = dual_point_norm(pt);
        if (!leq_s(norm, bound))
            c.violations.push_back({point_str(pt), vec_str(norm), bound_str, "leq_s"});
        else if (norm == bound)
            c.equality.push_back(point_str(pt));
    });
    return merge_basic("bound-by-trivial", q, grid, std::move(chunks));
}

Report verify_isolation(int q, const GridSpec& grid, ExecMode mode) {
    if (q < 2) throw std::invalid_argument("verify_isolation: q must be at least 2");
    const ExpVector wbound = interval_desc(Rational(0), Rational(q - 1));
    const ExpVector sbound = concat(interval_desc(Rational(1), Rational(q - 1)), {Rational(1, 2)});
    const std::string wbound_str = vec_str(wbound);
    const std::string sbound_str = vec_str(sbound);

    struct Chunk : BasicChunk {
        bool all_strict = true;
    };
    DualScan scan(q, grid);
    auto chunks = scan_in_chunks<Chunk>(scan, mode, [&](const DualPoint& pt, Chunk& c) {
        if (is_trivial_point(pt)) return;
        ++c.checked;
        ExpVector norm = dual_point_norm(pt);
        if (!leq_w(norm, wbound))
            c.violations.push_back({point_str(pt), vec_str(norm), wbound_str, "leq_w"});
        if (!leq_s(norm, sbound))
            c.violations.push_back({point_str(pt), vec_str(norm), sbound_str, "leq_s"});
        if (norm == sbound) c.equality.push_back(point_str(pt));
        if (!lt_s_all(norm, sbound)) c.all_strict = false;
    });
    bool all_strict = true;
    for (const auto& c : chunks) all_strict = all_strict && c.all_strict;
    std::vector<BasicChunk> base;
    base.reserve(chunks.size());
    for (auto& c : chunks) base.push_back(std::move(c));
    Report rep = merge_basic("isolation", q, grid, std::move(base));
    rep.all_coordinates_strict = all_strict;
    return rep;
}

Report verify_section5(int q, const GridSpec& grid, ExecMode mode) {
    if (q < 2) throw std::invalid_argument("verify_section5: q must be at least 2");
    Report rep;
    rep.theorem = "section5";
    rep.q = q;
    rep.grid = grid;

    const ExpVector sn_equality_bound = interval_desc(Rational(1), Rational(q));
    const std::string sn_bounds =
        vec_str(sn_equality_bound) + "/" + vec_str(interval_desc(Rational(0), Rational(q - 1)));
    for (const auto& [J, norm] : enumerate_strongly_negative(q)) {
        ++rep.points_checked;
        if (!sn_bound_check(norm, q, is_trivial_block(J)))
            rep.violations.push_back({jord_str(J), vec_str(norm), sn_bounds, "sn:leq_s"});
        if (norm == sn_equality_bound) rep.equality_witnesses.push_back(jord_str(J));
    }

    const std::string neg_bounds =
        vec_str(interval_desc(Rational(0), Rational(q - 1))) + "|" +
        vec_str(concat(interval_desc(Rational(1), Rational(q - 2)), {Rational(1, 2), Rational(1, 2)}));
    for (const auto& [repn, norm] : enumerate_negative(q, grid)) {
        if (repn.psis.empty()) continue;  // strongly negative handled above
        ++rep.points_checked;
        if (!neg_bound_check(norm, q))
            rep.violations.push_back({neg_str(repn), vec_str(norm), neg_bounds, "neg:leq_s"});
    }

    const ExpVector nn_bound =
        sort_desc(concat(interval_desc(Rational(1), Rational(q - 1)), {Rational(1, 2)}));
    const Rational cap(static_cast<long long>(q) * (q - 1), 2);
    const std::string nn_bound_str = vec_str(nn_bound);
    const std::string cap_str = cap.str();
    DualScan scan(q, grid);
    auto chunks = scan_in_chunks<BasicChunk>(scan, mode, [&](const DualPoint& pt, BasicChunk& c) {
        if (pt.phis.empty()) return;  // negative points handled above
        ++c.checked;
        ExpVector norm = dual_point_norm(pt);
        if (!leq_s(norm, nn_bound))
            c.violations.push_back({point_str(pt), vec_str(norm), nn_bound_str, "nonneg:leq_s"});
        else if (!(vec_sum(norm) <= cap))
            c.violations.push_back({point_str(pt), vec_str(norm), cap_str, "nonneg:sum"});
    });
    Report tail = merge_basic("section5", q, grid, std::move(chunks));
    rep.points_checked += tail.points_checked;
    for (auto& v : tail.violations) rep.violations.push_back(std::move(v));
    return rep;
}

namespace {

// Absolute support exponents of one point grouped by the character carrying
// them, as stored in the classification data.
std::map<UnitaryChar, ExpVector> support_classes(const DualPoint& pt) {
    std::map<UnitaryChar, ExpVector> classes;
    for (const auto& phi : pt.phis)
        for (const auto& x : phi.support_exponents()) classes[phi.chi].push_back(x.abs());
    for (const auto& psi : pt.neg.psis) {
        Rational half_span(psi.n - 1, 2);
        for (const auto& x : segment_exponents(-half_span, half_span))
            classes[psi.chi.canonical()].push_back(x.abs());
    }
    for (SelfDualChar label : {SelfDualChar::Trivial, SelfDualChar::Sign}) {
        ExpVector exps = sigma_char_exponents(pt.neg.block, label);
        if (exps.empty()) continue;
        UnitaryChar chi =
            label == SelfDualChar::Trivial ? UnitaryChar::make(0, 1) : UnitaryChar::make(1, 2);
        for (const auto& x : exps) classes[chi].push_back(x);
    }
    return classes;
}

}  // namespace

Report verify_filters_consistency(int q, const GridSpec& grid, ExecMode mode) {
    if (q < 1) throw std::invalid_argument("verify_filters_consistency: q must be at least 1");
    DualScan scan(q, grid);
    auto chunks = scan_in_chunks<BasicChunk>(scan, mode, [&](const DualPoint& pt, BasicChunk& c) {
        ++c.checked;
        for (const auto& [chi, exps] : support_classes(pt)) {
            bool ok;
            std::string which;
            if (chi.self_dual()) {
                Rational alpha = class_alpha_cusp(self_dual_label(chi));
                ok = filter_selfdual({exps, alpha});
                which = "filter:selfdual(alpha=" + alpha.str() + ")";
            } else {
                ok = filter_nonselfdual({exps, std::nullopt});
                which = "filter:nonselfdual";
            }
            if (!ok)
                c.violations.push_back({point_str(pt),
                                        "chi=" + chi.str() + ":" + vec_str(sort_desc(exps)),
                                        "bounds-general", which});
        }
    });
    return merge_basic("filters-consistency", q, grid, std::move(chunks));
}

Report extremal_norm_sum(int q, const GridSpec& grid, ExecMode mode) {
    if (q < 2) throw std::invalid_argument("extremal_norm_sum: q must be at least 2");
    struct Chunk {
        long long checked = 0;
        bool seen = false;
        Rational best;
        std::string witness;
    };
    DualScan scan(q, grid);
    auto chunks = scan_in_chunks<Chunk>(scan, mode, [&](const DualPoint& pt, Chunk& c) {
        if (is_trivial_point(pt)) return;
        ++c.checked;
        Rational s = vec_sum(dual_point_norm(pt));
        if (!c.seen || c.best < s) {
            c.seen = true;
            c.best = s;
            c.witness = point_str(pt);
        }
    });
    Report rep;
    rep.theorem = "extremal-norm-sum";
    rep.q = q;
    rep.grid = grid;
    rep.norm_sum_cap = Rational(static_cast<long long>(q) * (q - 1), 2);
    bool seen = false;
    Rational best;
    std::string witness;
    for (const auto& c : chunks) {
        rep.points_checked += c.checked;
        if (c.seen && (!seen || best < c.best)) {
            seen = true;
            best = c.best;
            witness = c.witness;
        }
    }
    if (seen) {
        rep.max_norm_sum = best;
        rep.equality_witnesses.push_back(witness);
        if (!(best <= *rep.norm_sum_cap))
            rep.violations.push_back({witness, best.str(), rep.norm_sum_cap->str(), "sum"});
    }
    return rep;
}

}  // namespace spdual
