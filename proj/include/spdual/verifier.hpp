#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spdual/bounds.hpp"
#include "spdual/spectrum.hpp"

namespace spdual {

// Discretization of the continuous deformation parameters: phi exponents are
// drawn from (0,1) on the 1/denominator grid, characters from a finite set
// that is closed under inversion and contains both self-dual characters.
struct GridSpec {
    int denominator = 8;
    int max_rank = 4;
    std::vector<UnitaryChar> characters;
};

GridSpec default_grid();

// Normalizes: adds both self-dual characters, closes under inversion, sorts.
// Throws when denominator < 2.
GridSpec make_grid(int denominator, int max_rank, std::vector<UnitaryChar> characters);

// Characters of the grid with angle <= 1/2, the representatives used for the
// negative layer.
std::vector<UnitaryChar> canonical_characters(const GridSpec& grid);

enum class ExecMode { Serial, Parallel };

struct Violation {
    std::string point;
    std::string norm;
    std::string bound;
    std::string ordering;
};

struct Report {
    std::string theorem;
    int q = 0;
    GridSpec grid;
    long long points_checked = 0;
    std::vector<Violation> violations;
    std::vector<std::string> equality_witnesses;
    // isolation only: every non-trivial point sat strictly below the bound in
    // all coordinates
    std::optional<bool> all_coordinates_strict;
    // extremal scan only
    std::optional<Rational> max_norm_sum;
    std::optional<Rational> norm_sum_cap;

    bool passed() const { return violations.empty(); }
};

// Reducibility point of nu^a chi x 1_{Sp(0)} for the self-dual characters:
// 1 for the trivial character, 0 for sign.
Rational class_alpha_cusp(SelfDualChar chi);

bool is_trivial_point(const DualPoint& pt);

std::vector<std::pair<JordSn, ExpVector>> enumerate_strongly_negative(int q);

// Every canonical negative representation of rank q whose characters come
// from the grid, with norms attached. Strongly negative entries come first
// within each block rank, larger strongly negative rank first.
std::vector<std::pair<NegativeRep, ExpVector>> enumerate_negative(int q, const GridSpec& grid);

// Streams every accepted dual point of rank q in a fixed canonical order.
// The parallel path splits the stream into buckets whose concatenation in
// bucket order reproduces the serial order exactly; the callback receives
// the bucket index, and distinct buckets are never touched concurrently.
class DualScan {
public:
    DualScan(int q, GridSpec grid);

    std::size_t bucket_count(ExecMode mode) const;
    void run(ExecMode mode, const std::function<void(const DualPoint&, std::size_t)>& fn) const;

    int rank() const { return q_; }
    const GridSpec& grid() const { return grid_; }

private:
    struct Task {
        std::size_t neg_index;
        int remaining;
        long long first_item;  // -1 marks the bare negative point
    };

    void run_task(const Task& task, std::size_t bucket,
                  const std::function<void(const DualPoint&, std::size_t)>& fn) const;
    void extend(std::size_t start, int remaining, std::vector<GLChar>& cur,
                const NegativeRep& neg, std::size_t bucket,
                const std::function<void(const DualPoint&, std::size_t)>& fn) const;

    int q_ = 0;
    GridSpec grid_;
    std::vector<NegativeRep> negs_;
    std::vector<GLChar> items_;
    std::vector<Task> tasks_;
};

// Serial collection of the accepted points, canonical order.
std::vector<DualPoint> enumerate_dual_points(int q, const GridSpec& grid);

Report verify_bound_by_trivial(int q, const GridSpec& grid, ExecMode mode);
Report verify_isolation(int q, const GridSpec& grid, ExecMode mode);
Report verify_section5(int q, const GridSpec& grid, ExecMode mode);
Report verify_filters_consistency(int q, const GridSpec& grid, ExecMode mode);
Report extremal_norm_sum(int q, const GridSpec& grid, ExecMode mode);

}  // namespace spdual
