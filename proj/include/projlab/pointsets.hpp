#pragma once

#include "projlab/core.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace projlab {

struct LatticePoint {
    std::int64_t u = 0;
    std::int64_t v = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Distinct points (u delta, v delta) of [0,1)^2, kept in lexicographic order.
class LatticePointSet {
public:
    LatticePointSet() = default;
    /// Validates the range and rejects duplicates; the input order is not kept.
    LatticePointSet(Scale scale, std::vector<LatticePoint> points,
                    std::optional<double> content_hint = std::nullopt);

    Scale scale() const noexcept { return scale_; }
    std::span<const LatticePoint> points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    std::optional<double> content_hint() const noexcept { return content_hint_; }

    friend bool operator==(const LatticePointSet&, const LatticePointSet&) = default;

private:
    Scale scale_;
    std::vector<LatticePoint> points_;
    std::optional<double> content_hint_;
};

LatticePointSet gen_segment(Scale scale);

/// Level-L four corners set: sums of c_i 4^-(i-1), c_i in {0, 3/4}^2. Needs n >= 2L.
LatticePointSet gen_four_corners(int level, Scale scale);

/// The grid-of-segments worst case: G = {k/m} x {l/(m n_g)} plus [0, h] segments.
struct GridExample {
    LatticePointSet set;
    std::int64_t m = 0;
    std::int64_t n_g = 0;
    int log2m = 0;
    int log2ng = 0;
    /// h / delta, which equals m under the integrality constraints.
    std::int64_t h_steps = 0;
    double h = 0;
};

/// Exponents of m and n_g for a triple; throws InvalidParameter naming the
/// failing integrality constraint.
struct GridExponents {
    int log2m;
    int log2ng;
    int log2h_steps;
};
GridExponents grid_exponents(const ParamTriple& params);

GridExample gen_grid_example(const ParamTriple& params);

struct FrostmanReport {
    double max_ratio = 0;
    /// Lower-left corner (unit coordinates) and side of the square achieving max_ratio.
    double witness_x = 0;
    double witness_y = 0;
    double witness_side = 0;
};

struct DeltaOneSet {
    LatticePointSet set;
    FrostmanReport report;
};

/// Greedy lexicographic extraction of a subset with |P cap Q| <= C0 * side(Q)/delta
/// on every dyadic square Q of side >= delta.
DeltaOneSet extract_delta_one_set(const LatticePointSet& input, double capacity_constant);

/// Maximum over dyadic squares of |P cap Q| * delta / side(Q).
FrostmanReport dyadic_frostman_report(const LatticePointSet& set);

}  // namespace projlab
