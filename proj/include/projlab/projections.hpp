#pragma once

#include "projlab/core.hpp"
#include "projlab/pointsets.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace projlab {

/// Relative slack used when deciding whether a value lies inside a closed interval.
inline constexpr double kWidthTolerance = 1e-12;

/// <(u delta, v delta), e>
inline double projection_value(const LatticePoint& p, const Direction& e, double delta) {
    return static_cast<double>(p.u) * delta * e.cos() + static_cast<double>(p.v) * delta * e.sin();
}

/// Minimum number of closed intervals of length width covering the values.
/// Greedy from the left, which is optimal for equal-length intervals.
std::int64_t covering_number_1d(std::span<const double> values, double width);

/// Same as covering_number_1d but sorts `values` in place (already sorted or
/// reverse-sorted input is detected in linear time).
std::int64_t covering_number_1d_inplace(std::vector<double>& values, double width);

/// Left endpoints of the greedy cover of sorted values.
std::vector<double> greedy_interval_starts(std::span<const double> sorted_values, double width);

struct ProjectionProfile {
    Direction direction;
    std::vector<double> values;
    std::int64_t covering_number = 0;
};

ProjectionProfile project(const LatticePointSet& set, const Direction& e);

/// N(pi_e(set), delta) without keeping the profile; `scratch` is reused between calls.
std::int64_t projected_covering_number(const LatticePointSet& set, const Direction& e,
                                       std::vector<double>& scratch);

struct SweepEntry {
    Direction direction;
    std::int64_t covering_number = 0;
    bool member = false;
};

/// E_s evaluated on direction_grid(M).
struct DirectionSetES {
    ParamTriple params;
    std::int64_t sweep_size = 0;
    double threshold = 0;
    std::vector<SweepEntry> sweep;
    std::vector<Direction> members;
};

/// Default sweep resolution 4 * 2^n.
std::int64_t default_sweep(const Scale& scale);

DirectionSetES compute_E_s(const LatticePointSet& set, const ParamTriple& params, std::int64_t sweep,
                           int jobs = 1);

/// Re-threshold an existing sweep for another exponent s (same set and grid).
DirectionSetES rethreshold(const DirectionSetES& base, const ParamTriple& params);

/// Greedy cover of the member angles by closed arcs of length r on the circle [0, pi).
std::int64_t covering_number_directions(std::span<const Direction> members, double r);
std::int64_t covering_number_directions(const DirectionSetES& es, double r);

/// Greedy r-separated subset of sorted directions (arc distance >= r, wrap-around included).
std::vector<Direction> separated_subset(std::span<const Direction> sorted_members, double r);

/// min{delta^-s (delta/r)^(1/2), 1/r}
double kaufman_type_bound(const ParamTriple& params);

/// CSV rows "theta,covering_number,is_member".
std::string es_sweep_csv(const DirectionSetES& es);

}  // namespace projlab
