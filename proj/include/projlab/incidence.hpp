#pragma once

#include "projlab/core.hpp"
#include "projlab/pointsets.hpp"
#include "projlab/projections.hpp"
#include "projlab/record.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace projlab {

/// pi_e^-1([interval_start, interval_start + width])
struct Tube {
    Direction direction;
    double interval_start = 0;
    double width = 0;

    bool contains(const LatticePoint& p, double delta) const;
};

/// Disjoint greedy intervals for one direction, sorted by start.
struct DirectionTubes {
    Direction direction;
    std::vector<double> starts;
};

class TubeFamily {
public:
    TubeFamily(double width, std::vector<DirectionTubes> per_direction);

    double width() const noexcept { return width_; }
    std::span<const DirectionTubes> per_direction() const noexcept { return per_direction_; }
    std::int64_t total() const noexcept { return total_; }
    Tube tube(std::size_t direction_index, std::size_t k) const;

    /// Index of the tube in direction `direction_index` containing value t, or -1.
    std::int64_t locate(std::size_t direction_index, double t) const;

private:
    double width_;
    std::vector<DirectionTubes> per_direction_;
    std::int64_t total_ = 0;
};

TubeFamily build_tubes(const LatticePointSet& set, std::span<const Direction> directions, int jobs = 1);
TubeFamily build_tubes(const LatticePointSet& set, const DirectionSetES& es, int jobs = 1);

struct IncidenceCount {
    std::int64_t count = 0;
    /// occupancy |P cap T| -> number of tubes with that occupancy
    std::map<std::int64_t, std::int64_t> per_tube_histogram;
    /// sum over tubes of occupancy^2, the ordered pair count sum_T |P cap T|^2
    std::int64_t pair_sum = 0;
};

IncidenceCount count_incidences(const LatticePointSet& set, const TubeFamily& tubes, int jobs = 1);

/// min(1, delta^(1-tau) / |p - q|), distance in unit coordinates. p != q.
double pair_direction_arc(const LatticePoint& p, const LatticePoint& q, Scale scale, double tau);

/// max(1, delta^(1-tau) / |p - q|): the per-pair bound on shared directions.
double pair_direction_bound(const LatticePoint& p, const LatticePoint& q, Scale scale, double tau);

/// Number of directions of the family in which p and q share a tube.
std::int64_t shared_tube_directions(const LatticePoint& p, const LatticePoint& q, Scale scale,
                                    const TubeFamily& tubes);

inline constexpr double kIncidenceBoundConstant = 100.0;

/// Exact incidences against the three-term bound |P||T|^(1/2) + |T| + (delta^-tau |P||T|)^(1/2).
ExperimentRecord upper_bound_report(const LatticePointSet& set, const TubeFamily& tubes, const ParamTriple& params,
                                    bool delta_one_set, int jobs = 1);

}  // namespace projlab
