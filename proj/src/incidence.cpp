#include "projlab/incidence.hpp"

#include "projlab/errors.hpp"
#include "projlab/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace projlab {

bool Tube::contains(const LatticePoint& p, double delta) const {
    const double t = projection_value(p, direction, delta);
    return t >= interval_start && t <= interval_start + width * (1.0 + kWidthTolerance);
}

TubeFamily::TubeFamily(double width, std::vector<DirectionTubes> per_direction)
    : width_(width), per_direction_(std::move(per_direction)) {
    for (const auto& d : per_direction_) total_ += static_cast<std::int64_t>(d.starts.size());
}

Tube TubeFamily::tube(std::size_t direction_index, std::size_t k) const {
    const auto& d = per_direction_.at(direction_index);
    return {d.direction, d.starts.at(k), width_};
}

std::int64_t TubeFamily::locate(std::size_t direction_index, double t) const {
    const auto& starts = per_direction_[direction_index].starts;
    auto it = std::upper_bound(starts.begin(), starts.end(), t);
    if (it == starts.begin()) return -1;
    --it;
    if (t > *it + width_ * (1.0 + kWidthTolerance)) return -1;
    return it - starts.begin();
}

TubeFamily build_tubes(const LatticePointSet& set, std::span<const Direction> directions, int jobs) {
    if (directions.empty()) throw InvalidParameter("build_tubes needs at least one direction");
    std::vector<DirectionTubes> per(directions.size());
    parallel_for(directions.size(), jobs, [&](std::size_t i) {
        auto prof = project(set, directions[i]);
        per[i] = {directions[i], greedy_interval_starts(prof.values, set.scale().delta())};
    });
    return TubeFamily(set.scale().delta(), std::move(per));
}

TubeFamily build_tubes(const LatticePointSet& set, const DirectionSetES& es, int jobs) {
    return build_tubes(set, es.members, jobs);
}

IncidenceCount count_incidences(const LatticePointSet& set, const TubeFamily& tubes, int jobs) {
    const double delta = set.scale().delta();
    const auto per = tubes.per_direction();
    std::vector<std::vector<std::int64_t>> occupancy(per.size());
    parallel_for(per.size(), jobs, [&](std::size_t i) {
        occupancy[i].assign(per[i].starts.size(), 0);
        for (const auto& p : set.points()) {
            const auto k = tubes.locate(i, projection_value(p, per[i].direction, delta));
            if (k >= 0) ++occupancy[i][static_cast<std::size_t>(k)];
        }
    });
    IncidenceCount out;
    for (const auto& occ : occupancy) {
        for (auto c : occ) {
            out.count += c;
            out.pair_sum += c * c;
            ++out.per_tube_histogram[c];
        }
    }
    return out;
}

namespace {

double unit_distance(const LatticePoint& p, const LatticePoint& q, Scale scale) {
    if (p == q) throw InvalidParameter("pair bound needs distinct points (the diagonal is counted separately)");
    const double du = static_cast<double>(p.u - q.u);
    const double dv = static_cast<double>(p.v - q.v);
    return std::hypot(du, dv) * scale.delta();
}

}  // namespace

double pair_direction_arc(const LatticePoint& p, const LatticePoint& q, Scale scale, double tau) {
    const double dist = unit_distance(p, q, scale);
    return std::min(1.0, std::pow(scale.delta(), 1.0 - tau) / dist);
}

double pair_direction_bound(const LatticePoint& p, const LatticePoint& q, Scale scale, double tau) {
    const double dist = unit_distance(p, q, scale);
    return std::max(1.0, std::pow(scale.delta(), 1.0 - tau) / dist);
}

std::int64_t shared_tube_directions(const LatticePoint& p, const LatticePoint& q, Scale scale,
                                    const TubeFamily& tubes) {
    std::int64_t shared = 0;
    const auto per = tubes.per_direction();
    for (std::size_t i = 0; i < per.size(); ++i) {
        const auto kp = tubes.locate(i, projection_value(p, per[i].direction, scale.delta()));
        const auto kq = tubes.locate(i, projection_value(q, per[i].direction, scale.delta()));
        if (kp >= 0 && kp == kq) ++shared;
    }
    return shared;
}

ExperimentRecord upper_bound_report(const LatticePointSet& set, const TubeFamily& tubes, const ParamTriple& params,
                                    bool delta_one_set, int jobs) {
    const auto inc = count_incidences(set, tubes, jobs);
    const double n_points = static_cast<double>(set.size());
    const double n_tubes = static_cast<double>(tubes.total());
    const double delta = params.delta();
    const double t1 = n_points * std::sqrt(n_tubes);
    const double t2 = n_tubes;
    const double t3 = std::sqrt(std::pow(delta, -params.tau_real()) * n_points * n_tubes);
    const double ratio = static_cast<double>(inc.count) / (t1 + t2 + t3);
    const double alarm = kIncidenceBoundConstant * std::max(1.0, std::log(1.0 / delta));
    const auto n_dirs = static_cast<std::int64_t>(tubes.per_direction().size());

    ExperimentRecord rec("incidence");
    rec.param("delta", delta);
    rec.param("tau", params.tau_real());
    rec.param("s", params.s_real());
    rec.param("delta_one_set", delta_one_set);
    rec.result("n_points", static_cast<std::int64_t>(set.size()));
    rec.result("n_tubes", tubes.total());
    rec.result("n_directions", n_dirs);
    rec.result("incidences", inc.count);
    rec.result("bound_terms", {t1, t2, t3});
    rec.result("ratio", ratio);
    rec.result("alarm_threshold", alarm);
    const std::int64_t expected = static_cast<std::int64_t>(set.size()) * n_dirs;
    rec.require("incidences_equal_points_times_directions", inc.count == expected,
                static_cast<double>(inc.count), static_cast<double>(expected));
    rec.report_upper("cell_incidences_ratio", ratio, alarm);
    return rec;
}

}  // namespace projlab
