#include "projlab/projections.hpp"

#include "projlab/errors.hpp"
#include "projlab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

namespace projlab {

namespace {

double inclusive_end(double start, double width) { return start + width * (1.0 + kWidthTolerance); }

std::int64_t greedy_count_sorted(std::span<const double> sorted, double width) {
    std::int64_t count = 0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        ++count;
        const double end = inclusive_end(sorted[i], width);
        while (i < sorted.size() && sorted[i] <= end) ++i;
    }
    return count;
}

void sort_values(std::vector<double>& values) {
    if (std::is_sorted(values.begin(), values.end())) return;
    if (std::is_sorted(values.begin(), values.end(), std::greater<>{})) {
        std::reverse(values.begin(), values.end());
        return;
    }
    std::sort(values.begin(), values.end());
}

}  // namespace

std::int64_t covering_number_1d(std::span<const double> values, double width) {
    std::vector<double> copy(values.begin(), values.end());
    return covering_number_1d_inplace(copy, width);
}

std::int64_t covering_number_1d_inplace(std::vector<double>& values, double width) {
    if (!(width > 0)) throw InvalidParameter("covering width must be positive");
    sort_values(values);
    return greedy_count_sorted(values, width);
}

std::vector<double> greedy_interval_starts(std::span<const double> sorted_values, double width) {
    std::vector<double> starts;
    std::size_t i = 0;
    while (i < sorted_values.size()) {
        starts.push_back(sorted_values[i]);
        const double end = inclusive_end(sorted_values[i], width);
        while (i < sorted_values.size() && sorted_values[i] <= end) ++i;
    }
    return starts;
}

ProjectionProfile project(const LatticePointSet& set, const Direction& e) {
    ProjectionProfile prof;
    prof.direction = e;
    const double delta = set.scale().delta();
    prof.values.reserve(set.size());
    for (const auto& p : set.points()) prof.values.push_back(projection_value(p, e, delta));
    sort_values(prof.values);
    prof.covering_number = greedy_count_sorted(prof.values, delta);
    return prof;
}

std::int64_t projected_covering_number(const LatticePointSet& set, const Direction& e,
                                       std::vector<double>& scratch) {
    const double delta = set.scale().delta();
    scratch.clear();
    scratch.reserve(set.size());
    for (const auto& p : set.points()) scratch.push_back(projection_value(p, e, delta));
    return covering_number_1d_inplace(scratch, delta);
}

std::int64_t default_sweep(const Scale& scale) { return std::int64_t{4} << scale.n(); }

DirectionSetES compute_E_s(const LatticePointSet& set, const ParamTriple& params, std::int64_t sweep,
                           int jobs) {
    if (set.scale() != params.scale()) throw InvalidParameter("point set scale differs from delta");
    const auto grid = direction_grid(sweep);
    DirectionSetES es{params, sweep, params.threshold(), {}, {}};
    es.sweep.resize(grid.size());
    parallel_for(grid.size(), jobs, [&](std::size_t i) {
        thread_local std::vector<double> scratch;
        es.sweep[i].direction = grid[i];
        es.sweep[i].covering_number = projected_covering_number(set, grid[i], scratch);
    });
    return rethreshold(es, params);
}

DirectionSetES rethreshold(const DirectionSetES& base, const ParamTriple& params) {
    DirectionSetES es{params, base.sweep_size, params.threshold(), base.sweep, {}};
    const double limit = es.threshold * (1.0 + kWidthTolerance);
    for (auto& entry : es.sweep) {
        entry.member = static_cast<double>(entry.covering_number) <= limit;
        if (entry.member) es.members.push_back(entry.direction);
    }
    return es;
}

namespace {

double angle_slack(double r) { return r * kWidthTolerance + 8.0 * kPi * 2.220446049250313e-16; }

}  // namespace

std::int64_t covering_number_directions(std::span<const Direction> members, double r) {
    if (!(r > 0)) throw InvalidParameter("arc length must be positive");
    const std::size_t k = members.size();
    if (k == 0) return 0;
    if (r + angle_slack(r) >= kPi) return 1;
    std::vector<double> angles;
    angles.reserve(2 * k);
    for (const auto& d : members) angles.push_back(d.theta());
    std::sort(angles.begin(), angles.end());
    for (std::size_t i = 0; i < k; ++i) angles.push_back(angles[i] + kPi);

    // next[i]: first unrolled index not covered by the arc [angles[i], angles[i] + r].
    const std::size_t total = 2 * k;
    std::vector<std::size_t> next(total + 1, total);
    for (std::size_t i = 0, j = 0; i < total; ++i) {
        j = std::max(j, i + 1);
        while (j < total && angles[j] <= angles[i] + r + angle_slack(r)) ++j;
        next[i] = j;
    }
    // Binary lifting: jump[t][i] = next applied 2^t times.
    std::vector<std::vector<std::size_t>> jump{next};
    while ((std::size_t{1} << (jump.size() - 1)) < k) {
        const auto& prev = jump.back();
        std::vector<std::size_t> up(total + 1);
        for (std::size_t i = 0; i <= total; ++i) up[i] = prev[prev[i]];
        jump.push_back(std::move(up));
    }
    std::int64_t best = static_cast<std::int64_t>(k);
    for (std::size_t start = 0; start < k; ++start) {
        // Fewest arcs c with next^c(start) >= start + k.
        std::size_t pos = start;
        std::int64_t used = 0;
        for (std::size_t t = jump.size(); t-- > 0;) {
            if (jump[t][pos] < start + k) {
                pos = jump[t][pos];
                used += std::int64_t{1} << t;
            }
        }
        best = std::min(best, used + 1);
    }
    return best;
}

std::int64_t covering_number_directions(const DirectionSetES& es, double r) {
    return covering_number_directions(es.members, r);
}

std::vector<Direction> separated_subset(std::span<const Direction> sorted_members, double r) {
    std::vector<Direction> picked;
    // Input is sorted, so the nearest picked neighbours of d are back() and, across
    // the wrap, front().
    for (const auto& d : sorted_members) {
        if (picked.empty() ||
            (arc_distance(picked.back(), d) >= r && arc_distance(picked.front(), d) >= r)) {
            picked.push_back(d);
        }
    }
    return picked;
}

double kaufman_type_bound(const ParamTriple& params) {
    const double delta = params.delta();
    const double r = params.r();
    return std::min(params.threshold() * std::sqrt(delta / r), 1.0 / r);
}

std::string es_sweep_csv(const DirectionSetES& es) {
    std::string out = "theta,covering_number,is_member\n";
    char buf[64];
    for (const auto& e : es.sweep) {
        std::snprintf(buf, sizeof buf, "%.17g", e.direction.theta());
        out += buf;
        out += ',' + std::to_string(e.covering_number) + ',' + (e.member ? "1" : "0") + '\n';
    }
    return out;
}

}  // namespace projlab
