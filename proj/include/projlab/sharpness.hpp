#pragma once

// Exact construction of the r-separated slope set S for the grid-of-segments
// example, and the checks showing its perpendicular projections are small.

#include "projlab/core.hpp"
#include "projlab/pointsets.hpp"
#include "projlab/record.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace projlab {

struct SlopeSet {
    ParamTriple params;
    std::vector<ExactSlope> slopes;
    /// floor(delta^s / r)
    std::int64_t k_max = 0;
    /// l ranges over [0, floor(k * 2^l_exponent)]; 2^l_exponent = delta^(1/2 - 3s) r^(3/2).
    int l_exponent = 0;
    std::int64_t n_g = 0;
    /// Admissible (k, l) pairs before deduplication.
    std::int64_t pair_count = 0;
};

/// All l/(k n_g) with 1 <= k <= k_max, 0 <= l <= floor(k 2^l_exponent), reduced,
/// deduplicated and sorted. `pair_count` receives the number of pairs scanned.
std::vector<ExactSlope> enumerate_slopes(std::int64_t k_max, int l_exponent, std::int64_t n_g,
                                         std::int64_t* pair_count = nullptr);

/// Needs the grid integrality constraints and delta^s / r >= 1. With `exploratory`
/// the latter is waived and k_max is clamped to 1.
SlopeSet build_slope_set(const ParamTriple& params, bool exploratory = false);

/// Consecutive distinct slopes differ by at least r = 2^-log2r (exact).
bool verify_separation(std::span<const ExactSlope> sorted_slopes, int log2r);
bool verify_separation(const SlopeSet& set);

/// |l cap G| for the line through the origin with this slope, origin included.
std::int64_t count_line_hits(const ParamTriple& params, const ExactSlope& slope);

/// Number of distinct values of y - slope * x over G (exact).
std::int64_t projected_cardinality(const ParamTriple& params, const ExactSlope& slope);

struct SlopeRow {
    ExactSlope slope;
    std::int64_t line_hits = 0;
    std::int64_t proj_cardinality = 0;
    /// N(pi_e(K), delta) for e perpendicular to the slope; -1 when not computed.
    std::int64_t covering_number = -1;
};

struct SharpnessOptions {
    bool exploratory = false;
    bool covering = true;
    double c_s = 1.0 / 64.0;
    double c_p = 64.0;
    int jobs = 1;
};

struct SharpnessReport {
    std::int64_t slope_count = 0;
    /// delta^-s (delta/r)^(1/2)
    double target = 0;
    std::int64_t max_proj_cardinality = 0;
    /// delta^-s
    double proj_target = 0;
    std::int64_t line_hit_min = 0;
    /// floor((r/delta)^(1/2) / 2)
    std::int64_t line_hit_floor = 0;
    double segment_proj_max = 0;
    bool segment_proj_within_delta = false;
    bool separated = false;
    bool grid_lemma_holds = false;
    std::int64_t grid_size = 0;
    std::int64_t max_covering_number = -1;
    std::vector<SlopeRow> rows;
};

SharpnessReport run_sharpness(const ParamTriple& params, const SharpnessOptions& options = {});

ExperimentRecord sharpness_record(const ParamTriple& params, const SharpnessReport& report,
                                  const SharpnessOptions& options = {});

/// CSV rows "num,den,line_hits,proj_cardinality".
std::string sharpness_csv(const SharpnessReport& report);

}  // namespace projlab
