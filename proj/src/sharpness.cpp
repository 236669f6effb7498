#include "projlab/sharpness.hpp"

#include "projlab/errors.hpp"
#include "projlab/parallel.hpp"
#include "projlab/projections.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace projlab {

namespace {

using i128 = __int128;

constexpr std::int64_t kMaxSlopePairs = std::int64_t{1} << 26;

struct SmallSlope {
    std::int64_t num;
    std::int64_t den;
};

std::int64_t to_int64(const BigInt& v, const char* what) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw InvalidParameter(std::string(what) + " does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

std::int64_t l_max_for(std::int64_t k, int l_exponent) {
    if (l_exponent >= 0) {
        if (l_exponent > 40) throw InvalidParameter("slope bound exponent too large");
        return k << l_exponent;
    }
    if (-l_exponent >= 63) return 0;
    return k >> -l_exponent;
}

struct GridShape {
    std::int64_t m;
    std::int64_t n_g;
};

GridShape grid_shape(const ParamTriple& params) {
    const auto ex = grid_exponents(params);
    if (ex.log2m > 40 || ex.log2ng > 40) throw InvalidParameter("grid too large for exact enumeration");
    return {std::int64_t{1} << ex.log2m, std::int64_t{1} << ex.log2ng};
}

}  // namespace

std::vector<ExactSlope> enumerate_slopes(std::int64_t k_max, int l_exponent, std::int64_t n_g,
                                         std::int64_t* pair_count) {
    if (n_g < 1) throw InvalidParameter("n_g must be positive");
    std::int64_t pairs = 0;
    for (std::int64_t k = 1; k <= k_max; ++k) {
        pairs += l_max_for(k, l_exponent) + 1;
        if (pairs > kMaxSlopePairs) throw InvalidParameter("slope set too large to enumerate");
    }
    if (pair_count) *pair_count = pairs;

    std::vector<SmallSlope> raw;
    raw.reserve(static_cast<std::size_t>(pairs));
    for (std::int64_t k = 1; k <= k_max; ++k) {
        const std::int64_t den = k * n_g;
        const std::int64_t l_max = l_max_for(k, l_exponent);
        for (std::int64_t l = 0; l <= l_max; ++l) {
            const std::int64_t g = std::gcd(l, den);
            raw.push_back({l / g, den / g});
        }
    }
    std::sort(raw.begin(), raw.end(), [](const SmallSlope& a, const SmallSlope& b) {
        return static_cast<i128>(a.num) * b.den < static_cast<i128>(b.num) * a.den;
    });
    // Reduced fractions: equal values have equal (num, den).
    raw.erase(std::unique(raw.begin(), raw.end(),
                          [](const SmallSlope& a, const SmallSlope& b) { return a.num == b.num && a.den == b.den; }),
              raw.end());
    std::vector<ExactSlope> out;
    out.reserve(raw.size());
    for (const auto& s : raw) out.emplace_back(s.num, s.den);
    return out;
}

SlopeSet build_slope_set(const ParamTriple& params, bool exploratory) {
    const auto ex = grid_exponents(params);
    const Rational a(params.log2delta());
    const Rational b(params.log2r());
    // delta^s / r = 2^(b - as); delta^(1/2 - 3s) r^(3/2) = 2^(3as - a/2 - 3b/2) = 2^(a - 3 log2 m).
    std::int64_t k_max = to_int64(floor_pow2(b - a * params.s()), "k_max");
    if (k_max < 1) {
        if (!exploratory) throw InvalidParameter("need delta^s / r >= 1 (r <= delta^s)");
        k_max = 1;
    }
    const int l_exponent = params.log2delta() - 3 * ex.log2m;
    if (ex.log2ng > 40) throw InvalidParameter("n_g too large for exact enumeration");
    const std::int64_t n_g = std::int64_t{1} << ex.log2ng;
    SlopeSet set{params, {}, k_max, l_exponent, n_g, 0};
    set.slopes = enumerate_slopes(k_max, l_exponent, n_g, &set.pair_count);
    return set;
}

bool verify_separation(std::span<const ExactSlope> sorted_slopes, int log2r) {
    for (std::size_t i = 1; i < sorted_slopes.size(); ++i) {
        const auto& lo = sorted_slopes[i - 1];
        const auto& hi = sorted_slopes[i];
        const BigInt gap_num = hi.num() * lo.den() - lo.num() * hi.den();
        if (gap_num == 0) continue;
        if (gap_num < 0) return false;  // not sorted
        // gap = gap_num / (den_lo den_hi) >= 2^-log2r
        if ((gap_num << log2r) < lo.den() * hi.den()) return false;
    }
    return true;
}

bool verify_separation(const SlopeSet& set) { return verify_separation(set.slopes, set.params.log2r()); }

std::int64_t count_line_hits(const ParamTriple& params, const ExactSlope& slope) {
    const auto [m, n_g] = grid_shape(params);
    const std::int64_t num = to_int64(slope.num(), "slope numerator");
    const std::int64_t den = to_int64(slope.den(), "slope denominator");
    // (x, y) = (i/m, j/(m n_g)) lies on y = slope x  <=>  j den = num i n_g.
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < m; ++i) {
        const i128 rhs = static_cast<i128>(num) * i * n_g;
        if (rhs % den != 0) continue;
        const i128 j = rhs / den;
        if (j >= 0 && j < n_g) ++hits;
    }
    return hits;
}

std::int64_t projected_cardinality(const ParamTriple& params, const ExactSlope& slope) {
    const auto [m, n_g] = grid_shape(params);
    const std::int64_t num = to_int64(slope.num(), "slope numerator");
    const std::int64_t den = to_int64(slope.den(), "slope denominator");
    // m n_g den (y - slope x) = j den - num i n_g: integer keys.
    std::vector<i128> keys;
    keys.reserve(static_cast<std::size_t>(m * n_g));
    for (std::int64_t i = 0; i < m; ++i) {
        const i128 shift = static_cast<i128>(num) * i * n_g;
        for (std::int64_t j = 0; j < n_g; ++j) keys.push_back(static_cast<i128>(j) * den - shift);
    }
    std::sort(keys.begin(), keys.end());
    return std::unique(keys.begin(), keys.end()) - keys.begin();
}

SharpnessReport run_sharpness(const ParamTriple& params, const SharpnessOptions& options) {
    const Rational a(params.log2delta());
    const Rational b(params.log2r());
    if (!options.exploratory && b < a * params.s()) {
        throw InvalidParameter("r > delta^s: outside the sharpness range delta <= r <= delta^s");
    }
    const auto slope_set = build_slope_set(params, options.exploratory);
    const auto ex = grid_exponents(params);
    const auto [m, n_g] = grid_shape(params);

    SharpnessReport rep;
    rep.slope_count = static_cast<std::int64_t>(slope_set.slopes.size());
    rep.target = params.threshold() * std::sqrt(params.delta() / params.r());
    rep.proj_target = params.threshold();
    rep.grid_size = m * n_g;
    rep.separated = verify_separation(slope_set);
    rep.line_hit_floor = static_cast<std::int64_t>(std::floor(std::sqrt(params.r() / params.delta()) / 2.0));

    std::optional<LatticePointSet> k_set;
    if (options.covering) {
        try {
            k_set = gen_grid_example(params).set;
        } catch (const InvalidParameter&) {
            k_set.reset();
        }
    }

    rep.rows.resize(slope_set.slopes.size());
    parallel_for(rep.rows.size(), options.jobs, [&](std::size_t i) {
        thread_local std::vector<double> scratch;
        auto& row = rep.rows[i];
        row.slope = slope_set.slopes[i];
        row.line_hits = count_line_hits(params, row.slope);
        row.proj_cardinality = projected_cardinality(params, row.slope);
        if (k_set) row.covering_number = projected_covering_number(*k_set, perpendicular_direction(row.slope), scratch);
    });

    rep.grid_lemma_holds = true;
    rep.line_hit_min = rep.rows.empty() ? 0 : std::numeric_limits<std::int64_t>::max();
    for (const auto& row : rep.rows) {
        rep.max_proj_cardinality = std::max(rep.max_proj_cardinality, row.proj_cardinality);
        rep.line_hit_min = std::min(rep.line_hit_min, row.line_hits);
        rep.max_covering_number = std::max(rep.max_covering_number, row.covering_number);
        if (row.proj_cardinality * row.line_hits > 4 * rep.grid_size) rep.grid_lemma_holds = false;
    }
    if (!slope_set.slopes.empty()) {
        // max slope * h <= delta  <=>  max slope * 2^log2m <= 1, since h = 2^(log2m) delta.
        const auto& top = slope_set.slopes.back();
        rep.segment_proj_max = top.to_double() * std::ldexp(1.0, ex.log2m) * params.delta();
        rep.segment_proj_within_delta = (top.num() << ex.log2m) <= top.den();
    } else {
        rep.segment_proj_within_delta = true;
    }
    return rep;
}

ExperimentRecord sharpness_record(const ParamTriple& params, const SharpnessReport& rep,
                                  const SharpnessOptions& options) {
    ExperimentRecord rec("sharpness");
    rec.param("log2delta", params.log2delta());
    rec.param("log2r", params.log2r());
    rec.param("s", format_rational(params.s()));
    rec.param("delta", params.delta());
    rec.param("r", params.r());
    rec.param("tau", params.tau_real());
    rec.param("exploratory", options.exploratory);
    rec.result("slope_count", rep.slope_count);
    rec.result("target", rep.target);
    rec.result("max_proj_cardinality", rep.max_proj_cardinality);
    rec.result("proj_target", rep.proj_target);
    rec.result("line_hit_min", rep.line_hit_min);
    rec.result("line_hit_floor", rep.line_hit_floor);
    rec.result("segment_proj_max", rep.segment_proj_max);
    rec.result("grid_size", rep.grid_size);
    rec.result("separated", rep.separated);
    rec.result("slope_constant", rep.target > 0 ? static_cast<double>(rep.slope_count) / rep.target : 0.0);
    rec.result("proj_constant", static_cast<double>(rep.max_proj_cardinality) / rep.proj_target);
    if (rep.max_covering_number >= 0) {
        rec.result("max_covering_number", rep.max_covering_number);
        rec.result("covering_constant", static_cast<double>(rep.max_covering_number) / rep.proj_target);
    }

    const double hits = static_cast<double>(rep.line_hit_min);
    if (options.exploratory) {
        rec.report_lower("separation", rep.separated ? 1.0 : 0.0, 1.0);
        rec.report_lower("grid_projection_lemma", rep.grid_lemma_holds ? 1.0 : 0.0, 1.0);
        rec.report_lower("line_hits", hits, static_cast<double>(rep.line_hit_floor));
        rec.report_upper("segment_projection", rep.segment_proj_max, params.delta());
    } else {
        rec.require("separation", rep.separated, rep.separated ? 1.0 : 0.0, 1.0);
        rec.require("grid_projection_lemma", rep.grid_lemma_holds, rep.grid_lemma_holds ? 1.0 : 0.0, 1.0);
        rec.require("line_hits", rep.line_hit_min >= rep.line_hit_floor, hits,
                    static_cast<double>(rep.line_hit_floor));
        rec.require("segment_projection", rep.segment_proj_within_delta, rep.segment_proj_max, params.delta());
    }
    rec.report_lower("slope_count", static_cast<double>(rep.slope_count), options.c_s * rep.target);
    rec.report_upper("max_proj_cardinality", static_cast<double>(rep.max_proj_cardinality),
                     options.c_p * rep.proj_target);
    if (rep.max_covering_number >= 0) {
        rec.report_upper("max_covering_number", static_cast<double>(rep.max_covering_number),
                         options.c_p * rep.proj_target);
    }
    return rec;
}

std::string sharpness_csv(const SharpnessReport& report) {
    std::string out = "num,den,line_hits,proj_cardinality\n";
    for (const auto& row : report.rows) {
        out += row.slope.num().str() + ',' + row.slope.den().str() + ',' + std::to_string(row.line_hits) + ',' +
               std::to_string(row.proj_cardinality) + '\n';
    }
    return out;
}

}  // namespace projlab
