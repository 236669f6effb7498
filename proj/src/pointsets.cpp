#include "projlab/pointsets.hpp"

#include "projlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace projlab {

LatticePointSet::LatticePointSet(Scale scale, std::vector<LatticePoint> points,
                                 std::optional<double> content_hint)
    : scale_(scale), points_(std::move(points)), content_hint_(content_hint) {
    const std::int64_t side = scale_.side();
    for (const auto& p : points_) {
        if (p.u < 0 || p.v < 0 || p.u >= side || p.v >= side) {
            throw InvalidParameter("lattice point (" + std::to_string(p.u) + ", " + std::to_string(p.v) +
                                   ") outside [0, 2^n)^2");
        }
    }
    std::sort(points_.begin(), points_.end());
    if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
        throw InvalidParameter("duplicate lattice point");
    }
}

LatticePointSet gen_segment(Scale scale) {
    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<std::size_t>(scale.side()));
    for (std::int64_t u = 0; u < scale.side(); ++u) pts.push_back({u, 0});
    return LatticePointSet(scale, std::move(pts), 1.0);
}

LatticePointSet gen_four_corners(int level, Scale scale) {
    if (level < 0 || scale.n() < 2 * level) {
        throw InvalidParameter("four corners level " + std::to_string(level) + " needs n >= 2L, got n = " +
                               std::to_string(scale.n()));
    }
    std::vector<LatticePoint> pts{{0, 0}};
    for (int i = 1; i <= level; ++i) {
        const std::int64_t step = std::int64_t{3} << (scale.n() - 2 * i);
        std::vector<LatticePoint> next;
        next.reserve(pts.size() * 4);
        for (const auto& p : pts) {
            for (std::int64_t cx : {0, 1}) {
                for (std::int64_t cy : {0, 1}) next.push_back({p.u + cx * step, p.v + cy * step});
            }
        }
        pts = std::move(next);
    }
    return LatticePointSet(scale, std::move(pts), 1.0);
}

GridExponents grid_exponents(const ParamTriple& params) {
    const Rational a(params.log2delta());
    const Rational b(params.log2r());
    const Rational as = a * params.s();
    // m = 2^((a+b)/2 - as), n_g = 2^(2as - b), h/delta = 2^((a+b)/2 - as) = m.
    const Rational em = (a + b) / Rational(2) - as;
    const Rational en = Rational(2) * as - b;
    if (em.denominator() != 1 || em < Rational(0)) throw InvalidParameter("m not integral");
    if (en.denominator() != 1 || en < Rational(0)) throw InvalidParameter("n_g not integral");
    return {static_cast<int>(em.numerator()), static_cast<int>(en.numerator()),
            static_cast<int>(em.numerator())};
}

GridExample gen_grid_example(const ParamTriple& params) {
    const auto ex = grid_exponents(params);
    const int n = params.log2delta();
    if (ex.log2ng == 0) {
        throw InvalidParameter("grid example leaves the unit square (n_g = 1 puts a segment end at x = 1)");
    }
    if (2 * ex.log2m + ex.log2ng > 28) {
        throw InvalidParameter("grid example too large (more than 2^28 points)");
    }
    GridExample g;
    g.log2m = ex.log2m;
    g.log2ng = ex.log2ng;
    g.m = std::int64_t{1} << ex.log2m;
    g.n_g = std::int64_t{1} << ex.log2ng;
    g.h_steps = std::int64_t{1} << ex.log2h_steps;
    g.h = std::ldexp(1.0, ex.log2h_steps - n);
    // k/m = k 2^(n - log2m) lattice steps; l/(m n_g) = l 2^(n - log2m - log2ng).
    const int xshift = n - ex.log2m;
    const int yshift = n - ex.log2m - ex.log2ng;
    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<std::size_t>(g.m * g.n_g * (g.h_steps + 1)));
    for (std::int64_t k = 0; k < g.m; ++k) {
        for (std::int64_t l = 0; l < g.n_g; ++l) {
            for (std::int64_t t = 0; t <= g.h_steps; ++t) {
                pts.push_back({(k << xshift) + t, l << yshift});
            }
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const double content = static_cast<double>(g.m * g.n_g) * g.h;
    g.set = LatticePointSet(params.scale(), std::move(pts), content);
    return g;
}

namespace {

struct CellKey {
    std::int64_t i;
    std::int64_t j;
    friend bool operator==(const CellKey&, const CellKey&) = default;
};

struct CellHash {
    std::size_t operator()(const CellKey& c) const noexcept {
        return std::hash<std::int64_t>{}(c.i * 0x9E3779B97F4A7C15LL ^ c.j);
    }
};

using CellCounts = std::unordered_map<CellKey, std::int64_t, CellHash>;

}  // namespace

DeltaOneSet extract_delta_one_set(const LatticePointSet& input, double capacity_constant) {
    if (input.empty()) throw InvalidParameter("extract_delta_one_set needs a non-empty set");
    if (!(capacity_constant >= 1.0)) throw InvalidParameter("capacity constant C0 must be >= 1");
    const int n = input.scale().n();
    // counts[j] holds |P cap Q| for admitted points and level-j squares Q.
    std::vector<CellCounts> counts(static_cast<std::size_t>(n) + 1);
    std::vector<LatticePoint> kept;
    for (const auto& p : input.points()) {
        bool admit = true;
        for (int j = 0; j <= n && admit; ++j) {
            const int shift = n - j;
            const double budget = capacity_constant * std::ldexp(1.0, shift);
            auto it = counts[j].find({p.u >> shift, p.v >> shift});
            const std::int64_t have = it == counts[j].end() ? 0 : it->second;
            if (static_cast<double>(have + 1) > budget) admit = false;
        }
        if (!admit) continue;
        for (int j = 0; j <= n; ++j) {
            const int shift = n - j;
            ++counts[j][{p.u >> shift, p.v >> shift}];
        }
        kept.push_back(p);
    }
    LatticePointSet out(input.scale(), std::move(kept), input.content_hint());
    auto report = dyadic_frostman_report(out);
    return {std::move(out), report};
}

FrostmanReport dyadic_frostman_report(const LatticePointSet& set) {
    FrostmanReport rep;
    const int n = set.scale().n();
    for (int j = 0; j <= n; ++j) {
        const int shift = n - j;
        CellCounts level;
        for (const auto& p : set.points()) ++level[{p.u >> shift, p.v >> shift}];
        // Deterministic witness: ties go to the lexicographically smallest cell.
        for (const auto& [cell, count] : level) {
            const double ratio = static_cast<double>(count) * std::ldexp(1.0, -shift);
            const double side = std::ldexp(1.0, -j);
            const double x = static_cast<double>(cell.i) * side;
            const double y = static_cast<double>(cell.j) * side;
            const bool better = ratio > rep.max_ratio ||
                                (ratio == rep.max_ratio && side == rep.witness_side &&
                                 std::pair(x, y) < std::pair(rep.witness_x, rep.witness_y));
            if (better) rep = {ratio, x, y, side};
        }
    }
    return rep;
}

}  // namespace projlab
