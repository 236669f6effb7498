#pragma once

// Shared random generators and brute-force oracles for the test binaries.

#include "projlab/core.hpp"
#include "projlab/entropy.hpp"
#include "projlab/pointsets.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace testsupport {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Random measure with up to max_atoms atoms; masses are spread over several
/// orders of magnitude so tiny and dominant atoms both occur.
inline projlab::DyadicMeasure random_measure(Rng& rng, int dim, int level, std::size_t max_atoms) {
    const std::int64_t side = std::int64_t{1} << level;
    const std::int64_t cells = dim == 1 ? side : side * side;
    const auto count = static_cast<std::size_t>(
        uniform_int(rng, 1, static_cast<std::int64_t>(std::min<std::size_t>(max_atoms, static_cast<std::size_t>(cells)))));
    // Optionally concentrate the support inside one coarse cube.
    const int coarse = static_cast<int>(uniform_int(rng, 0, level / 2));
    const std::int64_t sub = std::int64_t{1} << (level - coarse);
    const std::int64_t ci = uniform_int(rng, 0, (std::int64_t{1} << coarse) - 1);
    const std::int64_t cj = dim == 2 ? uniform_int(rng, 0, (std::int64_t{1} << coarse) - 1) : 0;
    std::vector<projlab::Atom> atoms;
    for (std::size_t k = 0; k < count; ++k) {
        projlab::Atom a;
        a.i = ci * sub + uniform_int(rng, 0, sub - 1);
        a.j = dim == 2 ? cj * sub + uniform_int(rng, 0, sub - 1) : 0;
        a.mass = std::exp(uniform(rng, -8.0, 0.0));
        atoms.push_back(a);
    }
    return projlab::DyadicMeasure::normalized(dim, level, std::move(atoms));
}

inline projlab::LatticePointSet random_pointset(Rng& rng, int level, std::size_t max_points) {
    const std::int64_t side = std::int64_t{1} << level;
    std::set<projlab::LatticePoint> pts;
    const auto count = uniform_int(rng, 1, static_cast<std::int64_t>(max_points));
    for (std::int64_t k = 0; k < count; ++k) pts.insert({uniform_int(rng, 0, side - 1), uniform_int(rng, 0, side - 1)});
    return projlab::LatticePointSet(projlab::Scale(level), {pts.begin(), pts.end()});
}

/// Exhaustive minimum number of closed length-w intervals covering the values.
/// Any optimal cover can be slid right until each left end sits on a value, so
/// anchors range over the values; all anchor subsets are tried.
inline std::int64_t brute_covering_1d(const std::vector<double>& values, double width) {
    const std::size_t k = values.size();
    if (k == 0) return 0;
    const double tol = width * 1e-12;
    std::int64_t best = static_cast<std::int64_t>(k);
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        const auto used = static_cast<std::int64_t>(__builtin_popcount(mask));
        if (used >= best) continue;
        bool ok = true;
        for (double v : values) {
            bool covered = false;
            for (std::size_t a = 0; a < k && !covered; ++a) {
                if ((mask >> a) & 1u) covered = v >= values[a] && v <= values[a] + width + tol;
            }
            if (!covered) {
                ok = false;
                break;
            }
        }
        if (ok) best = used;
    }
    return best;
}

/// Exhaustive arc cover on [0, pi): arcs [a, a + r] (mod pi) anchored at members.
inline std::int64_t brute_arc_covering(const std::vector<double>& thetas, double r) {
    const std::size_t k = thetas.size();
    if (k == 0) return 0;
    const double tol = r * 1e-12 + 1e-14;
    std::int64_t best = static_cast<std::int64_t>(k);
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        const auto used = static_cast<std::int64_t>(__builtin_popcount(mask));
        if (used >= best) continue;
        bool ok = true;
        for (double t : thetas) {
            bool covered = false;
            for (std::size_t a = 0; a < k && !covered; ++a) {
                if (!((mask >> a) & 1u)) continue;
                double d = t - thetas[a];
                if (d < 0) d += projlab::kPi;
                covered = d <= r + tol;
            }
            if (!covered) {
                ok = false;
                break;
            }
        }
        if (ok) best = used;
    }
    return best;
}

/// -sum p log p over a multiset of cell masses keyed by cell.
template <class Key>
double entropy_of(const std::map<Key, double>& cells) {
    double h = 0;
    for (const auto& [k, p] : cells) {
        if (p > 0) h -= p * std::log(p);
    }
    return h;
}

/// Level-m cell masses computed with an ordered map (independent of the library's sort-based path).
inline std::map<std::pair<std::int64_t, std::int64_t>, double> cells_at(const projlab::DyadicMeasure& mu, int m) {
    std::map<std::pair<std::int64_t, std::int64_t>, double> cells;
    const int shift = mu.level() - m;
    for (const auto& a : mu.atoms()) cells[{a.i >> shift, a.j >> shift}] += a.mass;
    return cells;
}

}  // namespace testsupport
