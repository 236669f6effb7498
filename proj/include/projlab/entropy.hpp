#pragma once

// Dyadic measures on [0,1)^d (d = 1, 2) and their entropy toolkit: entropies,
// conditional entropies, blow-ups, projections, the multi-scale inequality,
// S_{2^m} averages, Ahlfors-David regularity and the entropy -> covering bound.

#include "projlab/core.hpp"
#include "projlab/pointsets.hpp"
#include "projlab/record.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace projlab {

/// Mass of one level-n cube; j is 0 for d = 1.
struct Atom {
    std::int64_t i = 0;
    std::int64_t j = 0;
    double mass = 0;

    friend bool operator==(const Atom&, const Atom&) = default;
};

class DyadicMeasure {
public:
    /// Atoms must have positive masses, distinct in-range cells and total mass 1 (1e-12).
    DyadicMeasure(int dim, int level, std::vector<Atom> atoms);

    /// Merges repeated cells, drops zero masses and rescales to total mass 1.
    static DyadicMeasure normalized(int dim, int level, std::vector<Atom> atoms);

    int dim() const noexcept { return dim_; }
    int level() const noexcept { return level_; }
    /// Sorted by (i, j).
    std::span<const Atom> atoms() const noexcept { return atoms_; }
    std::size_t size() const noexcept { return atoms_.size(); }
    double total_mass() const;

    friend bool operator==(const DyadicMeasure&, const DyadicMeasure&) = default;

private:
    DyadicMeasure() = default;
    int dim_ = 1;
    int level_ = 0;
    std::vector<Atom> atoms_;
};

/// Uniform mass on the occupied level-n cubes.
DyadicMeasure from_pointset(const LatticePointSet& set);

/// Convex combination t mu + (1 - t) nu of measures with the same dim and level.
DyadicMeasure mix(const DyadicMeasure& mu, const DyadicMeasure& nu, double t);

/// 1D measure from real positions in [0,1), binned at `level`.
DyadicMeasure from_positions_1d(std::span<const double> positions, std::span<const double> masses, int level);

/// Masses of the occupied level-m cubes, in index order.
std::vector<double> cell_masses(const DyadicMeasure& mu, int m);
DyadicMeasure coarsen(const DyadicMeasure& mu, int m);

/// -sum p log p over positive entries (0 log 0 = 0).
double shannon_entropy(std::span<const double> masses);

struct EntropyValue {
    /// natural-log units
    double raw = 0;
    /// raw / (m log 2); 0 when m = 0
    double normalized = 0;
};

EntropyValue entropy(const DyadicMeasure& mu, int m);

struct ConditionalEntropy {
    /// sum_F mu(F) H(mu_F, D_fine)
    double direct = 0;
    /// H(mu, D_fine) - H(mu, D_coarse)
    double difference = 0;
};

inline constexpr double kConditionalTolerance = 1e-9;

/// Computes both sides of the conditional entropy formula; throws AssertionFailure
/// when they differ by more than 1e-9.
ConditionalEntropy conditional_entropy(const DyadicMeasure& mu, int fine, int coarse);

/// mu^Q for the level-k cube Q = (qi, qj): level n - k, total mass 1.
DyadicMeasure blow_up(const DyadicMeasure& mu, int k, std::int64_t qi, std::int64_t qj = 0);

struct WeightedBlowUp {
    std::int64_t qi = 0;
    std::int64_t qj = 0;
    double weight = 0;  // mu(Q)
    DyadicMeasure measure;
};

/// All blow-ups over the occupied level-k cubes, in cube index order.
std::vector<WeightedBlowUp> blow_ups(const DyadicMeasure& mu, int k);

/// Projection values t in [-1, sqrt 2] are mapped to (t + offset) * scale in [0, 1).
inline constexpr double kProjectionOffset = 1.0;
inline constexpr double kProjectionScale = 0.35355339059327373;  // 1 / (2 sqrt 2)

/// pi_e of the cube-centre atoms, in the normalised chart, binned at level m.
DyadicMeasure project_measure(const DyadicMeasure& mu, const Direction& e, int m);

/// 2^m sum_Q nu(Q)^2 for a 1D measure at level m.
double collision_energy(const DyadicMeasure& nu);
double l2_energy(const DyadicMeasure& mu, const Direction& e, int m);

inline constexpr double kMultiscaleConstant = 10.0;

struct MultiscaleResult {
    double lhs = 0;
    double rhs = 0;
    /// lhs - (rhs - 10/m)
    double slack = 0;
};

/// H_n(pi_e mu) against (m/n) sum_k sum_{Q in D_km} mu(Q) H_m(pi_e mu^Q), n = mu.level().
MultiscaleResult multiscale_values(const DyadicMeasure& mu, const Direction& e, int m);
ExperimentRecord multiscale_check(const DyadicMeasure& mu, const Direction& e, int m);

struct ADRegularityReport {
    double A_lower = 0;
    double A_upper = 0;
    double A = 0;
    double diameter = 0;
    /// occupied level-j cube counts, j = 0..n
    std::vector<std::int64_t> occupied_counts;
};

ADRegularityReport ad_regularity_check(const DyadicMeasure& mu);

/// Default alarm level for calling a measured A "regular".
inline constexpr double kRegularityAlarm = 16.0;

struct MarstrandAverage {
    int m = 0;
    double average_entropy = 0;
    double average_energy = 0;
};

MarstrandAverage marstrand_values(const DyadicMeasure& mu, int m, int jobs = 1);

/// Average of H_m(pi_e mu) and the energy over direction_grid(2^m); deficits for each s.
/// When `A` is absent the AD-regularity constant is measured here.
ExperimentRecord marstrand_average(const DyadicMeasure& mu, int m, std::span<const double> s_values,
                                   std::optional<double> A = std::nullopt, int jobs = 1);

/// Averages for several m; soft-checks they are nondecreasing within `tolerance`.
ExperimentRecord marstrand_sweep(const DyadicMeasure& mu, std::span<const int> ms, double tolerance = 0.02,
                                 int jobs = 1);

/// Smallest m in [1, m_max] whose S_{2^m} entropy average reaches s.
std::optional<int> smallest_scale_for_target(const DyadicMeasure& mu, double s, int m_max, int jobs = 1);

/// Occupied-cube count against 2^(nt), t = s - 1/(n log 2) - 1e-9.
ExperimentRecord covering_from_entropy(const DyadicMeasure& nu, double s);

struct Main2Row {
    std::int64_t p = 0;
    double average = 0;
    double ratio = 0;  // average / delta^-s
};

struct Main2Result {
    int level = 0;
    double delta = 0;
    std::vector<Main2Row> rows;
    std::vector<std::int64_t> axis_counts;  // covering numbers per direction for p = 2, if present
};

Main2Result theorem_main2_values(int level, std::span<const std::int64_t> p_list, double s, int jobs = 1);
ExperimentRecord theorem_main2_experiment(int level, std::span<const std::int64_t> p_list, double s, int jobs = 1);

}  // namespace projlab
