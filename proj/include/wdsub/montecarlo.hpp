#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "wdsub/extremes.hpp"
#include "wdsub/processes.hpp"
#include "wdsub/subsample.hpp"

namespace wdsub {

using ProcessParams = std::variant<Ar1Params, LarchParams>;

struct NormalizationSpec {
  enum class Mode { estimated, theoretical };

  Mode mode = Mode::estimated;
  QuantilePinning pin;  // read in estimated mode
};

struct ExperimentConfig {
  ProcessParams process = Ar1Params{};
  std::size_t n = 2000;
  std::size_t b = 50;
  double epsilon = 0.05;
  Scheme scheme = Scheme::overlapping;
  EstimatorKind estimator_kind = EstimatorKind::smooth;
  NormalizationSpec normalization;
  std::size_t replications = 1000;
  std::vector<double> grid;
  std::uint64_t base_seed = 0;
};

struct SupDistanceStats {
  double mean = 0.0;
  double max = 0.0;
};

// Per-grid-point aggregates over replications. Quantiles are lower
// nearest-rank at levels 0.05 and 0.95. Sup distances are taken against the
// AR(1) limit law and are absent when no analytic limit is known (LARCH).
struct MonteCarloSummary {
  std::vector<double> grid;
  std::vector<double> mean_curve;
  std::vector<double> q_low;
  std::vector<double> q_high;
  std::optional<SupDistanceStats> sup_distance_stats;
  std::size_t replications_used = 0;
  std::size_t failures = 0;
};

inline constexpr double kQuantileLow = 0.05;
inline constexpr double kQuantileHigh = 0.95;

// 401 points on [-3, c+d+0.5] for AR(1); [-3, 3.5] for LARCH.
std::vector<double> default_experiment_grid(const ProcessParams& process,
                                            std::size_t points = 401);

// Runs the replication loop: per replication j the process is simulated with
// seed base_seed XOR j, the normalized estimator curve is evaluated on the
// config grid, and pointwise means/quantiles are aggregated deterministically.
// threads = 0 picks the hardware concurrency; the WDSUB_THREADS environment
// variable caps the worker count (0 or unset = no cap).
MonteCarloSummary run_experiment(const ExperimentConfig& config, unsigned threads = 0);

// Max over grid points of |curve(x) - reference(x)|.
double sup_distance(const EstimatorCurve& curve,
                    const std::function<double(double)>& reference);

// r_b + epsilon * sup|K'|.
double bias_bound(double r_b, double epsilon, double k_prime_sup);

}  // namespace wdsub
