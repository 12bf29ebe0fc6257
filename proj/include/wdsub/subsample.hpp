#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wdsub/processes.hpp"

namespace wdsub {

enum class Scheme { overlapping, nonoverlapping };

const char* to_string(Scheme scheme);

// Subsample windows over a length-n series. Overlapping windows slide by one
// index and drop the final start (count n-b); non-overlapping windows are the
// floor(n/b) complete consecutive blocks.
struct WindowPlan {
  std::size_t n = 0;
  std::size_t b = 0;
  Scheme scheme = Scheme::overlapping;
  std::size_t count = 0;

  // Half-open 0-based index range [first, last) of window i; i < count.
  std::pair<std::size_t, std::size_t> window(std::size_t i) const {
    if (scheme == Scheme::overlapping) return {i, i + b};
    return {i * b, (i + 1) * b};
  }
};

WindowPlan make_windows(std::size_t n, std::size_t b, Scheme scheme);

// 1 for t <= 0, 0 for t >= 1, affine in between.
double ramp_kernel(double t);

struct Statistic {
  std::string name;
  std::function<double(std::span<const double>)> eval;
};

// (x_1 + ... + x_b)/sqrt(b), the scaling under which partial sums converge.
Statistic normalized_mean_statistic();

enum class EstimatorKind { smooth, rough };

const char* to_string(EstimatorKind kind);

// A subsample CDF estimate on a finite strictly increasing grid.
struct EstimatorCurve {
  std::vector<double> grid;
  std::vector<double> values;
  EstimatorKind kind = EstimatorKind::rough;
  double epsilon = 0.0;  // bandwidth; 0 for rough curves
  std::size_t b = 0;
  Scheme scheme = Scheme::overlapping;
};

void validate_grid(std::span<const double> grid);

std::vector<double> window_statistics(std::span<const double> series,
                                      const WindowPlan& plan, const Statistic& stat);

// Point evaluation over precomputed window statistics, averaged in window
// order via pairwise summation.
double smooth_value_at(std::span<const double> stats, double x, double epsilon);
double rough_value_at(std::span<const double> stats, double x);

std::vector<double> linspace(double lo, double hi, std::size_t points);

// Default evaluation grid: `points` equally spaced values spanning
// [min stat - 3 epsilon, max stat + 3 epsilon].
std::vector<double> default_grid(std::span<const double> stats, double epsilon,
                                 std::size_t points = 2001);

EstimatorCurve smooth_estimate(const TimeSeries& series, std::size_t b, double epsilon,
                               const Statistic& stat, Scheme scheme,
                               std::vector<double> grid);
EstimatorCurve rough_estimate(const TimeSeries& series, std::size_t b,
                              const Statistic& stat, Scheme scheme,
                              std::vector<double> grid);

// Smallest grid point whose curve value reaches t (generalized inverse
// restricted to the evaluation grid).
double curve_quantile(const EstimatorCurve& curve, double t);

}  // namespace wdsub
