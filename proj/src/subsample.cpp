#include "wdsub/subsample.hpp"

#include <algorithm>
#include <cmath>

#include "wdsub/errors.hpp"
#include "wdsub/pairwise.hpp"

namespace wdsub {

const char* to_string(Scheme scheme) {
  return scheme == Scheme::overlapping ? "overlapping" : "nonoverlapping";
}

const char* to_string(EstimatorKind kind) {
  return kind == EstimatorKind::smooth ? "smooth" : "rough";
}

WindowPlan make_windows(std::size_t n, std::size_t b, Scheme scheme) {
  if (b == 0) throw InvalidBlock("block length b must be >= 1");
  if (b >= n) throw InvalidBlock("block length b must satisfy b < n");
  const std::size_t count = scheme == Scheme::overlapping ? n - b : n / b;
  return WindowPlan{n, b, scheme, count};
}

double ramp_kernel(double t) {
  if (t <= 0.0) return 1.0;
  if (t >= 1.0) return 0.0;
  return 1.0 - t;
}

Statistic normalized_mean_statistic() {
  return Statistic{"normalized-mean", [](std::span<const double> w) {
                     return pairwise_sum(w) / std::sqrt(static_cast<double>(w.size()));
                   }};
}

void validate_grid(std::span<const double> grid) {
  if (grid.empty()) throw InvalidParameter("grid must be nonempty");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) throw InvalidParameter("grid must be strictly increasing");
  }
}

std::vector<double> window_statistics(std::span<const double> series,
                                      const WindowPlan& plan, const Statistic& stat) {
  if (series.size() != plan.n) {
    throw InvalidParameter("window plan does not match the series length");
  }
  std::vector<double> stats(plan.count);
  for (std::size_t i = 0; i < plan.count; ++i) {
    const auto [first, last] = plan.window(i);
    stats[i] = stat.eval(series.subspan(first, last - first));
  }
  return stats;
}

double smooth_value_at(std::span<const double> stats, double x, double epsilon) {
  if (!(epsilon > 0.0)) throw InvalidBandwidth("bandwidth epsilon must be positive");
  if (stats.empty()) throw InvalidParameter("no window statistics");
  const double sum = pairwise_sum(stats.size(), [stats, x, epsilon](std::size_t i) {
    return ramp_kernel((stats[i] - x) / epsilon);
  });
  return std::min(1.0, sum / static_cast<double>(stats.size()));
}

double rough_value_at(std::span<const double> stats, double x) {
  if (stats.empty()) throw InvalidParameter("no window statistics");
  const double sum = pairwise_sum(stats.size(), [stats, x](std::size_t i) {
    return stats[i] <= x ? 1.0 : 0.0;
  });
  return sum / static_cast<double>(stats.size());
}

std::vector<double> linspace(double lo, double hi, std::size_t points) {
  if (points < 2) throw InvalidParameter("grid needs at least 2 points");
  if (!(hi > lo)) throw InvalidParameter("grid range must satisfy lo < hi");
  std::vector<double> grid(points);
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = lo + static_cast<double>(i) * step;
  return grid;
}

std::vector<double> default_grid(std::span<const double> stats, double epsilon,
                                 std::size_t points) {
  if (!(epsilon > 0.0)) throw InvalidBandwidth("bandwidth epsilon must be positive");
  if (stats.empty()) throw InvalidParameter("no window statistics");
  const auto [lo, hi] = std::minmax_element(stats.begin(), stats.end());
  return linspace(*lo - 3.0 * epsilon, *hi + 3.0 * epsilon, points);
}

namespace {

EstimatorCurve estimate_curve(const TimeSeries& series, std::size_t b, double epsilon,
                              EstimatorKind kind, const Statistic& stat, Scheme scheme,
                              std::vector<double> grid) {
  validate_grid(grid);
  const WindowPlan plan = make_windows(series.size(), b, scheme);
  const auto stats = window_statistics(series.values, plan, stat);

  EstimatorCurve curve;
  curve.grid = std::move(grid);
  curve.kind = kind;
  curve.epsilon = kind == EstimatorKind::smooth ? epsilon : 0.0;
  curve.b = b;
  curve.scheme = scheme;
  curve.values.reserve(curve.grid.size());
  for (double x : curve.grid) {
    curve.values.push_back(kind == EstimatorKind::smooth ? smooth_value_at(stats, x, epsilon)
                                                         : rough_value_at(stats, x));
  }
  return curve;
}

}  // namespace

EstimatorCurve smooth_estimate(const TimeSeries& series, std::size_t b, double epsilon,
                               const Statistic& stat, Scheme scheme,
                               std::vector<double> grid) {
  if (!(epsilon > 0.0)) throw InvalidBandwidth("bandwidth epsilon must be positive");
  return estimate_curve(series, b, epsilon, EstimatorKind::smooth, stat, scheme,
                        std::move(grid));
}

EstimatorCurve rough_estimate(const TimeSeries& series, std::size_t b,
                              const Statistic& stat, Scheme scheme,
                              std::vector<double> grid) {
  return estimate_curve(series, b, 0.0, EstimatorKind::rough, stat, scheme,
                        std::move(grid));
}

double curve_quantile(const EstimatorCurve& curve, double t) {
  if (!(t > 0.0 && t < 1.0)) throw InvalidProbability("quantile level must lie in (0,1)");
  if (curve.grid.empty() || curve.grid.size() != curve.values.size()) {
    throw InvalidParameter("malformed estimator curve");
  }
  const auto it = std::lower_bound(curve.values.begin(), curve.values.end(), t);
  if (it == curve.values.end()) {
    throw QuantileOutOfRange("curve never reaches level " + std::to_string(t));
  }
  return curve.grid[static_cast<std::size_t>(it - curve.values.begin())];
}

}  // namespace wdsub
