#include "wdsub/extremes.hpp"

#include <algorithm>
#include <cmath>

#include "wdsub/errors.hpp"

namespace wdsub {

double max_statistic(std::span<const double> window) {
  if (window.empty()) throw InvalidParameter("max statistic needs a nonempty window");
  return *std::max_element(window.begin(), window.end());
}

Statistic max_window_statistic() {
  return Statistic{"max", [](std::span<const double> w) { return max_statistic(w); }};
}

double gev_cdf(double gamma, double x) {
  if (std::abs(gamma) < kGevGumbelThreshold) return std::exp(-std::exp(-x));
  if (1.0 + gamma * x <= 0.0) return gamma > 0.0 ? 0.0 : 1.0;
  return std::exp(-std::exp(-std::log1p(gamma * x) / gamma));
}

double limit_cdf_H(const GevSpec& spec, double x) {
  if (!(spec.theta > 0.0 && spec.theta <= 1.0)) {
    throw InvalidParameter("extremal index theta must lie in (0,1]");
  }
  if (std::abs(spec.gamma) < kGevGumbelThreshold) {
    return std::exp(-spec.theta * std::exp(-x));
  }
  if (1.0 + spec.gamma * x <= 0.0) return spec.gamma > 0.0 ? 0.0 : 1.0;
  return std::exp(-spec.theta * std::exp(-std::log1p(spec.gamma * x) / spec.gamma));
}

Ar1LimitCoefficients ar1_limit_coefficients(int r) {
  if (r < 2) throw InvalidParameter("ar1 limit: r must be an integer >= 2");
  const double theta = static_cast<double>(r - 1) / static_cast<double>(r);
  const double log_r = std::log(static_cast<double>(r));
  return {theta, theta / log_r, (std::log(2.0) - theta) / log_r};
}

double ar1_limit_cdf_K(int r, double x) {
  const auto [theta, c, d] = ar1_limit_coefficients(r);
  if (x > c + d) return 1.0;
  return std::min(1.0, std::exp(-theta * (1.0 - (x - d) / c)));
}

double ar1_limit_quantile_K(int r, double t) {
  if (!(t > 0.0 && t < 1.0)) throw InvalidProbability("quantile level must lie in (0,1)");
  const auto [theta, c, d] = ar1_limit_coefficients(r);
  return d + c * (1.0 + std::log(t) / theta);
}

NormalizationPair estimate_normalizers(const EstimatorCurve& curve,
                                       const QuantilePinning& pin) {
  if (!(pin.t1 > 0.0 && pin.t1 < pin.t2 && pin.t2 < 1.0)) {
    throw InvalidParameter("quantile pinning requires 0 < t1 < t2 < 1");
  }
  const double v = curve_quantile(curve, 0.5);
  const double q1 = curve_quantile(curve, pin.t1);
  const double q2 = curve_quantile(curve, pin.t2);
  if (q1 == q2) throw DegenerateScale("pinning quantiles coincide on the grid");
  return {1.0 / std::abs(q2 - q1), v, Provenance::estimated};
}

NormalizationPair theoretical_normalizers_ar1(std::size_t n, int r) {
  if (n == 0) throw InvalidParameter("normalizers need n >= 1");
  const auto [theta, c, d] = ar1_limit_coefficients(r);
  const double u_n = static_cast<double>(n);
  const double v_n = 1.0 - 1.0 / u_n;
  return {c * u_n, v_n - d / (c * u_n), Provenance::theoretical};
}

EstimatorCurve normalized_curve(const TimeSeries& series, std::size_t b, double epsilon,
                                Scheme scheme, EstimatorKind kind,
                                const NormalizationPair& norm, std::vector<double> grid) {
  if (!(norm.u > 0.0)) throw InvalidParameter("normalization scale u must be positive");
  if (kind == EstimatorKind::smooth && !(epsilon > 0.0)) {
    throw InvalidBandwidth("bandwidth epsilon must be positive");
  }
  validate_grid(grid);
  const WindowPlan plan = make_windows(series.size(), b, scheme);
  const auto stats = window_statistics(series.values, plan, max_window_statistic());

  EstimatorCurve curve;
  curve.grid = std::move(grid);
  curve.kind = kind;
  curve.epsilon = kind == EstimatorKind::smooth ? epsilon : 0.0;
  curve.b = b;
  curve.scheme = scheme;
  curve.values.reserve(curve.grid.size());
  for (double x : curve.grid) {
    const double point = norm.v + x / norm.u;
    curve.values.push_back(kind == EstimatorKind::smooth
                               ? smooth_value_at(stats, point, epsilon)
                               : rough_value_at(stats, point));
  }
  return curve;
}

}  // namespace wdsub
