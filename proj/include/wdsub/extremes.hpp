#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wdsub/subsample.hpp"

namespace wdsub {

double max_statistic(std::span<const double> window);
Statistic max_window_statistic();

// Generalized extreme value CDF G_gamma. For |gamma| below the switch
// threshold the Gumbel branch exp(-exp(-x)) is used to avoid cancellation in
// (1 + gamma x)^(-1/gamma).
inline constexpr double kGevGumbelThreshold = 1e-10;
double gev_cdf(double gamma, double x);

struct GevSpec {
  double gamma = 0.0;
  double theta = 1.0;  // extremal index, in (0,1]
};

// G_gamma(x)^theta, the limit law of the normalized maximum under dependence.
double limit_cdf_H(const GevSpec& spec, double x);

// Coefficients of the pinned AR(1) maximum law: theta = (r-1)/r,
// c = theta/ln r, d = (ln 2 - theta)/ln r.
struct Ar1LimitCoefficients {
  double theta;
  double c;
  double d;
};
Ar1LimitCoefficients ar1_limit_coefficients(int r);

// K(x) = exp(-theta (1 - (x-d)/c)) for x <= c+d, 1 beyond; median 0.
double ar1_limit_cdf_K(int r, double x);
// Closed-form generalized inverse: K^-1(t) = d + c (1 + ln t / theta).
double ar1_limit_quantile_K(int r, double t);

enum class Provenance { estimated, theoretical };

struct NormalizationPair {
  double u = 1.0;  // scale, > 0
  double v = 0.0;  // location
  Provenance provenance = Provenance::estimated;
};

struct QuantilePinning {
  double t1 = 0.25;
  double t2 = 0.75;
};

// v = curve median, u = reciprocal interquantile distance, both read off the
// curve's evaluation grid.
NormalizationPair estimate_normalizers(const EstimatorCurve& curve,
                                       const QuantilePinning& pin);

// Affine coefficients under which the length-n AR(1) maximum targets K.
NormalizationPair theoretical_normalizers_ar1(std::size_t n, int r);

// Max-statistic estimator curve evaluated at v + x/u over the x grid.
EstimatorCurve normalized_curve(const TimeSeries& series, std::size_t b, double epsilon,
                                Scheme scheme, EstimatorKind kind,
                                const NormalizationPair& norm, std::vector<double> grid);

}  // namespace wdsub
