#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "wdsub/errors.hpp"
#include "wdsub/extremes.hpp"
#include "wdsub/montecarlo.hpp"
#include "wdsub/processes.hpp"

using namespace wdsub;
using testutil::dyadic_grid;
using testutil::dyadic_series;

TEST_CASE("max statistic") {
  const std::vector<double> w{1.0, 5.0, 3.0};
  CHECK(max_statistic(w) == 5.0);
  const std::vector<double> single{-2.5};
  CHECK(max_statistic(single) == -2.5);
  const std::vector<double> equal{4.0, 4.0, 4.0};
  CHECK(max_statistic(equal) == 4.0);
  CHECK_THROWS_AS(max_statistic(std::vector<double>{}), InvalidParameter);
}

TEST_CASE("gev cdf branches") {
  CHECK(gev_cdf(0.0, 0.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(gev_cdf(-1.0, 1.0) == 1.0);   // upper endpoint of the gamma < 0 branch
  CHECK(gev_cdf(1.0, 0.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(gev_cdf(1.0, -2.0) == 0.0);   // below the gamma > 0 lower endpoint
  CHECK(gev_cdf(-0.5, 3.0) == 1.0);   // beyond the gamma < 0 upper endpoint
}

TEST_CASE("limit cdf H") {
  CHECK(limit_cdf_H({0.0, 0.5}, 0.0) == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
  CHECK(limit_cdf_H({-1.0, 2.0 / 3.0}, 1.0) == 1.0);
  CHECK_THROWS_AS(limit_cdf_H({0.0, 0.0}, 0.0), InvalidParameter);
  CHECK_THROWS_AS(limit_cdf_H({0.0, 1.5}, 0.0), InvalidParameter);

  // theta = 1 reduces exactly to the GEV cdf.
  for (int gi = 0; gi < 25; ++gi) {
    const double gamma = -2.0 + 4.0 * gi / 24.0;
    for (int xi = 0; xi < 40; ++xi) {
      const double x = -8.0 + 16.0 * xi / 39.0;
      CHECK(std::abs(limit_cdf_H({gamma, 1.0}, x) - gev_cdf(gamma, x)) <= 1e-15);
    }
  }

  // H = G^theta and H is monotone in x.
  for (double gamma : {-1.0, -0.3, 0.0, 0.4, 1.5}) {
    for (double theta : {0.2, 2.0 / 3.0, 1.0}) {
      double prev = -1.0;
      for (int xi = 0; xi <= 200; ++xi) {
        const double x = -10.0 + 20.0 * xi / 200.0;
        const double h = limit_cdf_H({gamma, theta}, x);
        CHECK(std::abs(h - std::pow(gev_cdf(gamma, x), theta)) <= 1e-12);
        CHECK(h >= prev);
        CHECK(h >= 0.0);
        CHECK(h <= 1.0);
        prev = h;
      }
    }
  }
}

TEST_CASE("gev cdf is continuous across gamma = 0") {
  for (double gamma : {1e-8, -1e-8, 5e-9, -5e-9, 1e-9, -1e-9, 1e-12}) {
    for (int xi = 0; xi <= 100; ++xi) {
      const double x = -10.0 + 20.0 * xi / 100.0;
      CHECK(std::abs(gev_cdf(gamma, x) - gev_cdf(0.0, x)) <= 1e-6);
    }
  }
}

TEST_CASE("ar1 limit law identities") {
  const auto [theta, c, d] = ar1_limit_coefficients(3);
  CHECK(theta == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(std::abs(ar1_limit_cdf_K(3, 0.0) - 0.5) <= 1e-12);
  CHECK(ar1_limit_cdf_K(3, c + d) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(ar1_limit_cdf_K(3, c + d + 1.0) == 1.0);
  CHECK(std::abs(ar1_limit_quantile_K(3, 0.75) - ar1_limit_quantile_K(3, 0.25) - 1.0) <=
        1e-12);
  CHECK_THROWS_AS(ar1_limit_coefficients(1), InvalidParameter);
  CHECK_THROWS_AS(ar1_limit_quantile_K(3, 0.0), InvalidProbability);

  // K is the gamma = -1 limit law after the affine change x -> (x-d)/c.
  for (int r : {2, 3, 5}) {
    const auto co = ar1_limit_coefficients(r);
    for (int xi = 0; xi <= 400; ++xi) {
      const double x = -4.0 + 6.0 * xi / 400.0;
      const double k = ar1_limit_cdf_K(r, x);
      const double h = limit_cdf_H({-1.0, co.theta}, (x - co.d) / co.c);
      CHECK(std::abs(k - h) <= 1e-12);
    }
    // quantile function inverts the cdf
    for (double t : {0.1, 0.25, 0.5, 0.75, 0.9}) {
      CHECK(ar1_limit_cdf_K(r, ar1_limit_quantile_K(r, t)) ==
            doctest::Approx(t).epsilon(1e-12));
    }
  }
}

TEST_CASE("normalizers from a curve sampled from the limit law") {
  const auto [theta, c, d] = ar1_limit_coefficients(3);
  EstimatorCurve curve;
  curve.grid = linspace(-3.0, c + d + 0.5, 4001);
  for (double x : curve.grid) curve.values.push_back(ar1_limit_cdf_K(3, x));
  const double spacing = curve.grid[1] - curve.grid[0];

  const auto norm = estimate_normalizers(curve, QuantilePinning{});
  CHECK(norm.provenance == Provenance::estimated);
  CHECK(std::abs(norm.v) <= spacing);
  CHECK(std::abs(norm.u - 1.0) <= 2.0 * spacing);
}

TEST_CASE("degenerate curves are rejected") {
  EstimatorCurve step;
  step.grid = {0.0, 1.0, 2.0};
  step.values = {0.0, 1.0, 1.0};
  CHECK_THROWS_AS(estimate_normalizers(step, QuantilePinning{}), DegenerateScale);
  CHECK_THROWS_AS(estimate_normalizers(step, QuantilePinning{0.75, 0.25}),
                  InvalidParameter);

  EstimatorCurve low;
  low.grid = {0.0, 1.0};
  low.values = {0.0, 0.4};
  CHECK_THROWS_AS(estimate_normalizers(low, QuantilePinning{}), QuantileOutOfRange);
}

TEST_CASE("normalizer shift equivariance on a shifted curve") {
  Rng rng(12);
  EstimatorCurve curve;
  curve.grid = dyadic_grid(0.0, 4.0, -5);
  curve.values.resize(curve.grid.size());
  for (auto& v : curve.values) v = rng.next_double();
  std::sort(curve.values.begin(), curve.values.end());
  curve.values.back() = 1.0;

  const auto base = estimate_normalizers(curve, QuantilePinning{});
  for (double shift : {0.5, -2.0, 8.0}) {
    EstimatorCurve moved = curve;
    for (auto& x : moved.grid) x += shift;  // exact on the dyadic lattice
    const auto norm = estimate_normalizers(moved, QuantilePinning{});
    CHECK(norm.v == base.v + shift);
    CHECK(norm.u == base.u);
  }
}

TEST_CASE("theoretical normalizers for the ar1 model") {
  const auto [theta, c, d] = ar1_limit_coefficients(3);
  const auto norm = theoretical_normalizers_ar1(1000, 3);
  CHECK(norm.provenance == Provenance::theoretical);
  CHECK(norm.u == doctest::Approx(c * 1000.0).epsilon(1e-15));
  CHECK(norm.v == doctest::Approx((1.0 - 1e-3) - d / (c * 1000.0)).epsilon(1e-15));
  CHECK_THROWS_AS(theoretical_normalizers_ar1(0, 3), InvalidParameter);

  // The adjusted pair rescales the raw normalization affinely:
  // u_adj (M - v_adj) = c [n (M - v_n)] + d.
  for (std::size_t n : {100ull, 1000ull, 10000ull}) {
    const auto nm = theoretical_normalizers_ar1(n, 3);
    const double u_n = static_cast<double>(n);
    const double v_n = 1.0 - 1.0 / u_n;
    for (double m : {0.9, 0.99, 0.999, 1.0}) {
      const double lhs = nm.u * (m - nm.v);
      const double rhs = c * (u_n * (m - v_n)) + d;
      CHECK(std::abs(lhs - rhs) <= 1e-9);
    }
  }

  // Location term increases to 1 along growing n.
  const double v100 = theoretical_normalizers_ar1(100, 3).v;
  const double v1000 = theoretical_normalizers_ar1(1000, 3).v;
  const double v10000 = theoretical_normalizers_ar1(10000, 3).v;
  CHECK(v100 < v1000);
  CHECK(v1000 < v10000);
  CHECK(v10000 < 1.0);
}

TEST_CASE("normalized curve with identity normalization") {
  Rng rng(77);
  const auto series = dyadic_series(200, rng);
  const auto grid = linspace(0.2, 1.2, 101);

  const auto plain = smooth_estimate(series, 8, 0.05, max_window_statistic(),
                                     Scheme::overlapping, grid);
  const auto normed = normalized_curve(series, 8, 0.05, Scheme::overlapping,
                                       EstimatorKind::smooth,
                                       NormalizationPair{1.0, 0.0}, grid);
  CHECK(plain.values == normed.values);

  CHECK_THROWS_AS(normalized_curve(series, 8, 0.05, Scheme::overlapping,
                                   EstimatorKind::smooth, NormalizationPair{0.0, 0.0},
                                   grid),
                  InvalidParameter);
}

TEST_CASE("normalized curve rescales the grid affinely") {
  Rng rng(78);
  const auto series = dyadic_series(150, rng);
  const NormalizationPair one{1.0, 0.25};
  const NormalizationPair two{2.0, 0.25};
  for (double x : {-1.0, -0.125, 0.5, 2.0}) {
    const auto doubled = normalized_curve(series, 5, 0.05, Scheme::nonoverlapping,
                                          EstimatorKind::rough, two, {x});
    const auto halved = normalized_curve(series, 5, 0.05, Scheme::nonoverlapping,
                                         EstimatorKind::rough, one, {x / 2.0});
    CHECK(doubled.values[0] == halved.values[0]);
  }
}

TEST_CASE("estimated normalizers pin the median at zero") {
  const std::size_t n = 2000, b = 50;
  const double eps = 0.05;
  const auto series = simulate_ar1(n, Ar1Params{}, 31);
  const auto plan = make_windows(n, b, Scheme::overlapping);
  const auto stats = window_statistics(series.values, plan, max_window_statistic());

  EstimatorCurve base;
  base.grid = default_grid(stats, eps);
  base.kind = EstimatorKind::smooth;
  base.epsilon = eps;
  for (double x : base.grid) base.values.push_back(smooth_value_at(stats, x, eps));
  const auto norm = estimate_normalizers(base, QuantilePinning{});

  const auto grid = default_experiment_grid(Ar1Params{});
  const auto curve = normalized_curve(series, b, eps, Scheme::overlapping,
                                      EstimatorKind::smooth, norm, grid);
  std::size_t nearest = 0;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    if (std::abs(grid[k]) < std::abs(grid[nearest])) nearest = k;
  }
  const double g = (grid.back() - grid.front()) / static_cast<double>(grid.size() - 1);
  const double slack = 1.0 / static_cast<double>(plan.count) + g;
  CHECK(curve.values[nearest] >= 0.5 - slack);
  CHECK(curve.values[nearest] <= 0.5 + slack);
}
