#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "wdsub/errors.hpp"
#include "wdsub/pairwise.hpp"
#include "wdsub/processes.hpp"
#include "wdsub/rng.hpp"

using namespace wdsub;

namespace {

// Kolmogorov distance between sorted samples and a CDF.
double ks_distance(std::vector<double> xs, const std::function<double(double)>& cdf) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double best = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    best = std::max(best, std::abs(f - static_cast<double>(i + 1) / n));
    best = std::max(best, std::abs(f - static_cast<double>(i) / n));
  }
  return best;
}

}  // namespace

TEST_CASE("ar1 recursion fixed points") {
  const std::vector<std::uint64_t> zeros(3, 0);
  CHECK(ar1_path(0.0, 2, zeros) == std::vector<double>{0.0, 0.0, 0.0});

  const std::vector<std::uint64_t> tops(3, 2);  // r-1 = 2 keeps X at 1
  CHECK(ar1_path(1.0, 3, tops) == std::vector<double>{1.0, 1.0, 1.0});
}

TEST_CASE("ar1 validation") {
  CHECK_THROWS_AS(simulate_ar1(0, Ar1Params{}, 1), InvalidLength);
  Ar1Params bad;
  bad.r = 1;
  CHECK_THROWS_AS(simulate_ar1(10, bad, 1), InvalidParameter);
  Ar1Params fixed_out;
  fixed_out.x0_mode = Ar1Params::Start::fixed;
  fixed_out.x0_value = 1.5;
  CHECK_THROWS_AS(simulate_ar1(10, fixed_out, 1), InvalidParameter);
}

TEST_CASE("ar1 determinism and range") {
  for (std::uint64_t seed : {0ull, 7ull, 123456789ull}) {
    for (int r : {2, 3, 5}) {
      Ar1Params params;
      params.r = r;
      const auto a = simulate_ar1(500, params, seed);
      const auto b = simulate_ar1(500, params, seed);
      CHECK(a.values == b.values);
      for (double x : a.values) {
        CHECK(x >= 0.0);
        CHECK(x <= 1.0);
        CHECK(std::isfinite(x));
      }
    }
  }
}

TEST_CASE("ar1 stationary marginal has mean 1/2") {
  const std::size_t n = 100000;
  const auto series = simulate_ar1(n, Ar1Params{}, 2024);
  const double mean = pairwise_sum(series.values) / static_cast<double>(n);
  CHECK(std::abs(mean - 0.5) < 0.01);
}

TEST_CASE("larch collapses to iid inputs when a = 0") {
  LarchParams params;
  params.a = 0.0;
  const auto series = simulate_larch(5, params, 42);
  for (double x : series.values) CHECK(std::abs(x) == 1.0);
}

TEST_CASE("larch validation") {
  LarchParams params;
  params.a = -0.1;
  CHECK_THROWS_AS(simulate_larch(10, params, 1), InvalidParameter);
  params.a = 1.0;
  CHECK_THROWS_AS(simulate_larch(10, params, 1), InvalidParameter);
  params.a = 0.4;
  params.input = LarchParams::Input::parabolic;
  params.rho = -1.0;
  CHECK_THROWS_AS(simulate_larch(10, params, 1), InvalidParameter);
  CHECK_THROWS_AS(simulate_larch(0, LarchParams{}, 1), InvalidLength);
}

TEST_CASE("larch rademacher paths respect the stationary bound") {
  LarchParams params;  // a = 0.4, rademacher
  const double bound = 1.0 / (1.0 - params.a);
  const auto series = simulate_larch(10000, params, 99);
  for (double x : series.values) CHECK(std::abs(x) <= bound + 1e-12);

  // After any burn-in >= 50 with a <= 0.5 the emitted values stay below
  // 1/(1-a) + 2^-50.
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    LarchParams p;
    p.a = 0.5;
    p.burn_in = 50;
    const auto s = simulate_larch(2000, p, seed);
    for (double x : s.values) CHECK(std::abs(x) <= 1.0 / (1.0 - p.a) + 0x1.0p-50);
  }
}

TEST_CASE("larch determinism") {
  LarchParams params;
  params.input = LarchParams::Input::parabolic;
  params.rho = 4.0;
  const auto a = simulate_larch(300, params, 5);
  const auto b = simulate_larch(300, params, 5);
  CHECK(a.values == b.values);
}

TEST_CASE("parabolic sampler with rho = 0 is uniform on [-1,1]") {
  LarchParams params;
  params.a = 0.0;
  params.input = LarchParams::Input::parabolic;
  params.rho = 0.0;
  params.burn_in = 0;
  const auto series = simulate_larch(100000, params, 7);
  const double ks = ks_distance(series.values, [](double x) {
    return std::clamp(0.5 * (x + 1.0), 0.0, 1.0);
  });
  CHECK(ks <= 0.01);
}

TEST_CASE("parabolic inverse transform round trip") {
  for (double rho : {-0.5, 0.0, 1.0, 4.0}) {
    for (int k = 1; k < 200; ++k) {
      const double u = static_cast<double>(k) / 200.0;
      const double x = parabolic_quantile(rho, u);
      CHECK(x >= -1.0);
      CHECK(x <= 1.0);
      CHECK(std::abs(parabolic_cdf(rho, x) - u) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(parabolic_quantile(4.0, 1.5), InvalidProbability);
  CHECK_THROWS_AS(parabolic_cdf(-1.0, 0.0), InvalidParameter);
}

TEST_CASE("rng bounded draws are unbiased over the range") {
  Rng rng(31);
  std::vector<std::size_t> counts(3, 0);
  for (int i = 0; i < 30000; ++i) ++counts[rng.next_below(3)];
  for (std::size_t c : counts) {
    CHECK(c > 9000);
    CHECK(c < 11000);
  }
}
