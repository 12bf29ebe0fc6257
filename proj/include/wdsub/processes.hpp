#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace wdsub {

// One realization of a strictly stationary process plus generation metadata.
struct TimeSeries {
  std::vector<double> values;
  std::string model_tag;
  std::uint64_t seed = 0;

  std::size_t size() const { return values.size(); }
};

// X_t = (X_{t-1} + e_t)/r with e_t iid uniform on {0,...,r-1}. Started from
// X_0 ~ uniform[0,1] (the stationary law) unless a fixed start is requested.
struct Ar1Params {
  enum class Start { uniform01, fixed };

  int r = 3;  // integer branching base, >= 2
  Start x0_mode = Start::uniform01;
  double x0_value = 0.0;  // read in fixed mode only; must lie in [0,1]
};

// X_t = xi_t (1 + a X_{t-1}) with iid inputs xi_t, run from X = 0 through a
// burn-in before emitting. Inputs are Rademacher signs or draws from the
// density 0.5 (1+rho) |x|^rho on [-1,1].
struct LarchParams {
  enum class Input { rademacher, parabolic };

  double a = 0.4;  // feedback in [0,1); a = 0 is the degenerate iid case
  Input input = Input::rademacher;
  double rho = 4.0;  // parabolic exponent, > -1
  std::size_t burn_in = 1000;
};

TimeSeries simulate_ar1(std::size_t n, const Ar1Params& params, std::uint64_t seed);
TimeSeries simulate_larch(std::size_t n, const LarchParams& params, std::uint64_t seed);

// Recursion cores, exposed so tests can drive them with fixed innovations.
std::vector<double> ar1_path(double x0, int r, std::span<const std::uint64_t> innovations);
std::vector<double> larch_path(double a, std::span<const double> inputs);

// CDF and inverse CDF of the parabolic density; the sampler is the inverse
// transform applied to uniform draws.
double parabolic_cdf(double rho, double x);
double parabolic_quantile(double rho, double u);

}  // namespace wdsub
