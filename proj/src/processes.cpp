#include "wdsub/processes.hpp"

#include <cmath>
#include <cstdio>

#include "wdsub/errors.hpp"
#include "wdsub/rng.hpp"

namespace wdsub {

namespace {

void check_ar1(const Ar1Params& params) {
  if (params.r < 2) throw InvalidParameter("ar1: r must be an integer >= 2");
  if (params.x0_mode == Ar1Params::Start::fixed &&
      !(params.x0_value >= 0.0 && params.x0_value <= 1.0)) {
    throw InvalidParameter("ar1: fixed x0 must lie in [0,1]");
  }
}

void check_larch(const LarchParams& params) {
  if (!(params.a >= 0.0 && params.a < 1.0)) {
    throw InvalidParameter("larch: feedback a must lie in [0,1)");
  }
  if (params.input == LarchParams::Input::parabolic && !(params.rho > -1.0)) {
    throw InvalidParameter("larch: parabolic exponent rho must exceed -1");
  }
}

std::string larch_tag(const LarchParams& params) {
  char buf[64];
  if (params.input == LarchParams::Input::rademacher) {
    std::snprintf(buf, sizeof buf, "larch(a=%g,rademacher)", params.a);
  } else {
    std::snprintf(buf, sizeof buf, "larch(a=%g,parabolic rho=%g)", params.a, params.rho);
  }
  return buf;
}

}  // namespace

std::vector<double> ar1_path(double x0, int r, std::span<const std::uint64_t> innovations) {
  std::vector<double> xs(innovations.size());
  const double rr = static_cast<double>(r);
  double x = x0;
  for (std::size_t t = 0; t < innovations.size(); ++t) {
    x = (x + static_cast<double>(innovations[t])) / rr;
    xs[t] = x;
  }
  return xs;
}

std::vector<double> larch_path(double a, std::span<const double> inputs) {
  std::vector<double> xs(inputs.size());
  double x = 0.0;
  for (std::size_t t = 0; t < inputs.size(); ++t) {
    x = inputs[t] * (1.0 + a * x);
    xs[t] = x;
  }
  return xs;
}

TimeSeries simulate_ar1(std::size_t n, const Ar1Params& params, std::uint64_t seed) {
  if (n == 0) throw InvalidLength("ar1: series length must be >= 1");
  check_ar1(params);

  Rng rng(seed);
  const double x0 = params.x0_mode == Ar1Params::Start::uniform01 ? rng.next_double()
                                                                  : params.x0_value;
  std::vector<std::uint64_t> innovations(n);
  for (auto& e : innovations) e = rng.next_below(static_cast<std::uint64_t>(params.r));

  TimeSeries out;
  out.values = ar1_path(x0, params.r, innovations);
  out.model_tag = "ar1(r=" + std::to_string(params.r) + ")";
  out.seed = seed;
  return out;
}

TimeSeries simulate_larch(std::size_t n, const LarchParams& params, std::uint64_t seed) {
  if (n == 0) throw InvalidLength("larch: series length must be >= 1");
  check_larch(params);

  Rng rng(seed);
  std::vector<double> inputs(params.burn_in + n);
  if (params.input == LarchParams::Input::rademacher) {
    for (auto& v : inputs) v = rng.next_sign();
  } else {
    for (auto& v : inputs) v = parabolic_quantile(params.rho, rng.next_double());
  }

  const auto path = larch_path(params.a, inputs);
  TimeSeries out;
  out.values.assign(path.end() - static_cast<std::ptrdiff_t>(n), path.end());
  out.model_tag = larch_tag(params);
  out.seed = seed;
  return out;
}

double parabolic_cdf(double rho, double x) {
  if (!(rho > -1.0)) throw InvalidParameter("parabolic: rho must exceed -1");
  if (x <= -1.0) return 0.0;
  if (x >= 1.0) return 1.0;
  if (x >= 0.0) return 0.5 + 0.5 * std::pow(x, 1.0 + rho);
  return 0.5 - 0.5 * std::pow(-x, 1.0 + rho);
}

double parabolic_quantile(double rho, double u) {
  if (!(rho > -1.0)) throw InvalidParameter("parabolic: rho must exceed -1");
  if (!(u >= 0.0 && u <= 1.0)) throw InvalidProbability("parabolic: u must lie in [0,1]");
  const double p = 1.0 / (1.0 + rho);
  if (u >= 0.5) return std::pow(2.0 * u - 1.0, p);
  return -std::pow(1.0 - 2.0 * u, p);
}

}  // namespace wdsub
