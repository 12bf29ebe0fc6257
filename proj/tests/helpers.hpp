#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "wdsub/processes.hpp"
#include "wdsub/rng.hpp"

namespace wdsub::testutil {

// Random values on a dyadic lattice (multiples of 2^-20 in [0,1)). Affine
// maps with power-of-two scales stay exact on such data, which keeps the
// equality-based properties free of rounding ambiguity.
inline std::vector<double> dyadic_values(std::size_t n, Rng& rng) {
  std::vector<double> xs(n);
  for (auto& x : xs) x = static_cast<double>(rng.next() >> 44) * 0x1.0p-20;
  return xs;
}

inline TimeSeries dyadic_series(std::size_t n, Rng& rng) {
  TimeSeries s;
  s.values = dyadic_values(n, rng);
  s.model_tag = "dyadic";
  return s;
}

// Equally spaced grid with spacing 2^step_log2 whose points are exact
// dyadics covering [lo, hi].
inline std::vector<double> dyadic_grid(double lo, double hi, int step_log2) {
  const double step = std::ldexp(1.0, step_log2);
  const double x0 = std::floor(lo / step) * step;
  std::vector<double> grid;
  for (std::size_t i = 0;; ++i) {
    const double x = x0 + static_cast<double>(i) * step;
    grid.push_back(x);
    if (x >= hi) break;
  }
  return grid;
}

}  // namespace wdsub::testutil
