#pragma once

#include <cstddef>
#include <span>
#include <utility>

namespace wdsub {

namespace detail {

inline constexpr std::size_t kPairwiseLeaf = 16;

template <class Term>
double pairwise_sum_range(std::size_t lo, std::size_t hi, Term& term) {
  if (hi - lo <= kPairwiseLeaf) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += term(i);
    return s;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum_range(lo, mid, term) + pairwise_sum_range(mid, hi, term);
}

}  // namespace detail

// Pairwise (cascade) summation of term(0), ..., term(count-1). The reduction
// tree is a function of count alone, so a fixed term order always yields the
// same bits; runs of up to kPairwiseLeaf terms are accumulated left to right.
template <class Term>
double pairwise_sum(std::size_t count, Term&& term) {
  if (count == 0) return 0.0;
  return detail::pairwise_sum_range(0, count, term);
}

inline double pairwise_sum(std::span<const double> xs) {
  return pairwise_sum(xs.size(), [xs](std::size_t i) { return xs[i]; });
}

}  // namespace wdsub
