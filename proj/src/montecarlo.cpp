#include "wdsub/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <thread>

#include "wdsub/errors.hpp"
#include "wdsub/pairwise.hpp"

namespace wdsub {

namespace {

struct RepOutcome {
  std::vector<double> values;
  double sup = 0.0;
  bool ok = false;
};

TimeSeries simulate(const ProcessParams& process, std::size_t n, std::uint64_t seed) {
  return std::visit(
      [&](const auto& params) {
        using P = std::decay_t<decltype(params)>;
        if constexpr (std::is_same_v<P, Ar1Params>) return simulate_ar1(n, params, seed);
        else return simulate_larch(n, params, seed);
      },
      process);
}

void validate(const ExperimentConfig& config) {
  if (config.replications == 0) throw InvalidParameter("replications must be >= 1");
  if (!(config.epsilon > 0.0)) throw InvalidBandwidth("bandwidth epsilon must be positive");
  if (config.b == 0 || config.b >= config.n) {
    throw InvalidBlock("block length b must satisfy 1 <= b < n");
  }
  validate_grid(config.grid);
  if (config.normalization.mode == NormalizationSpec::Mode::estimated) {
    const auto& pin = config.normalization.pin;
    if (!(pin.t1 > 0.0 && pin.t1 < pin.t2 && pin.t2 < 1.0)) {
      throw InvalidParameter("quantile pinning requires 0 < t1 < t2 < 1");
    }
  }
  if (config.normalization.mode == NormalizationSpec::Mode::theoretical &&
      !std::holds_alternative<Ar1Params>(config.process)) {
    throw InvalidParameter("theoretical normalization is only available for the ar1 model");
  }
}

unsigned resolve_threads(unsigned requested, std::size_t jobs) {
  unsigned n = requested > 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("WDSUB_THREADS")) {
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end != env && cap > 0) n = static_cast<unsigned>(std::min<unsigned long>(n, cap));
  }
  return static_cast<unsigned>(std::min<std::size_t>(n, jobs));
}

// Lower nearest-rank quantile of an unsorted buffer (modified in place).
double nearest_rank(std::vector<double>& buf, double level) {
  const double h = level * static_cast<double>(buf.size());
  std::size_t rank = static_cast<std::size_t>(std::floor(h));
  if (h - std::floor(h) > 1e-9) ++rank;  // ceil with a guard against FP excess
  if (rank == 0) rank = 1;
  std::nth_element(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(rank - 1), buf.end());
  return buf[rank - 1];
}

RepOutcome run_replication(const ExperimentConfig& config, std::size_t j,
                           const std::function<double(double)>* reference) {
  const std::uint64_t seed = config.base_seed ^ static_cast<std::uint64_t>(j);
  const TimeSeries series = simulate(config.process, config.n, seed);
  const WindowPlan plan = make_windows(config.n, config.b, config.scheme);
  const auto stats = window_statistics(series.values, plan, max_window_statistic());

  RepOutcome out;
  NormalizationPair norm;
  if (config.normalization.mode == NormalizationSpec::Mode::estimated) {
    EstimatorCurve base;
    base.grid = default_grid(stats, config.epsilon);
    base.kind = config.estimator_kind;
    base.epsilon = config.estimator_kind == EstimatorKind::smooth ? config.epsilon : 0.0;
    base.b = config.b;
    base.scheme = config.scheme;
    base.values.reserve(base.grid.size());
    for (double x : base.grid) {
      base.values.push_back(config.estimator_kind == EstimatorKind::smooth
                                ? smooth_value_at(stats, x, config.epsilon)
                                : rough_value_at(stats, x));
    }
    try {
      norm = estimate_normalizers(base, config.normalization.pin);
    } catch (const DegenerateScale&) {
      return out;
    } catch (const QuantileOutOfRange&) {
      return out;
    }
  } else {
    // The estimator approximates the law of the block maximum, so the
    // theoretical coefficients are taken at the block length.
    norm = theoretical_normalizers_ar1(config.b, std::get<Ar1Params>(config.process).r);
  }

  out.values.reserve(config.grid.size());
  for (double x : config.grid) {
    const double point = norm.v + x / norm.u;
    out.values.push_back(config.estimator_kind == EstimatorKind::smooth
                             ? smooth_value_at(stats, point, config.epsilon)
                             : rough_value_at(stats, point));
  }
  if (reference != nullptr) {
    double sup = 0.0;
    for (std::size_t k = 0; k < config.grid.size(); ++k) {
      sup = std::max(sup, std::abs(out.values[k] - (*reference)(config.grid[k])));
    }
    out.sup = sup;
  }
  out.ok = true;
  return out;
}

}  // namespace

std::vector<double> default_experiment_grid(const ProcessParams& process,
                                            std::size_t points) {
  if (const auto* ar1 = std::get_if<Ar1Params>(&process)) {
    const auto [theta, c, d] = ar1_limit_coefficients(ar1->r);
    return linspace(-3.0, c + d + 0.5, points);
  }
  return linspace(-3.0, 3.5, points);
}

MonteCarloSummary run_experiment(const ExperimentConfig& config, unsigned threads) {
  validate(config);

  std::function<double(double)> reference;
  if (const auto* ar1 = std::get_if<Ar1Params>(&config.process)) {
    const int r = ar1->r;
    reference = [r](double x) { return ar1_limit_cdf_K(r, x); };
  }
  const auto* ref_ptr = reference ? &reference : nullptr;

  const std::size_t reps = config.replications;
  std::vector<RepOutcome> outcomes(reps);
  const unsigned workers = resolve_threads(threads, reps);

  if (workers <= 1) {
    for (std::size_t j = 0; j < reps; ++j) outcomes[j] = run_replication(config, j, ref_ptr);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t j; (j = next.fetch_add(1)) < reps;) {
            outcomes[j] = run_replication(config, j, ref_ptr);
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& err : errors) {
      if (err) std::rethrow_exception(err);
    }
  }

  std::vector<std::size_t> used;
  used.reserve(reps);
  for (std::size_t j = 0; j < reps; ++j) {
    if (outcomes[j].ok) used.push_back(j);
  }
  const std::size_t failures = reps - used.size();
  if (failures * 100 > reps) {
    throw ExperimentFailed(std::to_string(failures) + " of " + std::to_string(reps) +
                           " replications failed (degenerate or unreachable quantiles)");
  }

  const std::size_t m = used.size();
  MonteCarloSummary summary;
  summary.grid = config.grid;
  summary.replications_used = m;
  summary.failures = failures;

  const std::size_t points = config.grid.size();
  summary.mean_curve.resize(points);
  summary.q_low.resize(points);
  summary.q_high.resize(points);
  std::vector<double> column(m);
  for (std::size_t k = 0; k < points; ++k) {
    const double sum =
        pairwise_sum(m, [&](std::size_t i) { return outcomes[used[i]].values[k]; });
    summary.mean_curve[k] = std::min(1.0, std::max(0.0, sum / static_cast<double>(m)));
    for (std::size_t i = 0; i < m; ++i) column[i] = outcomes[used[i]].values[k];
    summary.q_low[k] = nearest_rank(column, kQuantileLow);
    for (std::size_t i = 0; i < m; ++i) column[i] = outcomes[used[i]].values[k];
    summary.q_high[k] = nearest_rank(column, kQuantileHigh);
  }

  if (ref_ptr != nullptr) {
    SupDistanceStats stats;
    stats.mean =
        pairwise_sum(m, [&](std::size_t i) { return outcomes[used[i]].sup; }) /
        static_cast<double>(m);
    for (std::size_t i = 0; i < m; ++i) stats.max = std::max(stats.max, outcomes[used[i]].sup);
    summary.sup_distance_stats = stats;
  }
  return summary;
}

double sup_distance(const EstimatorCurve& curve,
                    const std::function<double(double)>& reference) {
  if (curve.grid.size() != curve.values.size()) {
    throw InvalidParameter("malformed estimator curve");
  }
  double best = 0.0;
  for (std::size_t k = 0; k < curve.grid.size(); ++k) {
    best = std::max(best, std::abs(curve.values[k] - reference(curve.grid[k])));
  }
  return best;
}

double bias_bound(double r_b, double epsilon, double k_prime_sup) {
  if (r_b < 0.0 || epsilon < 0.0 || k_prime_sup < 0.0) {
    throw InvalidParameter("bias bound inputs must be nonnegative");
  }
  return r_b + epsilon * k_prime_sup;
}

}  // namespace wdsub
