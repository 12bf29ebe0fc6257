#include "wdsub/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "wdsub/errors.hpp"
#include "wdsub/io.hpp"
#include "wdsub/montecarlo.hpp"

namespace wdsub {

namespace {

using nlohmann::json;

struct Options {
  // process
  std::string model = "ar1";
  int r = 3;
  std::string x0 = "uniform01";
  double x0_value = 0.0;
  double a = 0.4;
  std::string input = "rademacher";
  double rho = 4.0;
  std::uint64_t burn_in = 1000;
  // common
  std::size_t n = 2000;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string output = "-";
  std::string config_path;
  // estimator
  std::size_t b = 50;
  double epsilon = 0.05;
  std::string scheme = "overlapping";
  std::string estimator = "smooth";
  std::string stat = "max";
  double grid_min = std::numeric_limits<double>::quiet_NaN();
  double grid_max = std::numeric_limits<double>::quiet_NaN();
  std::size_t grid_points = 0;
  // experiment
  std::size_t reps = 1000;
  std::string normalization = "estimated";
  double t1 = 0.25;
  double t2 = 0.75;
};

void add_process_options(CLI::App& sub, Options& opt) {
  sub.add_option("--model", opt.model, "Process to simulate")
      ->check(CLI::IsMember({"ar1", "larch"}));
  sub.add_option("--r", opt.r, "ar1 branching base (integer >= 2)");
  sub.add_option("--x0", opt.x0, "ar1 start mode")
      ->check(CLI::IsMember({"uniform01", "fixed"}));
  sub.add_option("--x0-value", opt.x0_value, "ar1 fixed start value in [0,1]");
  sub.add_option("--a", opt.a, "larch feedback coefficient in [0,1)");
  sub.add_option("--input", opt.input, "larch input distribution")
      ->check(CLI::IsMember({"rademacher", "parabolic"}));
  sub.add_option("--rho", opt.rho, "larch parabolic exponent (> -1)");
  sub.add_option("--burn-in", opt.burn_in, "larch burn-in length");
  sub.add_option("--n", opt.n, "series length");
  sub.add_option("--seed", opt.seed, "RNG seed");
  sub.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sub.add_option("--output", opt.output, "output path ('-' = stdout)");
  sub.add_option("--config", opt.config_path, "JSON config file (flags take precedence)");
}

void add_estimator_options(CLI::App& sub, Options& opt) {
  sub.add_option("--b", opt.b, "block length");
  sub.add_option("--epsilon", opt.epsilon, "smoothing bandwidth");
  sub.add_option("--scheme", opt.scheme, "subsampling scheme")
      ->check(CLI::IsMember({"overlapping", "nonoverlapping"}));
  sub.add_option("--estimator", opt.estimator, "estimator kind")
      ->check(CLI::IsMember({"smooth", "rough"}));
  sub.add_option("--grid-min", opt.grid_min, "grid lower end");
  sub.add_option("--grid-max", opt.grid_max, "grid upper end");
  sub.add_option("--grid-points", opt.grid_points, "number of grid points");
}

// Config-file values fill in options that were not passed on the command line.
void apply_config(const CLI::App& sub, Options& opt) {
  if (opt.config_path.empty()) return;
  std::ifstream in(opt.config_path);
  if (!in) throw InvalidParameter("cannot read config file: " + opt.config_path);
  json cfg;
  try {
    in >> cfg;
  } catch (const json::parse_error& e) {
    throw InvalidParameter(std::string("config file is not valid JSON: ") + e.what());
  }

  auto fill = [&](const char* flag, const char* key, auto& target) {
    if (sub.count(flag) == 0 && cfg.contains(key)) {
      cfg.at(key).get_to(target);
    }
  };
  fill("--model", "model", opt.model);
  fill("--r", "r", opt.r);
  fill("--x0", "x0", opt.x0);
  fill("--x0-value", "x0_value", opt.x0_value);
  fill("--a", "a", opt.a);
  fill("--input", "input", opt.input);
  fill("--rho", "rho", opt.rho);
  fill("--burn-in", "burn_in", opt.burn_in);
  fill("--n", "n", opt.n);
  fill("--seed", "seed", opt.seed);
  fill("--format", "format", opt.format);
  fill("--output", "output", opt.output);
  if (sub.get_option_no_throw("--b") != nullptr) {
    fill("--b", "b", opt.b);
    fill("--epsilon", "epsilon", opt.epsilon);
    fill("--scheme", "scheme", opt.scheme);
    fill("--estimator", "estimator", opt.estimator);
    fill("--grid-min", "grid_min", opt.grid_min);
    fill("--grid-max", "grid_max", opt.grid_max);
    fill("--grid-points", "grid_points", opt.grid_points);
  }
  if (sub.get_option_no_throw("--stat") != nullptr) fill("--stat", "stat", opt.stat);
  if (sub.get_option_no_throw("--reps") != nullptr) {
    fill("--reps", "reps", opt.reps);
    fill("--normalization", "normalization", opt.normalization);
    fill("--t1", "t1", opt.t1);
    fill("--t2", "t2", opt.t2);
  }
}

ProcessParams make_process(const Options& opt) {
  if (opt.model == "ar1") {
    Ar1Params params;
    params.r = opt.r;
    params.x0_mode =
        opt.x0 == "fixed" ? Ar1Params::Start::fixed : Ar1Params::Start::uniform01;
    params.x0_value = opt.x0_value;
    return params;
  }
  LarchParams params;
  params.a = opt.a;
  params.input = opt.input == "parabolic" ? LarchParams::Input::parabolic
                                          : LarchParams::Input::rademacher;
  params.rho = opt.rho;
  params.burn_in = opt.burn_in;
  return params;
}

Scheme parse_scheme(const std::string& s) {
  return s == "nonoverlapping" ? Scheme::nonoverlapping : Scheme::overlapping;
}

EstimatorKind parse_kind(const std::string& s) {
  return s == "rough" ? EstimatorKind::rough : EstimatorKind::smooth;
}

Statistic parse_stat(const std::string& s) {
  if (s == "max") return max_window_statistic();
  if (s == "normalized-mean") return normalized_mean_statistic();
  throw InvalidParameter("unknown statistic: " + s);
}

// Explicit grid from flags or config, or none when no grid option was set.
std::unique_ptr<std::vector<double>> explicit_grid(const Options& opt,
                                                   std::size_t default_points) {
  const bool has_min = !std::isnan(opt.grid_min);
  const bool has_max = !std::isnan(opt.grid_max);
  const bool has_pts = opt.grid_points > 0;
  if (!has_min && !has_max && !has_pts) return nullptr;
  if (!has_min || !has_max) {
    throw InvalidParameter("--grid-min and --grid-max must be given together");
  }
  const std::size_t points = opt.grid_points > 0 ? opt.grid_points : default_points;
  return std::make_unique<std::vector<double>>(linspace(opt.grid_min, opt.grid_max, points));
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-" || path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

int cmd_simulate(const CLI::App& sub, Options& opt) {
  apply_config(sub, opt);
  const ProcessParams process = make_process(opt);
  const TimeSeries series = std::visit(
      [&](const auto& params) {
        using P = std::decay_t<decltype(params)>;
        if constexpr (std::is_same_v<P, Ar1Params>)
          return simulate_ar1(opt.n, params, opt.seed);
        else
          return simulate_larch(opt.n, params, opt.seed);
      },
      process);

  std::ostringstream os;
  if (opt.format == "json") {
    os << series_to_json(series).dump(2) << '\n';
  } else {
    write_series_csv(os, series);
  }
  write_text(opt.output, os.str());
  return 0;
}

int cmd_estimate(const CLI::App& sub, Options& opt) {
  apply_config(sub, opt);
  const ProcessParams process = make_process(opt);
  const TimeSeries series = std::visit(
      [&](const auto& params) {
        using P = std::decay_t<decltype(params)>;
        if constexpr (std::is_same_v<P, Ar1Params>)
          return simulate_ar1(opt.n, params, opt.seed);
        else
          return simulate_larch(opt.n, params, opt.seed);
      },
      process);

  const Statistic stat = parse_stat(opt.stat);
  const Scheme scheme = parse_scheme(opt.scheme);
  const EstimatorKind kind = parse_kind(opt.estimator);

  std::vector<double> grid;
  if (auto g = explicit_grid(opt, 2001)) {
    grid = std::move(*g);
  } else {
    const WindowPlan plan = make_windows(series.size(), opt.b, scheme);
    const auto stats = window_statistics(series.values, plan, stat);
    grid = default_grid(stats, opt.epsilon);
  }

  const EstimatorCurve curve =
      kind == EstimatorKind::smooth
          ? smooth_estimate(series, opt.b, opt.epsilon, stat, scheme, std::move(grid))
          : rough_estimate(series, opt.b, stat, scheme, std::move(grid));

  std::ostringstream os;
  if (opt.format == "json") {
    os << curve_to_json(curve).dump(2) << '\n';
  } else {
    write_curve_csv(os, curve);
  }
  write_text(opt.output, os.str());
  return 0;
}

int cmd_experiment(const CLI::App& sub, Options& opt) {
  apply_config(sub, opt);

  ExperimentConfig config;
  config.process = make_process(opt);
  config.n = opt.n;
  config.b = opt.b;
  config.epsilon = opt.epsilon;
  config.scheme = parse_scheme(opt.scheme);
  config.estimator_kind = parse_kind(opt.estimator);
  if (opt.normalization == "theoretical") {
    config.normalization.mode = NormalizationSpec::Mode::theoretical;
  } else {
    config.normalization.mode = NormalizationSpec::Mode::estimated;
    config.normalization.pin = QuantilePinning{opt.t1, opt.t2};
  }
  config.replications = opt.reps;
  config.base_seed = opt.seed;
  if (auto g = explicit_grid(opt, 401)) {
    config.grid = std::move(*g);
  } else {
    config.grid = default_experiment_grid(config.process);
  }

  const MonteCarloSummary summary = run_experiment(config);

  std::function<double(double)> reference;
  if (const auto* ar1 = std::get_if<Ar1Params>(&config.process)) {
    const int r = ar1->r;
    reference = [r](double x) { return ar1_limit_cdf_K(r, x); };
  }

  std::ostringstream os;
  if (opt.format == "json") {
    os << summary_to_json(config, summary).dump(2) << '\n';
  } else {
    write_summary_csv(os, summary, reference ? &reference : nullptr);
  }
  write_text(opt.output, os.str());
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  Options opt;
  CLI::App app{"Subsampling estimators for maxima of weakly dependent time series"};
  app.require_subcommand(1);

  CLI::App* sim = app.add_subcommand("simulate", "Simulate a process realization");
  add_process_options(*sim, opt);

  CLI::App* est = app.add_subcommand("estimate", "Subsample CDF estimate of a statistic");
  add_process_options(*est, opt);
  add_estimator_options(*est, opt);
  est->add_option("--stat", opt.stat, "window statistic")
      ->check(CLI::IsMember({"max", "normalized-mean"}));

  CLI::App* exp = app.add_subcommand("experiment", "Monte Carlo replication study");
  add_process_options(*exp, opt);
  add_estimator_options(*exp, opt);
  exp->add_option("--reps", opt.reps, "number of replications");
  exp->add_option("--normalization", opt.normalization, "normalization mode")
      ->check(CLI::IsMember({"estimated", "theoretical"}));
  exp->add_option("--t1", opt.t1, "lower pinning quantile");
  exp->add_option("--t2", opt.t2, "upper pinning quantile");

  try {
    app.parse(argc, argv);
    if (sim->parsed()) return cmd_simulate(*sim, opt);
    if (est->parsed()) return cmd_estimate(*est, opt);
    return cmd_experiment(*exp, opt);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace wdsub
