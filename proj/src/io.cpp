#include "wdsub/io.hpp"

#include <cstdio>
#include <ostream>

namespace wdsub {

using nlohmann::json;

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_series_csv(std::ostream& os, const TimeSeries& series) {
  os << "t,value\n";
  for (std::size_t t = 0; t < series.values.size(); ++t) {
    os << (t + 1) << ',' << format_double(series.values[t]) << '\n';
  }
}

void write_curve_csv(std::ostream& os, const EstimatorCurve& curve) {
  os << "x,value\n";
  for (std::size_t k = 0; k < curve.grid.size(); ++k) {
    os << format_double(curve.grid[k]) << ',' << format_double(curve.values[k]) << '\n';
  }
}

void write_summary_csv(std::ostream& os, const MonteCarloSummary& summary,
                       const std::function<double(double)>* reference) {
  os << (reference != nullptr ? "x,mean,q05,q95,K\n" : "x,mean,q05,q95\n");
  for (std::size_t k = 0; k < summary.grid.size(); ++k) {
    os << format_double(summary.grid[k]) << ',' << format_double(summary.mean_curve[k])
       << ',' << format_double(summary.q_low[k]) << ',' << format_double(summary.q_high[k]);
    if (reference != nullptr) os << ',' << format_double((*reference)(summary.grid[k]));
    os << '\n';
  }
}

json series_to_json(const TimeSeries& series) {
  return json{{"model", series.model_tag},
              {"seed", series.seed},
              {"n", series.values.size()},
              {"values", series.values}};
}

json curve_to_json(const EstimatorCurve& curve) {
  json j{{"kind", to_string(curve.kind)},
         {"b", curve.b},
         {"scheme", to_string(curve.scheme)},
         {"grid", curve.grid},
         {"values", curve.values}};
  if (curve.kind == EstimatorKind::smooth) j["epsilon"] = curve.epsilon;
  return j;
}

json config_to_json(const ExperimentConfig& config) {
  json j;
  if (const auto* ar1 = std::get_if<Ar1Params>(&config.process)) {
    j["model"] = "ar1";
    j["r"] = ar1->r;
    j["x0"] = ar1->x0_mode == Ar1Params::Start::uniform01 ? "uniform01" : "fixed";
    if (ar1->x0_mode == Ar1Params::Start::fixed) j["x0_value"] = ar1->x0_value;
  } else {
    const auto& larch = std::get<LarchParams>(config.process);
    j["model"] = "larch";
    j["a"] = larch.a;
    j["input"] = larch.input == LarchParams::Input::rademacher ? "rademacher" : "parabolic";
    if (larch.input == LarchParams::Input::parabolic) j["rho"] = larch.rho;
    j["burn_in"] = larch.burn_in;
  }
  j["n"] = config.n;
  j["b"] = config.b;
  j["epsilon"] = config.epsilon;
  j["scheme"] = to_string(config.scheme);
  j["estimator"] = to_string(config.estimator_kind);
  if (config.normalization.mode == NormalizationSpec::Mode::estimated) {
    j["normalization"] = "estimated";
    j["t1"] = config.normalization.pin.t1;
    j["t2"] = config.normalization.pin.t2;
  } else {
    j["normalization"] = "theoretical";
  }
  j["reps"] = config.replications;
  j["seed"] = config.base_seed;
  return j;
}

json summary_to_json(const ExperimentConfig& config, const MonteCarloSummary& summary) {
  json j{{"config", config_to_json(config)},
         {"grid", summary.grid},
         {"mean", summary.mean_curve},
         {"q_low", summary.q_low},
         {"q_high", summary.q_high},
         {"failures", summary.failures}};
  if (summary.sup_distance_stats) {
    j["sup_distance_stats"] = json{{"mean", summary.sup_distance_stats->mean},
                                   {"max", summary.sup_distance_stats->max}};
  } else {
    j["sup_distance_stats"] = nullptr;
  }
  return j;
}

}  // namespace wdsub
