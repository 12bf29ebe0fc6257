#pragma once

#include <functional>
#include <iosfwd>
#include <string>

#include "json.hpp"
#include "wdsub/montecarlo.hpp"

namespace wdsub {

// Decimal with 17 significant digits; enough to reload any double exactly.
std::string format_double(double x);

// CSV emitters: header row, comma separator, "\n" line endings. The summary
// gains a K column when a reference CDF is supplied.
void write_series_csv(std::ostream& os, const TimeSeries& series);
void write_curve_csv(std::ostream& os, const EstimatorCurve& curve);
void write_summary_csv(std::ostream& os, const MonteCarloSummary& summary,
                       const std::function<double(double)>* reference);

nlohmann::json series_to_json(const TimeSeries& series);
nlohmann::json curve_to_json(const EstimatorCurve& curve);
nlohmann::json config_to_json(const ExperimentConfig& config);
nlohmann::json summary_to_json(const ExperimentConfig& config,
                               const MonteCarloSummary& summary);

}  // namespace wdsub
