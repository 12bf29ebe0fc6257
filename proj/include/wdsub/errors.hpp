#pragma once

#include <stdexcept>

namespace wdsub {

// Argument/set-up errors. The CLI maps these to usage failures (exit 2).
struct InvalidLength : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidBlock : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidBandwidth : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidProbability : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Data-dependent failures. The CLI maps these to runtime failures (exit 1).
struct QuantileOutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DegenerateScale : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ExperimentFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wdsub
