#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "icsie/budget.hpp"
#include "icsie/graph.hpp"
#include "icsie/linalg.hpp"

namespace icsie {

enum class SimulationMode { Random, Exhaustive };

struct SimulationConfig {
  SimulationMode mode = SimulationMode::Random;
  /// Messages drawn in random mode.
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  /// Largest side-information error weight injected; defaults to delta_s.
  std::optional<std::size_t> side_errors;
  /// Witnesses kept in the report.
  std::size_t max_failures = 10;
};

struct SimulationFailure {
  std::size_t receiver;
  Vector message;
  Vector x_hat;  // the receiver's cache, indexed like X_i
  std::string detail;
};

struct ReceiverStats {
  std::uint64_t trials = 0;
  std::uint64_t recovered = 0;

  double rate() const { return trials ? static_cast<double>(recovered) / static_cast<double>(trials) : 1.0; }
};

struct SimulationReport {
  /// "decoder" when every trial ran the syndrome decoder, "sphere-oracle" for
  /// channel-error instances where only decodability is checked.
  std::string method;
  std::vector<ReceiverStats> receivers;
  bool passed = true;
  std::uint64_t failure_count = 0;
  std::vector<SimulationFailure> failures;

  std::string to_json() const;
};

/// Broadcasts y = xG and lets every receiver decode with a corrupted cache.
/// With delta_c > 0 no decoder exists, so the report only states whether the
/// Hamming-sphere oracle accepts G. Exhaustive mode walks every message and
/// every side-error pattern up to the weight limit.
SimulationReport simulate(const ProblemSpec& spec, const Matrix& g, const SimulationConfig& config,
                          const Budget& budget = {});

}  // namespace icsie
