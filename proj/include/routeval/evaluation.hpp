#pragma once

#include <cstddef>
#include <optional>

#include "routeval/coefficients.hpp"
#include "routeval/route.hpp"
#include "routeval/safety.hpp"
#include "routeval/scenario.hpp"

namespace routeval {

/// Maximum tolerated drop of each coefficient relative to the planned route.
struct Thresholds {
  double S = 0.05;
  double D = 0.1;
  double T = 0.1;
  double C = 0.25;

  void validate() const;
  /// Parses "s,d,t,c". Throws std::invalid_argument.
  static Thresholds parse(std::string_view text);
};

struct EvalConfig {
  Weights weights;
  Thresholds thresholds;
  SafetyConfig safety;
  double trend_epsilon = 0.02;
};

/// How much of the actual route a scored route contains. Scenario safety
/// annotations are keyed on this; the estimator ignores it.
struct SailedExtent {
  bool planned = false;
  std::size_t last_actual_index = 0;

  static SailedExtent planned_route() { return {true, 0}; }
  static SailedExtent through(std::size_t index) { return {false, index}; }
};

/// Collision probability for a route of this scenario: the scenario's safety
/// annotation when present, otherwise the estimator in `cfg` (sigma resolved
/// from the ship profile).
double scenario_p_collide(const Scenario& scenario, const Route& route, SailedExtent extent, const SafetyConfig& cfg);

CoefficientVector score_route(const Scenario& scenario, const Route& route, SailedExtent extent,
                              const EvalConfig& config);

}  // namespace routeval
