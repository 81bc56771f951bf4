#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "routeval/coefficients.hpp"
#include "routeval/evaluation.hpp"
#include "routeval/route.hpp"
#include "routeval/scenario.hpp"

namespace routeval {

enum class Provenance { sailed, predicted };

std::string_view to_string(Provenance p);

/// Full start-to-destination route: the sailed prefix of the actual route
/// through split_index followed by the forecast remainder.
struct PredictedRoute {
  Route composite;
  std::size_t split_index = 0;
  std::vector<Provenance> provenance;
};

/// Forecast under persistent deviation: from actual waypoint `at`, replay the
/// planned maneuvers (course, distance, speed, wait) of the corresponding
/// planned waypoint and all following ones until the destination. Times are
/// propagated from the actual waypoint's ETD.
///
/// Throws std::invalid_argument when `at` is outside the actual route, has no
/// explicit correspondence pair, or corresponds to the planned destination.
PredictedRoute predict(const Scenario& scenario, std::size_t at);

/// Coefficients of the composite route at `at`.
CoefficientVector evaluate_prediction(const Scenario& scenario, std::size_t at, const EvalConfig& config);

enum class Coefficient { safety, distance, time, simplicity };

std::string_view to_string(Coefficient c);

struct Acceptability {
  bool acceptable = true;
  std::vector<Coefficient> reasons;  // coefficients whose drop exceeds the threshold
};

/// Compares predicted against planned coefficients. A drop strictly above the
/// threshold advises replanning; a predicted S of zero always does.
Acceptability acceptability(const CoefficientVector& predicted, const CoefficientVector& planned,
                            const Thresholds& thresholds);

}  // namespace routeval
