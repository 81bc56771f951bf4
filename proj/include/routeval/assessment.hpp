#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "routeval/coefficients.hpp"
#include "routeval/decision.hpp"
#include "routeval/development.hpp"
#include "routeval/evaluation.hpp"
#include "routeval/prediction.hpp"
#include "routeval/scenario.hpp"

namespace routeval {

/// Everything known about the voyage at one cursor position. Both the CLI and
/// the HTTP service build their answers from this.
struct Assessment {
  std::size_t cursor = 0;
  PredictedRoute route;  // composite; the sailed route alone once the destination is reached
  CoefficientVector vector;
  CoefficientVector planned_vector;
  Acceptability acceptability;
  std::optional<std::size_t> first_unsafe_leg;  // deterministic check on the composite
  bool reached_destination = false;
};

/// Assesses the voyage with the actual route sailed through `cursor`.
/// Throws std::invalid_argument when the cursor is out of range or has no
/// correspondence pair.
Assessment assess(const Scenario& scenario, std::size_t cursor, const EvalConfig& config);

/// First `count` waypoints of `route` as a route of its own.
Route route_prefix(const Route& route, std::size_t count);

nlohmann::json to_json(const CoefficientVector& v);
nlohmann::json to_json(const Acceptability& a);
nlohmann::json to_json(const TrendReport& r);
/// Cursor, vectors, acceptability and unsafe-leg information (no geometry).
nlohmann::json summary_json(const Assessment& a);

/// Planned candidate plus return routes for the given turn points, ordered by
/// turn point, with the development trend across them and the selected route.
struct WhatIf {
  std::vector<Candidate> candidates;
  std::optional<TrendReport> trend;
  std::size_t selected = 0;
};

/// Turn tokens are resolved with resolve_actual_index; duplicates are rejected.
WhatIf run_whatif(const Scenario& scenario, std::span<const std::string> turn_tokens, const EvalConfig& config);
nlohmann::json to_json(const WhatIf& w);
std::string whatif_csv(const WhatIf& w);
std::string whatif_svg(const WhatIf& w);

}  // namespace routeval
