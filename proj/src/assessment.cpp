#include "routeval/assessment.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/core.h>

#include "routeval/safety.hpp"

namespace routeval {

Route route_prefix(const Route& route, std::size_t count) {
  if (count == 0 || count > route.size()) throw std::out_of_range("route prefix length out of range");
  if (count == route.size()) return route;
  auto inputs = route.inputs();
  inputs.resize(count);
  inputs.back().speed_kn.reset();
  return Route::derive(route.id(), route.label(), inputs, route.model(), 1);
}

Assessment assess(const Scenario& scenario, std::size_t cursor, const EvalConfig& config) {
  if (cursor >= scenario.actual.size()) {
    throw std::invalid_argument(
        fmt::format("cursor {} is beyond the sailed prefix ({} waypoints)", cursor, scenario.actual.size()));
  }
  const auto paired = scenario.correspondence.planned_for(cursor);
  if (!paired) {
    throw std::invalid_argument(fmt::format("actual waypoint {} has no corresponding planned waypoint", cursor));
  }

  const bool at_destination = *paired + 1 == scenario.planned.size();
  Assessment out{.cursor = cursor,
                 .route = PredictedRoute{route_prefix(scenario.actual, cursor + 1), cursor, {}},
                 .vector = {},
                 .planned_vector = {},
                 .acceptability = {},
                 .first_unsafe_leg = std::nullopt,
                 .reached_destination = at_destination};
  if (at_destination) {
    out.route.provenance.assign(out.route.composite.size(), Provenance::sailed);
  } else {
    out.route = predict(scenario, cursor);
  }
  out.vector = score_route(scenario, out.route.composite, SailedExtent::through(cursor), config);
  out.planned_vector = score_route(scenario, scenario.planned, SailedExtent::planned_route(), config);
  out.acceptability = acceptability(out.vector, out.planned_vector, config.thresholds);
  out.first_unsafe_leg = first_unsafe_leg(out.route.composite, scenario.obstacles);
  return out;
}

nlohmann::json to_json(const CoefficientVector& v) {
  return {{"S", v.S}, {"D", v.D}, {"T", v.T}, {"C", v.C}, {"quality", v.quality}};
}

nlohmann::json to_json(const Acceptability& a) {
  nlohmann::json reasons = nlohmann::json::array();
  for (const auto r : a.reasons) reasons.push_back(std::string(to_string(r)));
  return {{"status", a.acceptable ? "acceptable" : "replan_advised"}, {"reasons", std::move(reasons)}};
}

nlohmann::json to_json(const TrendReport& r) {
  return {{"trend", std::string(to_string(r.trend))},
          {"net_quality_change", r.net_quality_change},
          {"declining_steps", r.declining_steps},
          {"steps", r.steps}};
}

nlohmann::json summary_json(const Assessment& a) {
  nlohmann::json j;
  j["cursor"] = a.cursor;
  j["vector"] = to_json(a.vector);
  j["planned_vector"] = to_json(a.planned_vector);
  j["acceptability"] = to_json(a.acceptability);
  j["reached_destination"] = a.reached_destination;
  if (a.first_unsafe_leg) {
    j["first_unsafe_leg"] = *a.first_unsafe_leg;
    j["unsafe_leg_sailed"] = *a.first_unsafe_leg < a.cursor;
  } else {
    j["first_unsafe_leg"] = nullptr;
  }
  return j;
}

WhatIf run_whatif(const Scenario& scenario, std::span<const std::string> turn_tokens, const EvalConfig& config) {
  if (turn_tokens.empty()) throw std::invalid_argument("at least one turn point is required");
  std::vector<std::size_t> turns;
  turns.reserve(turn_tokens.size());
  for (const auto& token : turn_tokens) turns.push_back(resolve_actual_index(scenario, token));
  std::sort(turns.begin(), turns.end());
  if (const auto dup = std::adjacent_find(turns.begin(), turns.end()); dup != turns.end()) {
    throw std::invalid_argument(fmt::format("turn point {} given more than once", *dup));
  }

  WhatIf out;
  out.candidates.push_back(planned_candidate(scenario, config));
  for (auto& c : generate_return_routes(scenario, turns, config)) out.candidates.push_back(std::move(c));
  out.trend = analyze_trend(whatif_series(out.candidates), config.trend_epsilon);
  out.selected = select_best(out.candidates, config.weights);
  return out;
}

nlohmann::json to_json(const WhatIf& w) {
  nlohmann::json candidates = nlohmann::json::array();
  for (std::size_t i = 0; i < w.candidates.size(); ++i) {
    const auto& c = w.candidates[i];
    nlohmann::json j{{"measurement", i + 1},
                     {"id", c.route.id()},
                     {"origin", c.origin.describe()},
                     {"waypoints", c.route.size()},
                     {"vector", to_json(c.vector)},
                     {"route", route_to_json(c.route)}};
    if (c.origin.kind == CandidateOrigin::Kind::return_from) j["turn_point"] = c.origin.turn_point;
    candidates.push_back(std::move(j));
  }
  nlohmann::json out{{"candidates", std::move(candidates)},
                     {"selected", w.candidates[w.selected].route.id()},
                     {"selected_index", w.selected}};
  out["classification"] = w.trend ? nlohmann::json(to_json(*w.trend)) : nlohmann::json(nullptr);
  return out;
}

std::string whatif_csv(const WhatIf& w) {
  std::string out = "route,turn_point,waypoints,S,D,T,C,quality\n";
  for (const auto& c : w.candidates) {
    const auto& v = c.vector;
    const std::string turn =
        c.origin.kind == CandidateOrigin::Kind::return_from ? std::to_string(c.origin.turn_point) : std::string();
    out += fmt::format("{},{},{},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f}\n", c.route.id(), turn, c.route.size(), v.S,
                       v.D, v.T, v.C, v.quality);
  }
  if (w.trend) out += fmt::format("classification,{}\n", to_string(w.trend->trend));
  out += fmt::format("selected,{}\n", w.candidates[w.selected].route.id());
  return out;
}

std::string whatif_svg(const WhatIf& w) {
  std::vector<CognitiveImage> images;
  std::vector<std::string> labels;
  for (const auto& c : w.candidates) {
    images.push_back(render_image(c.vector));
    labels.push_back(c.route.id());
  }
  return render_svg(images, labels);
}

}  // namespace routeval
