#include "routeval/prediction.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/core.h>

namespace routeval {

std::string_view to_string(Provenance p) { return p == Provenance::sailed ? "sailed" : "predicted"; }

std::string_view to_string(Coefficient c) {
  switch (c) {
    case Coefficient::safety: return "safety";
    case Coefficient::distance: return "distance";
    case Coefficient::time: return "time";
    case Coefficient::simplicity: return "simplicity";
  }
  return "safety";
}

PredictedRoute predict(const Scenario& scenario, std::size_t at) {
  const Route& actual = scenario.actual;
  const Route& planned = scenario.planned;
  if (at >= actual.size()) {
    throw std::invalid_argument(fmt::format("waypoint {} is beyond the sailed prefix ({} waypoints)", at, actual.size()));
  }
  const auto corresponding = scenario.correspondence.planned_for(at);
  if (!corresponding) {
    throw std::invalid_argument(fmt::format("actual waypoint {} has no corresponding planned waypoint", at));
  }
  const std::size_t first_maneuver = *corresponding;
  if (first_maneuver + 1 >= planned.size()) {
    throw std::invalid_argument(
        fmt::format("actual waypoint {} corresponds to the planned destination; nothing left to predict", at));
  }

  std::vector<WaypointInput> inputs;
  inputs.reserve(at + planned.size() - first_maneuver);
  for (std::size_t i = 0; i <= at; ++i) {
    const Waypoint& w = actual[i];
    WaypointInput in{w.position, w.eta, w.etd, std::nullopt, w.name};
    if (i < at) in.speed_kn = w.leg->speed_kn;
    inputs.push_back(std::move(in));
  }
  inputs.back().speed_kn = planned[first_maneuver].leg->speed_kn;

  geo::GeoPoint position = actual[at].position;
  Timestamp departure = actual[at].etd;
  for (std::size_t m = first_maneuver; m + 1 < planned.size(); ++m) {
    const Leg& maneuver = *planned[m].leg;
    const Waypoint& next_planned = planned[m + 1];
    position = geo::project(position, maneuver.course_deg, maneuver.distance_nmi, scenario.model);
    const Timestamp eta = departure + maneuver.duration_s();
    const Timestamp etd = eta + next_planned.wait_s();
    WaypointInput in{position, eta, etd, std::nullopt, {}};
    if (next_planned.leg) in.speed_kn = next_planned.leg->speed_kn;
    inputs.push_back(std::move(in));
    departure = etd;
  }

  PredictedRoute out{Route::derive(actual.id() + "+forecast", RouteLabel::predicted, inputs, scenario.model), at, {}};
  out.provenance.assign(out.composite.size(), Provenance::predicted);
  std::fill_n(out.provenance.begin(), at + 1, Provenance::sailed);
  return out;
}

CoefficientVector evaluate_prediction(const Scenario& scenario, std::size_t at, const EvalConfig& config) {
  const PredictedRoute predicted = predict(scenario, at);
  return score_route(scenario, predicted.composite, SailedExtent::through(at), config);
}

Acceptability acceptability(const CoefficientVector& predicted, const CoefficientVector& planned,
                            const Thresholds& thresholds) {
  thresholds.validate();
  Acceptability out;
  const auto check = [&](Coefficient c, double pred, double plan, double limit) {
    if (plan - pred > limit) out.reasons.push_back(c);
  };
  check(Coefficient::safety, predicted.S, planned.S, thresholds.S);
  if (predicted.S <= 0.0 && (out.reasons.empty() || out.reasons.front() != Coefficient::safety)) {
    out.reasons.insert(out.reasons.begin(), Coefficient::safety);
  }
  check(Coefficient::distance, predicted.D, planned.D, thresholds.D);
  check(Coefficient::time, predicted.T, planned.T, thresholds.T);
  check(Coefficient::simplicity, predicted.C, planned.C, thresholds.C);
  out.acceptable = out.reasons.empty();
  return out;
}

}  // namespace routeval
