#include "routeval/decision.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include <fmt/core.h>

namespace routeval {

namespace {

constexpr double kTieTolerance = 1e-9;

}  // namespace

std::string CandidateOrigin::describe() const {
  switch (kind) {
    case Kind::planned: return "planned";
    case Kind::predicted: return "predicted";
    case Kind::return_from: return fmt::format("return_from({})", turn_point);
    case Kind::user: return "user";
  }
  return "user";
}

CriteriaSplit CriteriaSplit::of(const CoefficientVector& v, const Weights& w) {
  return CriteriaSplit{v.S, w.D * v.D + w.T * v.T + w.C * v.C};
}

bool dominates(const CriteriaSplit& a, const CriteriaSplit& b) {
  return a.safety >= b.safety && a.optimality >= b.optimality && (a.safety > b.safety || a.optimality > b.optimality);
}

std::vector<std::size_t> pareto_front(std::span<const CriteriaSplit> points) {
  // Sweep in descending safety. A point survives iff it has the best
  // optimality within its safety group and beats every strictly safer point.
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a].safety != points[b].safety) return points[a].safety > points[b].safety;
    return points[a].optimality > points[b].optimality;
  });
  std::vector<std::size_t> front;
  bool have_safer = false;
  double best_safer_opt = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() && points[order[j]].safety == points[order[i]].safety) ++j;
    const double group_best = points[order[i]].optimality;
    if (!have_safer || group_best > best_safer_opt) {
      for (std::size_t k = i; k < j && points[order[k]].optimality == group_best; ++k) front.push_back(order[k]);
    }
    if (!have_safer || group_best > best_safer_opt) best_safer_opt = group_best;
    have_safer = true;
    i = j;
  }
  std::sort(front.begin(), front.end());
  return front;
}

std::size_t select_best(std::span<const Candidate> candidates, const Weights& weights) {
  if (candidates.empty()) throw std::invalid_argument("select_best needs at least one candidate");
  std::vector<CriteriaSplit> splits;
  splits.reserve(candidates.size());
  for (const auto& c : candidates) splits.push_back(CriteriaSplit::of(c.vector, weights));

  std::vector<std::size_t> pool = pareto_front(splits);
  const auto keep_near_max = [&](auto value) {
    double best = value(pool.front());
    for (const auto idx : pool) best = std::max(best, value(idx));
    std::erase_if(pool, [&](std::size_t idx) { return value(idx) < best - kTieTolerance; });
  };
  keep_near_max([&](std::size_t idx) { return splits[idx].safety; });
  keep_near_max([&](std::size_t idx) { return splits[idx].optimality; });

  const auto key = [&](std::size_t idx) {
    const auto& c = candidates[idx];
    return std::make_tuple(c.route.size(), c.route.id(), -c.vector.S, -splits[idx].optimality,
                           c.origin.describe());
  };
  return *std::min_element(pool.begin(), pool.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
}

Candidate planned_candidate(const Scenario& scenario, const EvalConfig& config) {
  Route route = scenario.planned.relabeled(scenario.planned.id(), RouteLabel::candidate);
  CoefficientVector v = score_route(scenario, route, SailedExtent::planned_route(), config);
  return Candidate{std::move(route), v, CandidateOrigin{CandidateOrigin::Kind::planned, 0}};
}

std::vector<Candidate> generate_return_routes(const Scenario& scenario, std::span<const std::size_t> turn_points,
                                              const EvalConfig& config) {
  const Route& actual = scenario.actual;
  const Route& planned = scenario.planned;
  std::vector<Candidate> out;
  out.reserve(turn_points.size());
  for (const std::size_t k : turn_points) {
    if (k >= actual.size()) {
      throw std::invalid_argument(
          fmt::format("turn point {} is beyond the sailed prefix ({} waypoints)", k, actual.size()));
    }
    const auto governing = scenario.correspondence.governing_planned(k);
    if (!governing || *governing + 1 >= planned.size()) {
      throw std::invalid_argument(fmt::format("turn point {} has no planned waypoint to rejoin", k));
    }
    const std::size_t target = *governing + 1;

    std::vector<WaypointInput> inputs;
    for (std::size_t i = 0; i <= k; ++i) {
      const Waypoint& w = actual[i];
      WaypointInput in{w.position, w.eta, w.etd, std::nullopt, w.name};
      if (i < k) in.speed_kn = w.leg->speed_kn;
      inputs.push_back(std::move(in));
    }
    const double rejoin_speed = planned[target - 1].leg->speed_kn;
    inputs.back().speed_kn = rejoin_speed;

    geo::GeoPoint from = actual[k].position;
    Timestamp departure = actual[k].etd;
    double speed = rejoin_speed;
    for (std::size_t m = target; m < planned.size(); ++m) {
      const Waypoint& p = planned[m];
      const double dist = geo::distance(from, p.position, scenario.model);
      const Timestamp eta = departure + dist / speed * 3600.0;
      const Timestamp etd = eta + p.wait_s();
      WaypointInput in{p.position, eta, etd, std::nullopt, p.name};
      if (p.leg) {
        in.speed_kn = p.leg->speed_kn;
        speed = p.leg->speed_kn;
      }
      inputs.push_back(std::move(in));
      from = p.position;
      departure = etd;
    }

    const std::string label = actual[k].name.empty() ? std::to_string(k) : actual[k].name;
    Route route = Route::derive(fmt::format("return-from-{}", label), RouteLabel::candidate, inputs, scenario.model);
    CoefficientVector v = score_route(scenario, route, SailedExtent::through(k), config);
    out.push_back(Candidate{std::move(route), v, CandidateOrigin{CandidateOrigin::Kind::return_from, k}});
  }
  return out;
}

DevelopmentSeries whatif_series(std::span<const Candidate> ordered) {
  DevelopmentSeries series;
  for (std::size_t i = 0; i < ordered.size(); ++i) series.push(SeriesEntry{i + 1, ordered[i].vector});
  return series;
}

}  // namespace routeval
