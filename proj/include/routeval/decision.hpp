#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "routeval/coefficients.hpp"
#include "routeval/development.hpp"
#include "routeval/evaluation.hpp"
#include "routeval/route.hpp"
#include "routeval/scenario.hpp"

namespace routeval {

struct CandidateOrigin {
  enum class Kind { planned, predicted, return_from, user };
  Kind kind = Kind::user;
  std::size_t turn_point = 0;  // actual waypoint index, return_from only

  std::string describe() const;
};

struct Candidate {
  Route route;
  CoefficientVector vector;
  CandidateOrigin origin;
};

/// Safety criterion S and optimality criterion w_D*D + w_T*T + w_C*C.
struct CriteriaSplit {
  double safety = 0.0;
  double optimality = 0.0;

  static CriteriaSplit of(const CoefficientVector& v, const Weights& w);
};

/// a is at least as good in both criteria and strictly better in one.
bool dominates(const CriteriaSplit& a, const CriteriaSplit& b);

/// Indices (ascending) of the non-dominated members.
std::vector<std::size_t> pareto_front(std::span<const CriteriaSplit> points);

/// Safety first: among Pareto-optimal candidates keep those with the highest
/// safety (1e-9 ties), then the highest optimality (1e-9 ties), then the
/// fewest waypoints, then the smallest route id. Returns the winner's index.
/// Throws std::invalid_argument on an empty list.
std::size_t select_best(std::span<const Candidate> candidates, const Weights& weights);

/// The scenario's planned route as a candidate.
Candidate planned_candidate(const Scenario& scenario, const EvalConfig& config);

/// For each turn point k: the actual route through k, a direct leg to the
/// planned waypoint after the one governing k (at that leg's planned speed),
/// then the planned remainder with its speeds and waits. ETAs are recomputed
/// from the actual ETD at k. Throws std::invalid_argument for turn points
/// beyond the sailed prefix or without a rejoin target.
std::vector<Candidate> generate_return_routes(const Scenario& scenario, std::span<const std::size_t> turn_points,
                                              const EvalConfig& config);

/// Candidate vectors as a development series numbered 1.. in the given order
/// (the planned route first, then return routes by turn point).
DevelopmentSeries whatif_series(std::span<const Candidate> ordered);

}  // namespace routeval
