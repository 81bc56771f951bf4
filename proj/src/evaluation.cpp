#include "routeval/evaluation.hpp"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>

namespace routeval {

void Thresholds::validate() const {
  for (const double t : {S, D, T, C}) {
    if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("thresholds must be finite and non-negative");
  }
}

Thresholds Thresholds::parse(std::string_view text) {
  std::vector<double> values;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument(fmt::format("bad threshold '{}'", item));
    }
    if (used != item.size()) throw std::invalid_argument(fmt::format("bad threshold '{}'", item));
    values.push_back(v);
  }
  if (values.size() != 4) throw std::invalid_argument("expected four comma-separated thresholds S,D,T,C");
  Thresholds t{values[0], values[1], values[2], values[3]};
  t.validate();
  return t;
}

double scenario_p_collide(const Scenario& scenario, const Route& route, SailedExtent extent, const SafetyConfig& cfg) {
  if (scenario.safety_annotation) {
    const auto& a = *scenario.safety_annotation;
    const double s = extent.planned ? a.planned_s : a.for_sailed_through(extent.last_actual_index);
    return 1.0 - s;
  }
  return p_collide(route, scenario.obstacles, cfg.resolved(scenario.ship));
}

CoefficientVector score_route(const Scenario& scenario, const Route& route, SailedExtent extent,
                              const EvalConfig& config) {
  const double p = scenario_p_collide(scenario, route, extent, config.safety);
  return compute_coefficients(route, scenario.ship, p, config.weights);
}

}  // namespace routeval
