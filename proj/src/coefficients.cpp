#include "routeval/coefficients.hpp"

#include <cmath>
#include <iostream>
#include <sstream>
#include <vector>

#include <fmt/core.h>

namespace routeval {

namespace {

constexpr double kDistanceClampTolerance = 1e-3;

}  // namespace

void Weights::validate() const {
  for (const double w : {S, D, T, C}) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("weights must be finite and non-negative");
  }
  if (S + D + T + C <= 0.0) throw std::invalid_argument("weights must not all be zero");
}

Weights Weights::parse(std::string_view text) {
  std::vector<double> values;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument(fmt::format("bad weight '{}'", item));
    }
    if (used != item.size()) throw std::invalid_argument(fmt::format("bad weight '{}'", item));
    values.push_back(v);
  }
  if (values.size() != 4) throw std::invalid_argument("expected four comma-separated weights S,D,T,C");
  Weights w{values[0], values[1], values[2], values[3]};
  w.validate();
  return w;
}

BestRouteReference BestRouteReference::for_route(const Route& route, const ShipProfile& ship) {
  ship.validate();
  const double l_e = geo::distance(route.front().position, route.back().position, route.model());
  if (!(l_e > 0.0)) throw std::domain_error("route start and destination coincide; best route is undefined");
  return BestRouteReference{l_e, l_e / ship.v_max_kn};
}

double coeff_distance(const Route& route, const BestRouteReference& ref) {
  const double d = ref.l_e_nmi / route.length_nmi();
  if (d > 1.0) {
    if (d - 1.0 > kDistanceClampTolerance) {
      throw std::domain_error(fmt::format("route '{}' is shorter than its best route (D = {})", route.id(), d));
    }
    std::clog << fmt::format("warning: route '{}' D = {:.6f} clamped to 1\n", route.id(), d);
    return 1.0;
  }
  return d;
}

double coeff_time(const Route& route, const BestRouteReference& ref) {
  double t_r = 0.0;
  for (const auto& w : route.waypoints()) {
    if (!w.leg) continue;
    t_r += w.leg->distance_nmi / w.leg->speed_kn + w.wait_s() / 3600.0;
  }
  return ref.t_e_h / t_r;
}

double coeff_simplicity(std::size_t waypoint_count) {
  if (waypoint_count < 2) throw std::invalid_argument("simplicity needs at least 2 waypoints");
  return 2.0 / static_cast<double>(waypoint_count);
}

double coeff_simplicity(const Route& route) { return coeff_simplicity(route.size()); }

double coeff_safety(double p_collide) {
  if (!(p_collide >= 0.0 && p_collide <= 1.0)) throw std::invalid_argument("collision probability outside [0, 1]");
  return 1.0 - p_collide;
}

double quality(const CoefficientVector& v, const Weights& w) {
  return w.S * v.S + w.D * v.D + w.T * v.T + w.C * v.C;
}

CoefficientVector with_quality(CoefficientVector v, const Weights& w) {
  v.quality = quality(v, w);
  return v;
}

bool best_route_check(const CoefficientVector& v) { return v.sum() >= 4.0 - 1e-9; }

CoefficientVector compute_coefficients(const Route& route, const ShipProfile& ship, double p_collide,
                                       const Weights& weights) {
  weights.validate();
  const auto ref = BestRouteReference::for_route(route, ship);
  CoefficientVector v{coeff_safety(p_collide), coeff_distance(route, ref), coeff_time(route, ref),
                      coeff_simplicity(route), 0.0};
  return with_quality(v, weights);
}

}  // namespace routeval
