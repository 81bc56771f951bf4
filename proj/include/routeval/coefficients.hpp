#pragma once

#include <string>
#include <string_view>

#include "routeval/route.hpp"
#include "routeval/scenario.hpp"

namespace routeval {

/// Safety, distance, time and simplicity of a route relative to the best
/// possible route (straight start-to-destination leg sailed at v_max), plus
/// their weighted sum.
struct CoefficientVector {
  double S = 0.0;  // 1 - P(collide), in [0, 1]
  double D = 0.0;  // l_e / l_r, in (0, 1]
  double T = 0.0;  // t_e / t_r, > 0, may exceed 1
  double C = 0.0;  // 2 / waypoint count, in (0, 1]
  double quality = 0.0;

  double sum() const { return S + D + T + C; }
};

/// Non-negative weights for the quality sum; not all zero.
struct Weights {
  double S = 1.0;
  double D = 1.0;
  double T = 1.0;
  double C = 1.0;

  void validate() const;
  /// Parses "a,b,c,d" in S,D,T,C order. Throws std::invalid_argument.
  static Weights parse(std::string_view text);
};

struct BestRouteReference {
  double l_e_nmi = 0.0;
  double t_e_h = 0.0;

  /// Straight leg between the route's first and last waypoint under the route's model.
  static BestRouteReference for_route(const Route& route, const ShipProfile& ship);
};

/// D = l_e / l_r. Values above 1 by less than 0.1% (distance-model mismatch)
/// are clamped to 1 with a warning; larger violations throw std::domain_error.
double coeff_distance(const Route& route, const BestRouteReference& ref);

/// T = t_e / sum_i(l_i / v_i + wait_i), waits counted at every departing waypoint.
double coeff_time(const Route& route, const BestRouteReference& ref);

/// C = 2 / p.
double coeff_simplicity(const Route& route);
double coeff_simplicity(std::size_t waypoint_count);

/// S = 1 - p_collide.
double coeff_safety(double p_collide);

double quality(const CoefficientVector& v, const Weights& w);

/// Sets quality from the four coefficients.
CoefficientVector with_quality(CoefficientVector v, const Weights& w);

/// S + D + T + C >= 4, the bound met by the best possible route.
bool best_route_check(const CoefficientVector& v);

CoefficientVector compute_coefficients(const Route& route, const ShipProfile& ship, double p_collide,
                                       const Weights& weights);

}  // namespace routeval
