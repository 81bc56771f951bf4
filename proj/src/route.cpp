#include "routeval/route.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

namespace routeval {

namespace {

constexpr double kMinLegNmi = 1e-9;

}  // namespace

std::string_view to_string(RouteLabel label) {
  switch (label) {
    case RouteLabel::planned: return "planned";
    case RouteLabel::actual: return "actual";
    case RouteLabel::predicted: return "predicted";
    case RouteLabel::candidate: return "candidate";
  }
  return "candidate";
}

RouteLabel route_label_from_string(std::string_view text) {
  if (text == "planned") return RouteLabel::planned;
  if (text == "actual") return RouteLabel::actual;
  if (text == "predicted") return RouteLabel::predicted;
  if (text == "candidate") return RouteLabel::candidate;
  throw std::invalid_argument(fmt::format("unknown route label '{}'", text));
}

Route Route::derive(std::string id, RouteLabel label, std::span<const WaypointInput> points,
                    const geo::DistanceModel& model, std::size_t min_waypoints) {
  using Field = RouteError::Field;
  if (points.size() < std::max<std::size_t>(min_waypoints, 1)) {
    throw RouteError(0, Field::route,
                     fmt::format("route needs at least {} waypoints, got {}", min_waypoints, points.size()));
  }
  std::vector<Waypoint> out;
  out.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    Waypoint w;
    w.position = p.position;
    w.eta = p.eta;
    w.etd = p.etd.value_or(p.eta);
    w.name = p.name;
    if (!std::isfinite(w.eta) || !std::isfinite(w.etd)) {
      throw RouteError(i, Field::eta, fmt::format("waypoint {}: non-finite time", i));
    }
    if (w.etd < w.eta) {
      throw RouteError(i, Field::etd, fmt::format("waypoint {}: ETD precedes ETA", i));
    }
    out.push_back(std::move(w));
  }

  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    const Waypoint& from = out[i];
    const Waypoint& to = out[i + 1];
    if (to.eta <= from.eta) {
      throw RouteError(i + 1, Field::eta, fmt::format("waypoint {}: ETA is not after the previous ETA", i + 1));
    }
    const double dt = to.eta - from.etd;
    if (dt < 0.0) {
      throw RouteError(i + 1, Field::eta, fmt::format("waypoint {}: ETA precedes the previous ETD", i + 1));
    }
    const double dist = geo::distance(from.position, to.position, model);
    if (dist <= kMinLegNmi) {
      throw RouteError(i + 1, Field::position, fmt::format("waypoint {}: zero-length leg", i + 1));
    }
    if (dt == 0.0) {
      throw RouteError(i + 1, Field::eta, fmt::format("waypoint {}: zero-duration leg over {} nmi", i + 1, dist));
    }
    double speed = dist / (dt / 3600.0);
    if (const auto& given = points[i].speed_kn) {
      if (!(*given > 0.0) || !std::isfinite(*given)) {
        throw RouteError(i, Field::speed, fmt::format("waypoint {}: leg speed must be positive", i));
      }
      if (std::abs(dist / *given * 3600.0 - dt) > kTimeToleranceS) {
        throw RouteError(i, Field::speed,
                         fmt::format("waypoint {}: speed {} kn inconsistent with ETA of next waypoint", i, *given));
      }
      speed = *given;
    }
    out[i].leg = Leg{geo::bearing(from.position, to.position, model), dist, speed};
  }
  return Route(std::move(id), label, model, std::move(out));
}

double Route::length_nmi() const {
  double total = 0.0;
  for (const auto& w : waypoints_) {
    if (w.leg) total += w.leg->distance_nmi;
  }
  return total;
}

double Route::travel_time_h() const {
  if (waypoints_.empty()) return 0.0;
  return (waypoints_.back().eta - waypoints_.front().eta) / 3600.0;
}

std::vector<WaypointInput> Route::inputs() const {
  std::vector<WaypointInput> out;
  out.reserve(waypoints_.size());
  for (const auto& w : waypoints_) {
    WaypointInput in;
    in.position = w.position;
    in.eta = w.eta;
    in.etd = w.etd;
    if (w.leg) in.speed_kn = w.leg->speed_kn;
    in.name = w.name;
    out.push_back(std::move(in));
  }
  return out;
}

Route Route::relabeled(std::string id, RouteLabel label) const {
  return Route(std::move(id), label, model_, waypoints_);
}

}  // namespace routeval
