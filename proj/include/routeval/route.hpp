#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "routeval/geo.hpp"
#include "routeval/timestamp.hpp"

namespace routeval {

/// Maneuver held from a waypoint until the next one.
struct Leg {
  double course_deg = 0.0;
  double distance_nmi = 0.0;
  double speed_kn = 0.0;

  double duration_s() const { return distance_nmi / speed_kn * 3600.0; }
};

struct Waypoint {
  geo::GeoPoint position;
  Timestamp eta = 0.0;
  Timestamp etd = 0.0;
  std::optional<Leg> leg;  // absent on the final waypoint
  std::string name;

  double wait_s() const { return etd - eta; }
};

enum class RouteLabel { planned, actual, predicted, candidate };

std::string_view to_string(RouteLabel label);
RouteLabel route_label_from_string(std::string_view text);

/// Raw waypoint data before leg derivation.
struct WaypointInput {
  geo::GeoPoint position;
  Timestamp eta = 0.0;
  std::optional<Timestamp> etd;    // defaults to eta
  std::optional<double> speed_kn;  // derived from times when absent
  std::string name;
};

/// What went wrong while building a route, with the waypoint it refers to.
class RouteError : public std::invalid_argument {
 public:
  enum class Field { route, position, eta, etd, speed };

  RouteError(std::size_t waypoint, Field field, const std::string& what)
      : std::invalid_argument(what), waypoint_(waypoint), field_(field) {}

  std::size_t waypoint() const { return waypoint_; }
  Field field() const { return field_; }

 private:
  std::size_t waypoint_;
  Field field_;
};

/// Time tolerance for the ETA/leg-speed consistency invariant.
inline constexpr double kTimeToleranceS = 1.0;

/// An ordered waypoint sequence with derived legs. Immutable once built; all
/// invariants are checked by derive().
class Route {
 public:
  /// Computes leg course and distance from positions under `model` and the leg
  /// speed from (eta[i+1] - etd[i]) unless given. Rejects fewer than two
  /// waypoints, etd < eta, non-increasing ETAs, zero-length legs, zero-duration
  /// legs, non-positive speeds and speeds inconsistent with the times.
  /// Sailed prefixes at the very start of a voyage pass min_waypoints = 1.
  static Route derive(std::string id, RouteLabel label, std::span<const WaypointInput> points,
                      const geo::DistanceModel& model, std::size_t min_waypoints = 2);

  const std::string& id() const { return id_; }
  RouteLabel label() const { return label_; }
  const geo::DistanceModel& model() const { return model_; }
  std::span<const Waypoint> waypoints() const { return waypoints_; }
  const Waypoint& operator[](std::size_t i) const { return waypoints_.at(i); }
  std::size_t size() const { return waypoints_.size(); }
  const Waypoint& front() const { return waypoints_.front(); }
  const Waypoint& back() const { return waypoints_.back(); }

  /// Sum of leg distances.
  double length_nmi() const;
  /// Time on the route counting every wait at a departure waypoint: eta(last) - eta(first).
  double travel_time_h() const;

  /// Inputs that rebuild this route (speeds kept explicit).
  std::vector<WaypointInput> inputs() const;
  /// Same waypoints under a new id and label.
  Route relabeled(std::string id, RouteLabel label) const;

 private:
  Route(std::string id, RouteLabel label, geo::DistanceModel model, std::vector<Waypoint> waypoints)
      : id_(std::move(id)), label_(label), model_(model), waypoints_(std::move(waypoints)) {}

  std::string id_;
  RouteLabel label_;
  geo::DistanceModel model_;
  std::vector<Waypoint> waypoints_;
};

}  // namespace routeval
