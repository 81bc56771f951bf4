#pragma once

#include <cmath>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "routeval/geo.hpp"
#include "routeval/route.hpp"
#include "routeval/scenario.hpp"

namespace routeval::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(ROUTEVAL_TEST_DATA_DIR) / name;
}

/// A local plane in nmi around a fixed origin, matching DistanceModel::planar.
struct Plane {
  geo::GeoPoint origin{10.0, 20.0};
  double ref_lat = 10.0;

  geo::DistanceModel model() const { return geo::DistanceModel::planar(ref_lat); }
  geo::LocalFrame frame() const { return geo::LocalFrame(origin, ref_lat); }
  geo::GeoPoint at(double x, double y) const { return frame().to_geo({x, y}); }
  geo::Vec2 xy(geo::GeoPoint p) const { return frame().to_local(p); }
};

struct Stop {
  double x = 0.0;
  double y = 0.0;
  double wait_s = 0.0;
};

inline constexpr Timestamp kT0 = 1'700'000'000.0;

/// Route through plane points at the given leg speeds (one per leg).
inline Route route_xy(const Plane& plane, const std::vector<Stop>& stops, const std::vector<double>& speeds,
                      RouteLabel label = RouteLabel::planned, Timestamp start = kT0, std::string id = "route") {
  std::vector<WaypointInput> in;
  Timestamp t = start;
  for (std::size_t i = 0; i < stops.size(); ++i) {
    const auto p = plane.at(stops[i].x, stops[i].y);
    if (i > 0) {
      const double d = geo::distance(in.back().position, p, plane.model());
      t = *in.back().etd + d / speeds[i - 1] * 3600.0;
    }
    WaypointInput w{p, t, t + stops[i].wait_s, std::nullopt, {}};
    if (i < speeds.size() && i + 1 < stops.size()) w.speed_kn = speeds[i];
    in.push_back(w);
  }
  return Route::derive(std::move(id), label, in, plane.model(), 1);
}

inline Route route_xy(const Plane& plane, const std::vector<Stop>& stops, double speed,
                      RouteLabel label = RouteLabel::planned, Timestamp start = kT0, std::string id = "route") {
  return route_xy(plane, stops, std::vector<double>(stops.size(), speed), label, start, std::move(id));
}

inline geo::Polygon rect_xy(const Plane& plane, double x0, double y0, double x1, double y1) {
  return geo::Polygon({plane.at(x0, y0), plane.at(x1, y0), plane.at(x1, y1), plane.at(x0, y1)});
}

inline Scenario make_scenario(const geo::DistanceModel& model, Route planned, Route actual,
                              std::optional<Correspondence> corr = std::nullopt, ObstacleMap obstacles = {},
                              ShipProfile ship = {20.0, 0.1}) {
  Correspondence c = corr ? *corr : Correspondence::index_by_index(actual.size(), planned.size());
  return Scenario{.id = "test",
                  .model = model,
                  .ship = ship,
                  .planned = std::move(planned),
                  .actual = std::move(actual),
                  .correspondence = std::move(c),
                  .obstacles = std::move(obstacles),
                  .safety_annotation = std::nullopt,
                  .default_turns = {},
                  .provenance = {}};
}

/// Random walk of `n` stops with legs of 1..15 nmi.
inline std::vector<Stop> random_stops(std::mt19937_64& gen, std::size_t n, double wait_max_s = 0.0) {
  std::uniform_real_distribution<double> leg(1.0, 15.0), turn(-1.2, 1.2), wait(0.0, wait_max_s);
  std::vector<Stop> out{{0.0, 0.0, 0.0}};
  double heading = std::uniform_real_distribution<double>(0.0, 2.0 * M_PI)(gen);
  for (std::size_t i = 1; i < n; ++i) {
    heading += turn(gen);
    const double d = leg(gen);
    out.push_back({out.back().x + d * std::sin(heading), out.back().y + d * std::cos(heading),
                   wait_max_s > 0.0 ? wait(gen) : 0.0});
  }
  return out;
}

}  // namespace routeval::testing
