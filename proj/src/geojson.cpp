#include "routeval/geojson.hpp"

namespace routeval {

using nlohmann::json;

namespace {

json coordinates(std::span<const Waypoint> waypoints) {
  json coords = json::array();
  for (const auto& w : waypoints) coords.push_back(json::array({w.position.lon, w.position.lat}));
  return coords;
}

json line(std::span<const Waypoint> waypoints, json properties) {
  return {{"type", "Feature"},
          {"properties", std::move(properties)},
          {"geometry", {{"type", "LineString"}, {"coordinates", coordinates(waypoints)}}}};
}

}  // namespace

json route_feature(const Route& route) {
  return line(route.waypoints(), {{"id", route.id()}, {"label", std::string(to_string(route.label()))}});
}

json composite_geojson(const PredictedRoute& route) {
  const auto wps = route.composite.waypoints();
  json features = json::array();
  const std::size_t split = route.split_index;
  if (split > 0) {
    features.push_back(line(wps.first(split + 1), {{"id", route.composite.id()}, {"provenance", "sailed"}}));
  }
  if (split + 1 < wps.size()) {
    features.push_back(line(wps.subspan(split), {{"id", route.composite.id()}, {"provenance", "predicted"}}));
  }
  for (std::size_t i = 0; i < wps.size(); ++i) {
    json props = {{"index", i},
                  {"provenance", std::string(to_string(route.provenance[i]))},
                  {"eta", format_iso8601(wps[i].eta)},
                  {"etd", format_iso8601(wps[i].etd)}};
    if (!wps[i].name.empty()) props["name"] = wps[i].name;
    features.push_back({{"type", "Feature"},
                        {"properties", std::move(props)},
                        {"geometry",
                         {{"type", "Point"}, {"coordinates", json::array({wps[i].position.lon, wps[i].position.lat})}}}});
  }
  return {{"type", "FeatureCollection"}, {"features", std::move(features)}};
}

json obstacles_geojson(const ObstacleMap& obstacles) {
  json features = json::array();
  for (const auto& o : obstacles.obstacles) {
    json ring = json::array();
    for (const auto& v : o.polygon.ring()) ring.push_back(json::array({v.lon, v.lat}));
    ring.push_back(ring.front());
    features.push_back({{"type", "Feature"},
                        {"properties", {{"kind", std::string(to_string(o.kind))}, {"name", o.name}}},
                        {"geometry", {{"type", "Polygon"}, {"coordinates", json::array({ring})}}}});
  }
  return {{"type", "FeatureCollection"}, {"features", std::move(features)}};
}

}  // namespace routeval
