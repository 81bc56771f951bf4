#pragma once

#include <json.hpp>

#include "routeval/prediction.hpp"
#include "routeval/route.hpp"
#include "routeval/scenario.hpp"

namespace routeval {

/// LineString feature with id and label properties. Coordinates are [lon, lat].
nlohmann::json route_feature(const Route& route);

/// FeatureCollection for a composite route: one LineString per provenance
/// (sailed, predicted; they share the split waypoint) and one Point per
/// waypoint carrying index, provenance, ETA and ETD.
nlohmann::json composite_geojson(const PredictedRoute& route);

/// Obstacles as a FeatureCollection of Polygons with closed rings.
nlohmann::json obstacles_geojson(const ObstacleMap& obstacles);

}  // namespace routeval
