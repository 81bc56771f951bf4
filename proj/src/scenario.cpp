#include "routeval/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include <fmt/core.h>

#include "routeval/geojson.hpp"

namespace routeval {

using nlohmann::json;

void ShipProfile::validate() const {
  if (!(v_max_kn > 0.0) || !std::isfinite(v_max_kn)) throw std::invalid_argument("v_max must be positive");
  if (!(positional_sigma_nmi >= 0.0) || !std::isfinite(positional_sigma_nmi)) {
    throw std::invalid_argument("positional sigma must be non-negative");
  }
}

std::string_view to_string(ObstacleKind kind) {
  switch (kind) {
    case ObstacleKind::land: return "land";
    case ObstacleKind::shallow: return "shallow";
    case ObstacleKind::exclusion: return "exclusion";
  }
  return "land";
}

Correspondence::Correspondence(std::vector<std::pair<std::size_t, std::size_t>> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw std::invalid_argument("correspondence must not be empty");
  if (pairs_.front() != std::pair<std::size_t, std::size_t>{0, 0}) {
    throw std::invalid_argument("first actual waypoint must correspond to the first planned waypoint");
  }
  for (std::size_t i = 1; i < pairs_.size(); ++i) {
    if (pairs_[i].first <= pairs_[i - 1].first || pairs_[i].second <= pairs_[i - 1].second) {
      throw std::invalid_argument(fmt::format("correspondence pair {} is not strictly increasing", i));
    }
  }
}

Correspondence Correspondence::index_by_index(std::size_t actual_count, std::size_t planned_count) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < std::min(actual_count, planned_count); ++i) pairs.emplace_back(i, i);
  return Correspondence(std::move(pairs));
}

std::optional<std::size_t> Correspondence::planned_for(std::size_t actual) const {
  for (const auto& [a, p] : pairs_) {
    if (a == actual) return p;
  }
  return std::nullopt;
}

std::optional<std::size_t> Correspondence::governing_planned(std::size_t actual) const {
  std::optional<std::size_t> found;
  for (const auto& [a, p] : pairs_) {
    if (a > actual) break;
    found = p;
  }
  return found;
}

void Correspondence::validate(std::size_t actual_count, std::size_t planned_count) const {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i].first >= actual_count || pairs_[i].second >= planned_count) {
      throw std::invalid_argument(fmt::format("correspondence pair {} references a missing waypoint", i));
    }
  }
}

Correspondence Correspondence::with_pair(std::size_t actual, std::size_t planned) const {
  auto pairs = pairs_;
  pairs.emplace_back(actual, planned);
  return Correspondence(std::move(pairs));
}

double SafetyAnnotation::for_sailed_through(std::size_t last_actual_index) const {
  if (last_actual_index <= from_index) return s_from;
  if (last_actual_index >= to_index) return s_to;
  const double t = static_cast<double>(last_actual_index - from_index) / static_cast<double>(to_index - from_index);
  return s_from + (s_to - s_from) * t;
}

namespace {

std::string join(const std::string& path, std::string_view key) { return path + "/" + std::string(key); }
std::string join(const std::string& path, std::size_t index) { return path + "/" + std::to_string(index); }

const json& require(const json& obj, std::string_view key, const std::string& path) {
  if (!obj.is_object()) throw ScenarioError(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ScenarioError(join(path, key), "missing required key");
  return *it;
}

double number_at(const json& value, const std::string& path) {
  if (!value.is_number()) throw ScenarioError(path, "expected a number");
  const double v = value.get<double>();
  if (!std::isfinite(v)) throw ScenarioError(path, "expected a finite number");
  return v;
}

std::size_t index_at(const json& value, const std::string& path) {
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    throw ScenarioError(path, "expected a non-negative integer");
  }
  return value.get<std::size_t>();
}

std::string string_at(const json& value, const std::string& path) {
  if (!value.is_string()) throw ScenarioError(path, "expected a string");
  return value.get<std::string>();
}

Timestamp time_at(const json& value, const std::string& path) {
  try {
    return parse_iso8601(string_at(value, path));
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(path, e.what());
  }
}

geo::DistanceModel parse_geometry(const json& doc, const json& planned_waypoints) {
  const auto it = doc.find("geometry");
  if (it == doc.end()) return geo::DistanceModel::great_circle();
  const std::string path = "/geometry";
  const std::string kind = string_at(require(*it, "model", path), join(path, "model"));
  if (kind == "great-circle") return geo::DistanceModel::great_circle();
  if (kind != "planar") throw ScenarioError(join(path, "model"), "expected 'planar' or 'great-circle'");
  double ref = 0.0;
  if (const auto r = it->find("reference_lat"); r != it->end()) {
    ref = number_at(*r, join(path, "reference_lat"));
    if (std::abs(ref) >= 89.0) throw ScenarioError(join(path, "reference_lat"), "must be within (-89, 89)");
  } else if (planned_waypoints.is_array() && !planned_waypoints.empty() && planned_waypoints[0].contains("lat")) {
    ref = number_at(planned_waypoints[0]["lat"], "/planned/waypoints/0/lat");
  }
  return geo::DistanceModel::planar(ref);
}

std::string field_key(RouteError::Field field) {
  switch (field) {
    case RouteError::Field::position: return "lat";
    case RouteError::Field::eta: return "eta";
    case RouteError::Field::etd: return "etd";
    case RouteError::Field::speed: return "speed_kn";
    case RouteError::Field::route: return "";
  }
  return "";
}

Route parse_route(const json& doc, std::string_view key, RouteLabel label, const geo::DistanceModel& model,
                  std::size_t min_waypoints) {
  const std::string path = "/" + std::string(key);
  const json& obj = require(doc, key, "");
  const json& wps = require(obj, "waypoints", path);
  const std::string wps_path = join(path, "waypoints");
  if (!wps.is_array()) throw ScenarioError(wps_path, "expected an array");
  std::string id = std::string(key);
  if (const auto it = obj.find("id"); it != obj.end()) id = string_at(*it, join(path, "id"));

  std::vector<WaypointInput> inputs;
  for (std::size_t i = 0; i < wps.size(); ++i) {
    const std::string wp_path = join(wps_path, i);
    const json& w = wps[i];
    WaypointInput in;
    try {
      in.position = geo::GeoPoint::make(number_at(require(w, "lat", wp_path), join(wp_path, "lat")),
                                        number_at(require(w, "lon", wp_path), join(wp_path, "lon")));
    } catch (const std::invalid_argument& e) {
      throw ScenarioError(join(wp_path, "lat"), e.what());
    }
    in.eta = time_at(require(w, "eta", wp_path), join(wp_path, "eta"));
    if (const auto it = w.find("etd"); it != w.end()) in.etd = time_at(*it, join(wp_path, "etd"));
    if (const auto it = w.find("speed_kn"); it != w.end() && !it->is_null()) {
      in.speed_kn = number_at(*it, join(wp_path, "speed_kn"));
    }
    if (const auto it = w.find("name"); it != w.end()) in.name = string_at(*it, join(wp_path, "name"));
    inputs.push_back(std::move(in));
  }
  try {
    return Route::derive(std::move(id), label, inputs, model, min_waypoints);
  } catch (const RouteError& e) {
    if (e.field() == RouteError::Field::route) throw ScenarioError(wps_path, e.what());
    throw ScenarioError(join(join(wps_path, e.waypoint()), field_key(e.field())), e.what());
  }
}

ObstacleMap parse_obstacles(const json& doc) {
  ObstacleMap map;
  const auto it = doc.find("obstacles");
  if (it == doc.end() || it->is_null()) return map;
  const std::string path = "/obstacles";
  if (string_at(require(*it, "type", path), join(path, "type")) != "FeatureCollection") {
    throw ScenarioError(join(path, "type"), "expected 'FeatureCollection'");
  }
  const json& features = require(*it, "features", path);
  if (!features.is_array()) throw ScenarioError(join(path, "features"), "expected an array");
  for (std::size_t i = 0; i < features.size(); ++i) {
    const std::string fpath = join(join(path, "features"), i);
    const json& f = features[i];
    const json& geometry = require(f, "geometry", fpath);
    const std::string gpath = join(fpath, "geometry");
    if (string_at(require(geometry, "type", gpath), join(gpath, "type")) != "Polygon") {
      throw ScenarioError(join(gpath, "type"), "only Polygon geometries are supported");
    }
    const json& coords = require(geometry, "coordinates", gpath);
    const std::string cpath = join(gpath, "coordinates");
    if (!coords.is_array() || coords.empty()) throw ScenarioError(cpath, "expected at least one ring");
    if (coords.size() > 1) throw ScenarioError(join(cpath, 1), "polygon holes are not supported");
    const json& ring = coords[0];
    if (!ring.is_array()) throw ScenarioError(join(cpath, 0), "expected an array of positions");
    std::vector<geo::GeoPoint> vertices;
    for (std::size_t k = 0; k < ring.size(); ++k) {
      const std::string vpath = join(join(cpath, 0), k);
      if (!ring[k].is_array() || ring[k].size() < 2) throw ScenarioError(vpath, "expected [lon, lat]");
      try {
        vertices.push_back(geo::GeoPoint::make(number_at(ring[k][1], join(vpath, 1)), number_at(ring[k][0], join(vpath, 0))));
      } catch (const std::invalid_argument& e) {
        throw ScenarioError(vpath, e.what());
      }
    }
    if (vertices.size() >= 2 && vertices.front() == vertices.back()) vertices.pop_back();

    Obstacle obstacle{[&] {
      try {
        return geo::Polygon(std::move(vertices));
      } catch (const std::invalid_argument& e) {
        throw ScenarioError(cpath, e.what());
      }
    }(), ObstacleKind::land, {}};
    const json& props = require(f, "properties", fpath);
    const std::string ppath = join(fpath, "properties");
    const std::string kind = string_at(require(props, "kind", ppath), join(ppath, "kind"));
    if (kind == "land") {
      obstacle.kind = ObstacleKind::land;
    } else if (kind == "shallow") {
      obstacle.kind = ObstacleKind::shallow;
    } else if (kind == "exclusion") {
      obstacle.kind = ObstacleKind::exclusion;
    } else {
      throw ScenarioError(join(ppath, "kind"), "expected 'land', 'shallow' or 'exclusion'");
    }
    obstacle.name = fmt::format("obstacle-{}", i);
    if (const auto n = props.find("name"); n != props.end()) obstacle.name = string_at(*n, join(ppath, "name"));
    map.obstacles.push_back(std::move(obstacle));
  }
  return map;
}

std::optional<SafetyAnnotation> parse_annotation(const json& doc) {
  const auto it = doc.find("safety_annotation");
  if (it == doc.end() || it->is_null()) return std::nullopt;
  const std::string path = "/safety_annotation";
  SafetyAnnotation a;
  const auto prob = [&](std::string_view key) {
    const double v = number_at(require(*it, key, path), join(path, key));
    if (v < 0.0 || v > 1.0) throw ScenarioError(join(path, key), "expected a value in [0, 1]");
    return v;
  };
  a.planned_s = prob("planned_s");
  a.s_from = prob("s_from");
  a.s_to = prob("s_to");
  a.from_index = index_at(require(*it, "from_index", path), join(path, "from_index"));
  a.to_index = index_at(require(*it, "to_index", path), join(path, "to_index"));
  if (a.to_index < a.from_index) throw ScenarioError(join(path, "to_index"), "must not precede from_index");
  if (const auto n = it->find("note"); n != it->end()) a.note = string_at(*n, join(path, "note"));
  return a;
}

}  // namespace

Scenario load_scenario(const json& doc) {
  if (!doc.is_object()) throw ScenarioError("", "scenario document must be a JSON object");

  const json& ship_json = require(doc, "ship", "");
  ShipProfile ship{number_at(require(ship_json, "v_max_kn", "/ship"), "/ship/v_max_kn"),
                   number_at(require(ship_json, "positional_sigma_nmi", "/ship"), "/ship/positional_sigma_nmi")};
  if (!(ship.v_max_kn > 0.0)) throw ScenarioError("/ship/v_max_kn", "must be positive");
  if (ship.positional_sigma_nmi < 0.0) throw ScenarioError("/ship/positional_sigma_nmi", "must be non-negative");

  const json& planned_obj = require(doc, "planned", "");
  const geo::DistanceModel model =
      parse_geometry(doc, planned_obj.is_object() ? planned_obj.value("waypoints", json()) : json());
  Route planned = parse_route(doc, "planned", RouteLabel::planned, model, 2);
  Route actual = parse_route(doc, "actual", RouteLabel::actual, model, 1);

  Correspondence corr = Correspondence::index_by_index(actual.size(), planned.size());
  if (const auto it = doc.find("correspondence"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) throw ScenarioError("/correspondence", "expected an array of [actual, planned] pairs");
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string p = join("/correspondence", i);
      const json& pair = (*it)[i];
      if (!pair.is_array() || pair.size() != 2) throw ScenarioError(p, "expected [actual, planned]");
      pairs.emplace_back(index_at(pair[0], join(p, 0)), index_at(pair[1], join(p, 1)));
    }
    try {
      corr = Correspondence(std::move(pairs));
    } catch (const std::invalid_argument& e) {
      throw ScenarioError("/correspondence", e.what());
    }
  }
  try {
    corr.validate(actual.size(), planned.size());
  } catch (const std::invalid_argument& e) {
    throw ScenarioError("/correspondence", e.what());
  }

  Scenario s{
      .id = doc.contains("id") ? string_at(doc["id"], "/id") : std::string("scenario"),
      .model = model,
      .ship = ship,
      .planned = std::move(planned),
      .actual = std::move(actual),
      .correspondence = std::move(corr),
      .obstacles = parse_obstacles(doc),
      .safety_annotation = parse_annotation(doc),
      .default_turns = {},
      .provenance = doc.contains("provenance") ? string_at(doc["provenance"], "/provenance") : std::string(),
  };
  if (const auto it = doc.find("whatif_turns"); it != doc.end()) {
    if (!it->is_array()) throw ScenarioError("/whatif_turns", "expected an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& t = (*it)[i];
      if (t.is_string()) {
        s.default_turns.push_back(t.get<std::string>());
      } else {
        s.default_turns.push_back(std::to_string(index_at(t, join("/whatif_turns", i))));
      }
    }
  }
  return s;
}

Scenario load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("", fmt::format("cannot open '{}'", path.string()));
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ScenarioError("", fmt::format("'{}' is not valid JSON: {}", path.string(), e.what()));
  }
  return load_scenario(doc);
}

json route_to_json(const Route& route) {
  json wps = json::array();
  for (const auto& w : route.waypoints()) {
    json j;
    if (!w.name.empty()) j["name"] = w.name;
    j["lat"] = w.position.lat;
    j["lon"] = w.position.lon;
    j["eta"] = format_iso8601(w.eta);
    j["etd"] = format_iso8601(w.etd);
    if (w.leg) j["speed_kn"] = w.leg->speed_kn;
    wps.push_back(std::move(j));
  }
  return json{{"id", route.id()}, {"waypoints", std::move(wps)}};
}

json to_json(const Scenario& s) {
  json doc;
  doc["id"] = s.id;
  if (s.model.kind == geo::ModelKind::planar_local) {
    doc["geometry"] = {{"model", "planar"}, {"reference_lat", s.model.reference_lat}};
  } else {
    doc["geometry"] = {{"model", "great-circle"}};
  }
  doc["ship"] = {{"v_max_kn", s.ship.v_max_kn}, {"positional_sigma_nmi", s.ship.positional_sigma_nmi}};
  doc["planned"] = route_to_json(s.planned);
  doc["actual"] = route_to_json(s.actual);
  json pairs = json::array();
  for (const auto& [a, p] : s.correspondence.pairs()) pairs.push_back(json::array({a, p}));
  doc["correspondence"] = std::move(pairs);

  doc["obstacles"] = obstacles_geojson(s.obstacles);

  if (s.safety_annotation) {
    const auto& a = *s.safety_annotation;
    doc["safety_annotation"] = {{"planned_s", a.planned_s}, {"from_index", a.from_index}, {"to_index", a.to_index},
                                {"s_from", a.s_from},       {"s_to", a.s_to}};
    if (!a.note.empty()) doc["safety_annotation"]["note"] = a.note;
  }
  if (!s.default_turns.empty()) doc["whatif_turns"] = s.default_turns;
  if (!s.provenance.empty()) doc["provenance"] = s.provenance;
  return doc;
}

std::size_t resolve_actual_index(const Scenario& scenario, const std::string& token) {
  const auto wps = scenario.actual.waypoints();
  for (std::size_t i = 0; i < wps.size(); ++i) {
    if (!wps[i].name.empty() && wps[i].name == token) return i;
  }
  std::size_t index = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, index);
  if (ec != std::errc() || ptr != end || token.empty()) {
    throw std::invalid_argument(fmt::format("'{}' is neither an actual waypoint name nor an index", token));
  }
  if (index >= wps.size()) {
    throw std::invalid_argument(fmt::format("turn point {} is beyond the sailed prefix ({} waypoints)", index, wps.size()));
  }
  return index;
}

}  // namespace routeval
