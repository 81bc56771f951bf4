#include "routeval/session.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include <fmt/core.h>

#include "routeval/geojson.hpp"

namespace routeval {

using nlohmann::json;

namespace {

template <typename Quad>
Quad quad_from_json(const json& j, const std::string& what) {
  if (j.is_string()) return Quad::parse(j.get<std::string>());
  if (!j.is_object()) throw ServiceError(422, what + " must be an object or an \"a,b,c,d\" string", "/" + what);
  Quad q{};
  q.S = j.value("S", q.S);
  q.D = j.value("D", q.D);
  q.T = j.value("T", q.T);
  q.C = j.value("C", q.C);
  q.validate();
  return q;
}

template <typename Quad>
json quad_to_json(const Quad& q) {
  return {{"S", q.S}, {"D", q.D}, {"T", q.T}, {"C", q.C}};
}

double finite_number(const json& j, const char* key, const std::string& path) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw ServiceError(422, fmt::format("'{}' must be a number", key), path + "/" + key);
  }
  const double v = j[key].get<double>();
  if (!std::isfinite(v)) throw ServiceError(422, fmt::format("'{}' must be finite", key), path + "/" + key);
  return v;
}

}  // namespace

EvalConfig eval_config_from_json(const json& j, const EvalConfig& base) {
  EvalConfig c = base;
  if (j.is_null()) return c;
  if (!j.is_object()) throw ServiceError(422, "config must be an object", "/config");
  try {
    if (j.contains("weights")) c.weights = quad_from_json<Weights>(j["weights"], "weights");
    if (j.contains("thresholds")) c.thresholds = quad_from_json<Thresholds>(j["thresholds"], "thresholds");
    if (j.contains("safety")) {
      const json& s = j["safety"];
      if (s.contains("mode")) c.safety.mode = safety_mode_from_string(s["mode"].get<std::string>());
      if (s.contains("samples")) c.safety.samples = s["samples"].get<std::size_t>();
      if (s.contains("seed")) c.safety.seed = s["seed"].get<std::uint64_t>();
      if (s.contains("sigma_nmi") && !s["sigma_nmi"].is_null()) c.safety.sigma_nmi = s["sigma_nmi"].get<double>();
      c.safety.validate();
    }
    if (j.contains("trend_epsilon")) c.trend_epsilon = j["trend_epsilon"].get<double>();
  } catch (const json::exception& e) {
    throw ServiceError(422, fmt::format("invalid config: {}", e.what()), "/config");
  } catch (const std::invalid_argument& e) {
    throw ServiceError(422, fmt::format("invalid config: {}", e.what()), "/config");
  }
  if (!(c.trend_epsilon >= 0.0)) throw ServiceError(422, "trend_epsilon must be non-negative", "/config/trend_epsilon");
  return c;
}

json to_json(const EvalConfig& c) {
  json safety{{"mode", std::string(to_string(c.safety.mode))}, {"samples", c.safety.samples}, {"seed", c.safety.seed}};
  safety["sigma_nmi"] = c.safety.sigma_nmi ? json(*c.safety.sigma_nmi) : json(nullptr);
  return {{"weights", quad_to_json(c.weights)},
          {"thresholds", quad_to_json(c.thresholds)},
          {"safety", std::move(safety)},
          {"trend_epsilon", c.trend_epsilon}};
}

AdvanceRequest AdvanceRequest::from_json(const json& j) {
  AdvanceRequest r;
  if (j.is_null()) return r;
  if (!j.is_object()) throw ServiceError(422, "advance body must be an object");
  if (j.contains("deviation") && !j["deviation"].is_null()) {
    const json& d = j["deviation"];
    if (!d.is_object()) throw ServiceError(422, "deviation must be an object", "/deviation");
    Deviation dev{finite_number(d, "offset_nmi", "/deviation"), finite_number(d, "bearing_deg", "/deviation")};
    if (dev.offset_nmi < 0.0) throw ServiceError(422, "offset_nmi must be non-negative", "/deviation/offset_nmi");
    if (dev.bearing_deg < 0.0 || dev.bearing_deg >= 360.0) {
      throw ServiceError(422, "bearing_deg must be in [0, 360)", "/deviation/bearing_deg");
    }
    r.deviation = dev;
  }
  if (j.contains("waypoint") && !j["waypoint"].is_null()) {
    const json& w = j["waypoint"];
    if (!w.is_object()) throw ServiceError(422, "waypoint must be an object", "/waypoint");
    const double lat = finite_number(w, "lat", "/waypoint");
    const double lon = finite_number(w, "lon", "/waypoint");
    try {
      r.waypoint = geo::GeoPoint::make(lat, lon);
    } catch (const std::invalid_argument& e) {
      throw ServiceError(422, e.what(), "/waypoint");
    }
  }
  if (r.deviation && r.waypoint) throw ServiceError(422, "give either a deviation or a waypoint override, not both");
  return r;
}

Scenario advanced_scenario(const Scenario& scenario, std::size_t cursor, const AdvanceRequest& request) {
  const Route& planned = scenario.planned;
  const Route& actual = scenario.actual;
  if (cursor + 1 != actual.size()) throw ServiceError(409, "session cursor is not at the last sailed waypoint");
  const auto paired = scenario.correspondence.planned_for(cursor);
  if (!paired) throw ServiceError(409, fmt::format("actual waypoint {} has no planned counterpart", cursor));
  const std::size_t g = *paired;
  if (g + 1 >= planned.size()) throw ServiceError(409, "the voyage has reached its destination");

  const Waypoint& here = actual[cursor];
  const Leg& maneuver = *planned[g].leg;
  const Waypoint& target = planned[g + 1];
  geo::GeoPoint next;
  try {
    if (request.waypoint) {
      next = *request.waypoint;
    } else {
      next = geo::project(here.position, maneuver.course_deg, maneuver.distance_nmi, scenario.model);
      if (request.deviation && request.deviation->offset_nmi > 0.0) {
        next = geo::project(next, request.deviation->bearing_deg, request.deviation->offset_nmi, scenario.model);
      }
    }
  } catch (const std::exception& e) {
    throw ServiceError(422, fmt::format("deviation leaves the chart: {}", e.what()));
  }

  const double dist = geo::distance(here.position, next, scenario.model);
  if (dist <= 1e-9) throw ServiceError(422, "the next waypoint coincides with the current one");
  const Timestamp eta = round_to_millis(here.etd + dist / maneuver.speed_kn * 3600.0);
  const Timestamp etd = round_to_millis(eta + target.wait_s());

  auto inputs = actual.inputs();
  inputs.back().speed_kn = maneuver.speed_kn;
  inputs.push_back(WaypointInput{next, eta, etd, std::nullopt, target.name.empty() ? "" : target.name + "'"});

  Scenario out = scenario;
  try {
    out.actual = Route::derive(actual.id(), actual.label(), inputs, scenario.model);
  } catch (const RouteError& e) {
    throw ServiceError(422, e.what());
  }
  out.correspondence = scenario.correspondence.with_pair(cursor + 1, g + 1);
  return out;
}

json state_json(const SessionView& v) {
  json j = summary_json(v.assessment);
  j["session_id"] = v.id;
  json history = json::array();
  for (const auto& e : v.history.entries()) history.push_back({{"index", e.index}, {"vector", to_json(e.vector)}});
  j["history"] = std::move(history);
  if (v.history.size() >= 2) {
    j["classification"] = to_json(analyze_trend(v.history, v.config.trend_epsilon));
  } else {
    j["classification"] = nullptr;
  }
  return j;
}

json prediction_json(const SessionView& v) {
  json j = summary_json(v.assessment);
  j["session_id"] = v.id;
  j["route"] = composite_geojson(v.assessment.route);
  j["planned"] = route_feature(v.scenario->planned);
  j["obstacles"] = obstacles_geojson(v.scenario->obstacles);
  return j;
}

std::string image_svg(const SessionView& v) {
  const std::vector<CognitiveImage> images{render_image(v.assessment.planned_vector),
                                           render_image(v.assessment.vector)};
  const std::vector<std::string> labels{"planned", v.assessment.reached_destination ? "sailed" : "composite"};
  return render_svg(images, labels);
}

namespace {

std::shared_ptr<const SessionView> build_view(std::string id, Scenario scenario, EvalConfig config,
                                              std::size_t initial_cursor) {
  auto shared = std::make_shared<const Scenario>(std::move(scenario));
  const std::size_t cursor = shared->actual.size() - 1;
  DevelopmentSeries history;
  for (std::size_t i = initial_cursor; i < cursor; ++i) {
    history.push(SeriesEntry{i, assess(*shared, i, config).vector});
  }
  Assessment current = assess(*shared, cursor, config);
  history.push(SeriesEntry{cursor, current.vector});
  return std::make_shared<const SessionView>(
      SessionView{std::move(id), shared, config, initial_cursor, std::move(history), std::move(current)});
}

}  // namespace

Session::Session(std::string id, Scenario scenario, EvalConfig config) : id_(id) {
  const std::size_t cursor = scenario.actual.size() - 1;
  try {
    view_ = build_view(std::move(id), std::move(scenario), config, cursor);
  } catch (const std::invalid_argument& e) {
    throw ServiceError(422, e.what());
  }
}

Session::Session(std::string id, std::shared_ptr<const SessionView> view) : id_(std::move(id)), view_(std::move(view)) {}

std::shared_ptr<const SessionView> Session::view() const {
  std::shared_lock lock(view_mutex_);
  return view_;
}

std::shared_ptr<const SessionView> Session::advance(const AdvanceRequest& request) {
  std::lock_guard writer(write_mutex_);
  const auto current = view();
  Scenario next = advanced_scenario(*current->scenario, current->cursor(), request);
  auto shared = std::make_shared<const Scenario>(std::move(next));
  const std::size_t cursor = shared->actual.size() - 1;
  Assessment assessed = [&] {
    try {
      return assess(*shared, cursor, current->config);
    } catch (const std::invalid_argument& e) {
      throw ServiceError(422, e.what());
    }
  }();
  DevelopmentSeries history = current->history;
  history.push(SeriesEntry{cursor, assessed.vector});
  auto updated = std::make_shared<const SessionView>(SessionView{
      id_, shared, current->config, current->initial_cursor, std::move(history), std::move(assessed)});
  {
    std::unique_lock lock(view_mutex_);
    view_ = updated;
  }
  return updated;
}

json Session::snapshot() const {
  const auto v = view();
  return {{"id", v->id},
          {"initial_cursor", v->initial_cursor},
          {"config", to_json(v->config)},
          {"scenario", to_json(*v->scenario)}};
}

std::unique_ptr<Session> Session::restore(const json& snapshot) {
  std::string id = snapshot.at("id").get<std::string>();
  Scenario scenario = load_scenario(snapshot.at("scenario"));
  EvalConfig config = eval_config_from_json(snapshot.at("config"));
  const auto initial = snapshot.at("initial_cursor").get<std::size_t>();
  if (initial >= scenario.actual.size()) throw std::invalid_argument("snapshot initial_cursor out of range");
  auto view = build_view(id, std::move(scenario), config, initial);
  return std::unique_ptr<Session>(new Session(std::move(id), std::move(view)));
}

SessionStore::SessionStore(std::optional<std::filesystem::path> snapshot_dir) : snapshot_dir_(std::move(snapshot_dir)) {
  if (!snapshot_dir_) return;
  std::filesystem::create_directories(*snapshot_dir_);
  for (const auto& entry : std::filesystem::directory_iterator(*snapshot_dir_)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    std::shared_ptr<Session> s = Session::restore(json::parse(in));
    const std::string& id = s->id();
    if (id.size() > 1 && id[0] == 's') {
      std::size_t n = 0;
      const auto [ptr, ec] = std::from_chars(id.data() + 1, id.data() + id.size(), n);
      if (ec == std::errc() && ptr == id.data() + id.size()) next_id_ = std::max(next_id_, n + 1);
    }
    sessions_.emplace(id, std::move(s));
  }
}

std::shared_ptr<Session> SessionStore::create(Scenario scenario, EvalConfig config) {
  std::shared_ptr<Session> session;
  {
    std::unique_lock lock(mutex_);
    std::string id = fmt::format("s{}", next_id_++);
    session = std::make_shared<Session>(id, std::move(scenario), config);
    sessions_.emplace(id, session);
  }
  persist(*session);
  return session;
}

std::shared_ptr<Session> SessionStore::get(const std::string& id) const {
  std::shared_lock lock(mutex_);
  const auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ServiceError(404, fmt::format("unknown session '{}'", id));
  return it->second;
}

std::shared_ptr<const SessionView> SessionStore::advance(const std::string& id, const AdvanceRequest& request) {
  const auto session = get(id);
  auto view = session->advance(request);
  persist(*session);
  return view;
}

std::size_t SessionStore::size() const {
  std::shared_lock lock(mutex_);
  return sessions_.size();
}

void SessionStore::persist(const Session& session) const {
  if (!snapshot_dir_) return;
  std::lock_guard lock(persist_mutex_);
  const auto target = *snapshot_dir_ / (session.id() + ".json");
  const auto tmp = *snapshot_dir_ / (session.id() + ".json.tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << session.snapshot().dump(2) << '\n';
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace routeval
