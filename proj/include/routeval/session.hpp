#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "routeval/assessment.hpp"
#include "routeval/decision.hpp"
#include "routeval/development.hpp"
#include "routeval/evaluation.hpp"
#include "routeval/scenario.hpp"

namespace routeval {

/// Request-level failure carrying the HTTP status it maps to.
class ServiceError : public std::runtime_error {
 public:
  ServiceError(int status, const std::string& what, std::string path = {})
      : std::runtime_error(what), status_(status), path_(std::move(path)) {}

  int status() const { return status_; }
  const std::string& path() const { return path_; }

 private:
  int status_;
  std::string path_;
};

/// Keys present in `j` override the corresponding fields of `base`.
EvalConfig eval_config_from_json(const nlohmann::json& j, const EvalConfig& base = {});
nlohmann::json to_json(const EvalConfig& config);

/// Lateral displacement applied after the planned maneuver.
struct Deviation {
  double offset_nmi = 0.0;
  double bearing_deg = 0.0;
};

struct AdvanceRequest {
  std::optional<Deviation> deviation;
  std::optional<geo::GeoPoint> waypoint;  // replaces the dead-reckoned position

  static AdvanceRequest from_json(const nlohmann::json& j);
};

/// One immutable session state. Readers hold it by shared_ptr, so an advance
/// never becomes visible half-applied.
struct SessionView {
  std::string id;
  std::shared_ptr<const Scenario> scenario;
  EvalConfig config;
  std::size_t initial_cursor = 0;
  DevelopmentSeries history;  // composite vector per cursor position
  Assessment assessment;

  std::size_t cursor() const { return assessment.cursor; }
};

nlohmann::json state_json(const SessionView& v);
nlohmann::json prediction_json(const SessionView& v);
std::string image_svg(const SessionView& v);

class Session {
 public:
  /// Starts at the last sailed waypoint of the scenario's actual route.
  Session(std::string id, Scenario scenario, EvalConfig config);

  const std::string& id() const { return id_; }
  std::shared_ptr<const SessionView> view() const;

  /// Appends the next actual waypoint. Advances on one session are applied
  /// one at a time in lock-acquisition order.
  std::shared_ptr<const SessionView> advance(const AdvanceRequest& request);

  nlohmann::json snapshot() const;
  static std::unique_ptr<Session> restore(const nlohmann::json& snapshot);

 private:
  Session(std::string id, std::shared_ptr<const SessionView> view);

  std::string id_;
  std::mutex write_mutex_;
  mutable std::shared_mutex view_mutex_;
  std::shared_ptr<const SessionView> view_;
};

/// Builds the next actual waypoint and the scenario that includes it.
/// Throws ServiceError 409 at the destination and 422 for invalid requests.
Scenario advanced_scenario(const Scenario& scenario, std::size_t cursor, const AdvanceRequest& request);

class SessionStore {
 public:
  /// With a snapshot directory, existing snapshots are loaded and every
  /// create/advance rewrites the session's file.
  explicit SessionStore(std::optional<std::filesystem::path> snapshot_dir = std::nullopt);

  std::shared_ptr<Session> create(Scenario scenario, EvalConfig config);
  /// Throws ServiceError 404.
  std::shared_ptr<Session> get(const std::string& id) const;
  std::shared_ptr<const SessionView> advance(const std::string& id, const AdvanceRequest& request);
  std::size_t size() const;

 private:
  void persist(const Session& session) const;

  std::optional<std::filesystem::path> snapshot_dir_;
  mutable std::shared_mutex mutex_;
  mutable std::mutex persist_mutex_;  // snapshot files are rewritten one at a time
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::size_t next_id_ = 1;
};

}  // namespace routeval
