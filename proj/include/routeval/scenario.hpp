#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "routeval/geo.hpp"
#include "routeval/route.hpp"

namespace routeval {

struct ShipProfile {
  double v_max_kn = 0.0;              // maximum speed in calm water
  double positional_sigma_nmi = 0.0;  // cross-track standard deviation

  void validate() const;
};

enum class ObstacleKind { land, shallow, exclusion };

std::string_view to_string(ObstacleKind kind);

struct Obstacle {
  geo::Polygon polygon;
  ObstacleKind kind = ObstacleKind::land;
  std::string name;
};

struct ObstacleMap {
  std::vector<Obstacle> obstacles;

  bool empty() const { return obstacles.empty(); }
};

/// Pairs (actual index, planned index), strictly increasing in both coordinates,
/// starting at (0, 0).
class Correspondence {
 public:
  Correspondence() = default;
  explicit Correspondence(std::vector<std::pair<std::size_t, std::size_t>> pairs);

  /// Index-by-index pairing over the common prefix.
  static Correspondence index_by_index(std::size_t actual_count, std::size_t planned_count);

  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const { return pairs_; }

  /// Planned index explicitly paired with `actual`, if any.
  std::optional<std::size_t> planned_for(std::size_t actual) const;
  /// Planned index of the latest pair whose actual index is <= `actual`.
  std::optional<std::size_t> governing_planned(std::size_t actual) const;

  /// Checks every pair against the route sizes. Throws std::invalid_argument.
  void validate(std::size_t actual_count, std::size_t planned_count) const;

  Correspondence with_pair(std::size_t actual, std::size_t planned) const;

 private:
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

/// Scenario-supplied safety values that replace the estimator. A route that has
/// sailed the actual route through index k gets S interpolated linearly
/// between (from_index, s_from) and (to_index, s_to), clamped at both ends;
/// the planned route gets `planned_s`.
struct SafetyAnnotation {
  double planned_s = 1.0;
  std::size_t from_index = 0;
  std::size_t to_index = 0;
  double s_from = 1.0;
  double s_to = 1.0;
  std::string note;

  double for_sailed_through(std::size_t last_actual_index) const;
};

struct Scenario {
  std::string id;
  geo::DistanceModel model;
  ShipProfile ship;
  Route planned;
  Route actual;
  Correspondence correspondence;
  ObstacleMap obstacles;
  std::optional<SafetyAnnotation> safety_annotation;
  std::vector<std::string> default_turns;  // waypoint names or indices for what-if runs
  std::string provenance;
};

/// Schema or invariant violation, located with a JSON-pointer-style path.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

Scenario load_scenario(const nlohmann::json& document);
Scenario load_scenario_file(const std::filesystem::path& path);

/// Canonical form: explicit correspondence, explicit leg speeds, timestamps in
/// millisecond ISO-8601, closed GeoJSON rings.
nlohmann::json to_json(const Scenario& scenario);

nlohmann::json route_to_json(const Route& route);

/// Resolves a turn-point token: a waypoint name on the actual route, else a
/// decimal index. Throws std::invalid_argument when neither matches.
std::size_t resolve_actual_index(const Scenario& scenario, const std::string& token);

}  // namespace routeval
