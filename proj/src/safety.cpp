#include "routeval/safety.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/core.h>

#include "routeval/rng.hpp"

namespace routeval {

std::string_view to_string(SafetyMode mode) {
  return mode == SafetyMode::deterministic ? "deterministic" : "monte-carlo";
}

SafetyMode safety_mode_from_string(std::string_view text) {
  if (text == "deterministic") return SafetyMode::deterministic;
  if (text == "monte-carlo") return SafetyMode::monte_carlo;
  throw std::invalid_argument(fmt::format("unknown safety mode '{}'", text));
}

void SafetyConfig::validate() const {
  if (mode == SafetyMode::monte_carlo && samples < 100) {
    throw std::invalid_argument("monte-carlo safety needs at least 100 samples");
  }
  if (sigma_nmi && (!(*sigma_nmi >= 0.0) || !std::isfinite(*sigma_nmi))) {
    throw std::invalid_argument("sigma must be finite and non-negative");
  }
}

SafetyConfig SafetyConfig::resolved(const ShipProfile& ship) const {
  SafetyConfig out = *this;
  if (!out.sigma_nmi) out.sigma_nmi = ship.positional_sigma_nmi;
  return out;
}

DisplacementTable::DisplacementTable(std::uint64_t seed, std::size_t samples, std::size_t waypoints)
    : samples_(samples), waypoints_(waypoints), values_(samples * waypoints) {
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t w = 0; w < waypoints; ++w) {
      values_[s * waypoints + w] = rng::standard_normal(seed, static_cast<std::uint32_t>(w), static_cast<std::uint32_t>(s));
    }
  }
}

bool leg_intersects(geo::GeoPoint a, geo::GeoPoint b, const ObstacleMap& obstacles, const geo::DistanceModel& model) {
  for (const auto& o : obstacles.obstacles) {
    if (geo::segment_intersects(a, b, o.polygon, model)) return true;
  }
  return false;
}

std::optional<std::size_t> first_unsafe_leg(std::span<const geo::GeoPoint> positions, const ObstacleMap& obstacles,
                                            const geo::DistanceModel& model) {
  for (std::size_t i = 0; i + 1 < positions.size(); ++i) {
    if (leg_intersects(positions[i], positions[i + 1], obstacles, model)) return i;
  }
  return std::nullopt;
}

namespace {

std::vector<geo::GeoPoint> positions_of(const Route& route) {
  std::vector<geo::GeoPoint> out;
  out.reserve(route.size());
  for (const auto& w : route.waypoints()) out.push_back(w.position);
  return out;
}

}  // namespace

std::optional<std::size_t> first_unsafe_leg(const Route& route, const ObstacleMap& obstacles) {
  const auto pts = positions_of(route);
  return first_unsafe_leg(pts, obstacles, route.model());
}

std::vector<geo::GeoPoint> perturbed_positions(const Route& route, const DisplacementTable& table, std::size_t sample,
                                               double sigma_nmi) {
  const auto wps = route.waypoints();
  std::vector<geo::GeoPoint> out;
  out.reserve(wps.size());
  out.push_back(wps[0].position);
  for (std::size_t i = 1; i < wps.size(); ++i) {
    const auto& model = route.model();
    // Heading on arrival: reverse of the bearing back to the previous waypoint.
    const double incoming = geo::normalize_course(geo::bearing(wps[i].position, wps[i - 1].position, model) + 180.0);
    const double offset = sigma_nmi * table.at(sample, i);
    if (offset >= 0.0) {
      out.push_back(geo::project(wps[i].position, incoming + 90.0, offset, model));
    } else {
      out.push_back(geo::project(wps[i].position, incoming - 90.0, -offset, model));
    }
  }
  return out;
}

double p_collide(const Route& route, const ObstacleMap& obstacles, const SafetyConfig& cfg) {
  cfg.validate();
  if (cfg.mode == SafetyMode::deterministic) return first_unsafe_leg(route, obstacles) ? 1.0 : 0.0;
  if (!cfg.sigma_nmi) throw std::invalid_argument("monte-carlo safety needs sigma (resolve against the ship profile)");
  if (obstacles.empty()) return 0.0;

  const DisplacementTable table(cfg.seed, cfg.samples, route.size());
  std::size_t hits = 0;
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    const auto pts = perturbed_positions(route, table, s, *cfg.sigma_nmi);
    if (first_unsafe_leg(pts, obstacles, route.model())) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(cfg.samples);
}

}  // namespace routeval
