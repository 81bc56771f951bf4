#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "routeval/geo.hpp"
#include "routeval/route.hpp"
#include "routeval/scenario.hpp"

namespace routeval {

enum class SafetyMode { deterministic, monte_carlo };

std::string_view to_string(SafetyMode mode);
SafetyMode safety_mode_from_string(std::string_view text);

struct SafetyConfig {
  SafetyMode mode = SafetyMode::monte_carlo;
  std::size_t samples = 10000;
  std::optional<double> sigma_nmi;  // cross-track std-dev; falls back to the ship's
  std::uint64_t seed = 20120113;

  void validate() const;
  /// Copy with sigma filled from the ship profile when unset.
  SafetyConfig resolved(const ShipProfile& ship) const;
};

/// Standard-normal cross-track draws, one per (sample, waypoint). Each entry is
/// a pure function of (seed, waypoint, sample), so the table is identical
/// however it is generated or consumed.
class DisplacementTable {
 public:
  DisplacementTable(std::uint64_t seed, std::size_t samples, std::size_t waypoints);

  double at(std::size_t sample, std::size_t waypoint) const { return values_[sample * waypoints_ + waypoint]; }
  std::size_t samples() const { return samples_; }

 private:
  std::size_t samples_;
  std::size_t waypoints_;
  std::vector<double> values_;
};

bool leg_intersects(geo::GeoPoint a, geo::GeoPoint b, const ObstacleMap& obstacles, const geo::DistanceModel& model);

/// Smallest leg index whose segment touches any obstacle.
std::optional<std::size_t> first_unsafe_leg(std::span<const geo::GeoPoint> positions, const ObstacleMap& obstacles,
                                            const geo::DistanceModel& model);
std::optional<std::size_t> first_unsafe_leg(const Route& route, const ObstacleMap& obstacles);

/// Probability of colliding with an obstacle while following the route.
/// Deterministic: 1 if any leg touches an obstacle, else 0. Monte-Carlo: the
/// fraction of perturbed routes with at least one touching leg, where every
/// waypoint after the first is displaced perpendicular to its incoming leg by
/// sigma * N(0, 1). Sigma must be set (see SafetyConfig::resolved).
double p_collide(const Route& route, const ObstacleMap& obstacles, const SafetyConfig& cfg);

/// Perturbed waypoint positions for one Monte-Carlo sample.
std::vector<geo::GeoPoint> perturbed_positions(const Route& route, const DisplacementTable& table,
                                               std::size_t sample, double sigma_nmi);

}  // namespace routeval
