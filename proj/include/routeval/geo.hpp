#pragma once

#include <span>
#include <vector>

namespace routeval::geo {

/// Sphere radius used by both distance models, nautical miles.
inline constexpr double kEarthRadiusNmi = 3440.065;

/// Segments passing within this distance of an obstacle boundary count as touching it.
inline constexpr double kContactToleranceNmi = 1e-6;

double normalize_lon(double lon_deg);
double normalize_course(double course_deg);

struct GeoPoint {
  double lat = 0.0;  // degrees, [-90, 90]
  double lon = 0.0;  // degrees, [-180, 180)

  /// Validates latitude and wraps longitude into [-180, 180).
  /// Throws std::invalid_argument on non-finite input or |lat| > 90.
  static GeoPoint make(double lat_deg, double lon_deg);

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

enum class ModelKind { planar_local, great_circle };

/// Selects how distances, bearings and dead-reckoning are computed.
///
/// planar_local is an equirectangular plane with a fixed reference latitude:
/// x = R * dlon * cos(reference_lat), y = R * dlat. Within that plane
/// distances are Euclidean, so translations and uniform scalings behave
/// exactly. It is an approximation intended for spans below ~200 nmi.
struct DistanceModel {
  ModelKind kind = ModelKind::great_circle;
  double reference_lat = 0.0;

  static DistanceModel planar(double reference_lat_deg) { return {ModelKind::planar_local, reference_lat_deg}; }
  static DistanceModel great_circle() { return {ModelKind::great_circle, 0.0}; }

  friend bool operator==(const DistanceModel&, const DistanceModel&) = default;
};

struct Vec2 {
  double x = 0.0;  // east, nmi
  double y = 0.0;  // north, nmi
};

/// Local equirectangular frame: maps points to nmi offsets from `origin`.
class LocalFrame {
 public:
  LocalFrame(GeoPoint origin, double reference_lat_deg);

  /// Frame anchored at the segment midpoint (used under the great-circle model).
  static LocalFrame at_midpoint(GeoPoint a, GeoPoint b);
  /// Frame matching `model`: the fixed plane for planar_local, the midpoint frame otherwise.
  static LocalFrame for_segment(GeoPoint a, GeoPoint b, const DistanceModel& model);

  Vec2 to_local(GeoPoint p) const;
  GeoPoint to_geo(Vec2 v) const;

 private:
  GeoPoint origin_;
  double cos_ref_;
};

double distance(GeoPoint a, GeoPoint b, const DistanceModel& model);

/// Initial course from a to b, degrees true in [0, 360). 0 = north, 90 = east.
double bearing(GeoPoint a, GeoPoint b, const DistanceModel& model);

/// Dead-reckoning: the point reached after sailing `dist_nmi` on `course_deg`.
/// Throws std::invalid_argument for negative distance and std::domain_error
/// when a planar projection runs past a pole.
GeoPoint project(GeoPoint from, double course_deg, double dist_nmi, const DistanceModel& model);

/// Simple polygon, implicitly closed. Validated on construction: at least
/// three vertices, no repeated closing vertex, no zero-length edges and no
/// self-intersections.
class Polygon {
 public:
  explicit Polygon(std::vector<GeoPoint> ring);

  std::span<const GeoPoint> ring() const { return ring_; }
  std::size_t size() const { return ring_.size(); }

 private:
  std::vector<GeoPoint> ring_;
};

/// Point-in-polygon in the given frame; points on the boundary are inside.
bool contains(const Polygon& poly, GeoPoint p, const LocalFrame& frame);

/// True iff the segment a-b crosses or touches the polygon boundary or has an
/// endpoint inside it. Planar test in LocalFrame::for_segment(a, b, model).
bool segment_intersects(GeoPoint a, GeoPoint b, const Polygon& poly,
                        const DistanceModel& model = DistanceModel::great_circle());

namespace planar {

double cross(Vec2 o, Vec2 a, Vec2 b);
double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);
/// Exact-orientation test; collinear overlaps and touching endpoints count as intersecting.
bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d);
double segment_segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d);
bool point_in_ring(Vec2 p, std::span<const Vec2> ring);

}  // namespace planar

}  // namespace routeval::geo
