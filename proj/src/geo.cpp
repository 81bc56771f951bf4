#include "routeval/geo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/core.h>

namespace routeval::geo {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;

double wrap_delta_lon(double dlon) { return normalize_lon(dlon); }

}  // namespace

double normalize_lon(double lon_deg) {
  double r = std::fmod(lon_deg + 180.0, 360.0);
  if (r < 0.0) r += 360.0;
  r -= 180.0;
  // fmod can land exactly on +180 after the shift for tiny negative inputs.
  if (r >= 180.0) r -= 360.0;
  return r;
}

double normalize_course(double course_deg) {
  double r = std::fmod(course_deg, 360.0);
  if (r < 0.0) r += 360.0;
  if (r >= 360.0) r -= 360.0;
  return r;
}

GeoPoint GeoPoint::make(double lat_deg, double lon_deg) {
  if (!std::isfinite(lat_deg) || !std::isfinite(lon_deg)) {
    throw std::invalid_argument("coordinates must be finite");
  }
  if (lat_deg < -90.0 || lat_deg > 90.0) {
    throw std::invalid_argument(fmt::format("latitude {} outside [-90, 90]", lat_deg));
  }
  return GeoPoint{lat_deg, normalize_lon(lon_deg)};
}

LocalFrame::LocalFrame(GeoPoint origin, double reference_lat_deg)
    : origin_(origin), cos_ref_(std::cos(reference_lat_deg * kDegToRad)) {
  if (cos_ref_ <= 1e-12) throw std::domain_error("local frame reference latitude too close to a pole");
}

LocalFrame LocalFrame::at_midpoint(GeoPoint a, GeoPoint b) {
  const double mid_lat = 0.5 * (a.lat + b.lat);
  const double mid_lon = normalize_lon(a.lon + 0.5 * wrap_delta_lon(b.lon - a.lon));
  return LocalFrame(GeoPoint{mid_lat, mid_lon}, mid_lat);
}

LocalFrame LocalFrame::for_segment(GeoPoint a, GeoPoint b, const DistanceModel& model) {
  if (model.kind == ModelKind::planar_local) return LocalFrame(a, model.reference_lat);
  return at_midpoint(a, b);
}

Vec2 LocalFrame::to_local(GeoPoint p) const {
  const double dlon = wrap_delta_lon(p.lon - origin_.lon) * kDegToRad;
  const double dlat = (p.lat - origin_.lat) * kDegToRad;
  return Vec2{kEarthRadiusNmi * dlon * cos_ref_, kEarthRadiusNmi * dlat};
}

GeoPoint LocalFrame::to_geo(Vec2 v) const {
  const double lat = origin_.lat + (v.y / kEarthRadiusNmi) * kRadToDeg;
  if (lat < -90.0 || lat > 90.0) throw std::domain_error("planar projection crosses a pole");
  const double lon = origin_.lon + (v.x / (kEarthRadiusNmi * cos_ref_)) * kRadToDeg;
  return GeoPoint{lat, normalize_lon(lon)};
}

double distance(GeoPoint a, GeoPoint b, const DistanceModel& model) {
  if (model.kind == ModelKind::planar_local) {
    const Vec2 d = LocalFrame(a, model.reference_lat).to_local(b);
    return std::hypot(d.x, d.y);
  }
  const double phi1 = a.lat * kDegToRad;
  const double phi2 = b.lat * kDegToRad;
  const double dphi = phi2 - phi1;
  const double dlambda = wrap_delta_lon(b.lon - a.lon) * kDegToRad;
  const double s1 = std::sin(0.5 * dphi);
  const double s2 = std::sin(0.5 * dlambda);
  const double h = std::clamp(s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2, 0.0, 1.0);
  return 2.0 * kEarthRadiusNmi * std::asin(std::sqrt(h));
}

double bearing(GeoPoint a, GeoPoint b, const DistanceModel& model) {
  if (model.kind == ModelKind::planar_local) {
    const Vec2 d = LocalFrame(a, model.reference_lat).to_local(b);
    return normalize_course(std::atan2(d.x, d.y) * kRadToDeg);
  }
  const double phi1 = a.lat * kDegToRad;
  const double phi2 = b.lat * kDegToRad;
  const double dlambda = wrap_delta_lon(b.lon - a.lon) * kDegToRad;
  const double y = std::sin(dlambda) * std::cos(phi2);
  const double x = std::cos(phi1) * std::sin(phi2) - std::sin(phi1) * std::cos(phi2) * std::cos(dlambda);
  return normalize_course(std::atan2(y, x) * kRadToDeg);
}

GeoPoint project(GeoPoint from, double course_deg, double dist_nmi, const DistanceModel& model) {
  if (!(dist_nmi >= 0.0) || !std::isfinite(dist_nmi)) {
    throw std::invalid_argument("projection distance must be finite and non-negative");
  }
  if (dist_nmi == 0.0) return from;
  const double theta = course_deg * kDegToRad;
  if (model.kind == ModelKind::planar_local) {
    const LocalFrame frame(from, model.reference_lat);
    return frame.to_geo(Vec2{dist_nmi * std::sin(theta), dist_nmi * std::cos(theta)});
  }
  const double delta = dist_nmi / kEarthRadiusNmi;
  const double phi1 = from.lat * kDegToRad;
  const double lambda1 = from.lon * kDegToRad;
  const double sin_phi2 =
      std::clamp(std::sin(phi1) * std::cos(delta) + std::cos(phi1) * std::sin(delta) * std::cos(theta), -1.0, 1.0);
  const double phi2 = std::asin(sin_phi2);
  const double lambda2 = lambda1 + std::atan2(std::sin(theta) * std::sin(delta) * std::cos(phi1),
                                              std::cos(delta) - std::sin(phi1) * sin_phi2);
  return GeoPoint{phi2 * kRadToDeg, normalize_lon(lambda2 * kRadToDeg)};
}

namespace planar {

double cross(Vec2 o, Vec2 a, Vec2 b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

namespace {

int sign(double v) { return (v > 0.0) - (v < 0.0); }

bool on_segment(Vec2 p, Vec2 a, Vec2 b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  const int o1 = sign(cross(a, b, c));
  const int o2 = sign(cross(a, b, d));
  const int o3 = sign(cross(c, d, a));
  const int o4 = sign(cross(c, d, b));
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(c, a, b)) return true;
  if (o2 == 0 && on_segment(d, a, b)) return true;
  if (o3 == 0 && on_segment(a, c, d)) return true;
  if (o4 == 0 && on_segment(b, c, d)) return true;
  return false;
}

double segment_segment_distance(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
  if (segments_intersect(a, b, c, d)) return 0.0;
  return std::min({point_segment_distance(a, c, d), point_segment_distance(b, c, d),
                   point_segment_distance(c, a, b), point_segment_distance(d, a, b)});
}

bool point_in_ring(Vec2 p, std::span<const Vec2> ring) {
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (point_segment_distance(p, ring[i], ring[(i + 1) % n]) <= kContactToleranceNmi) return true;
  }
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2 vi = ring[i];
    const Vec2 vj = ring[j];
    if ((vi.y > p.y) != (vj.y > p.y)) {
      const double x_at = vj.x + (p.y - vj.y) * (vi.x - vj.x) / (vi.y - vj.y);
      if (p.x < x_at) inside = !inside;
    }
  }
  return inside;
}

}  // namespace planar

namespace {

std::vector<Vec2> ring_in_frame(const Polygon& poly, const LocalFrame& frame) {
  std::vector<Vec2> out;
  out.reserve(poly.size());
  for (const auto& v : poly.ring()) out.push_back(frame.to_local(v));
  return out;
}

}  // namespace

Polygon::Polygon(std::vector<GeoPoint> ring) : ring_(std::move(ring)) {
  const std::size_t n = ring_.size();
  if (n < 3) throw std::invalid_argument(fmt::format("polygon needs at least 3 vertices, got {}", n));
  if (ring_.front() == ring_.back()) {
    throw std::invalid_argument("polygon ring must not repeat its first vertex as the last");
  }
  double mean_lat = 0.0;
  for (const auto& v : ring_) mean_lat += v.lat / static_cast<double>(n);
  const LocalFrame frame(ring_.front(), mean_lat);
  const auto pts = ring_in_frame(*this, frame);

  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = pts[i];
    const Vec2 b = pts[(i + 1) % n];
    if (std::hypot(b.x - a.x, b.y - a.y) <= 1e-9) {
      throw std::invalid_argument(fmt::format("polygon edge {} has zero length", i));
    }
  }
  double area2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = pts[i];
    const Vec2 b = pts[(i + 1) % n];
    area2 += a.x * b.y - b.x * a.y;
  }
  if (std::abs(area2) <= 1e-12) throw std::invalid_argument("polygon has zero area");

  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = pts[i];
    const Vec2 b = pts[(i + 1) % n];
    // Adjacent edges share a vertex; they are invalid only if one folds back onto the other.
    const Vec2 c = pts[(i + 2) % n];
    if (planar::cross(a, b, c) == 0.0 && ((c.x - b.x) * (a.x - b.x) + (c.y - b.y) * (a.y - b.y)) > 0.0) {
      throw std::invalid_argument(fmt::format("polygon edges {} and {} overlap", i, (i + 1) % n));
    }
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (planar::segments_intersect(a, b, pts[j], pts[(j + 1) % n])) {
        throw std::invalid_argument(fmt::format("polygon edges {} and {} intersect", i, j));
      }
    }
  }
}

bool contains(const Polygon& poly, GeoPoint p, const LocalFrame& frame) {
  const auto pts = ring_in_frame(poly, frame);
  return planar::point_in_ring(frame.to_local(p), pts);
}

bool segment_intersects(GeoPoint a, GeoPoint b, const Polygon& poly, const DistanceModel& model) {
  const LocalFrame frame = LocalFrame::for_segment(a, b, model);
  const auto pts = ring_in_frame(poly, frame);
  const Vec2 pa = frame.to_local(a);
  const Vec2 pb = frame.to_local(b);
  if (planar::point_in_ring(pa, pts) || planar::point_in_ring(pb, pts)) return true;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (planar::segment_segment_distance(pa, pb, pts[i], pts[(i + 1) % n]) <= kContactToleranceNmi) return true;
  }
  return false;
}

}  // namespace routeval::geo
