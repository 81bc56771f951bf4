#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "routeval/geo.hpp"
#include "support.hpp"

namespace routeval::geo {
namespace {

using testing::Plane;

const DistanceModel kGc = DistanceModel::great_circle();

TEST(GeoPoint, ValidatesAndWrapsLongitude) {
  EXPECT_DOUBLE_EQ(GeoPoint::make(10.0, 190.0).lon, -170.0);
  EXPECT_DOUBLE_EQ(GeoPoint::make(10.0, -180.0).lon, -180.0);
  EXPECT_DOUBLE_EQ(GeoPoint::make(10.0, 180.0).lon, -180.0);
  EXPECT_THROW(GeoPoint::make(90.5, 0.0), std::invalid_argument);
  EXPECT_THROW(GeoPoint::make(NAN, 0.0), std::invalid_argument);
}

TEST(Distance, OneMinuteOfLatitudeIsAboutOneMile) {
  // R * 1' in radians.
  const double expected = kEarthRadiusNmi * (1.0 / 60.0) * M_PI / 180.0;
  EXPECT_NEAR(distance({0.0, 0.0}, {1.0 / 60.0, 0.0}, kGc), expected, 1e-12);
  EXPECT_NEAR(distance({0.0, 0.0}, {1.0 / 60.0, 0.0}, DistanceModel::planar(0.0)), expected, 1e-12);
}

TEST(Distance, QuarterMeridian) {
  EXPECT_NEAR(distance({0.0, 30.0}, {90.0, 30.0}, kGc), kEarthRadiusNmi * M_PI / 2.0, 1e-9);
}

TEST(Distance, AntimeridianIsShortWay) {
  EXPECT_NEAR(distance({0.0, 179.5}, {0.0, -179.5}, kGc), kEarthRadiusNmi * M_PI / 180.0, 1e-9);
}

TEST(Bearing, CardinalDirections) {
  for (const auto& model : {kGc, DistanceModel::planar(0.0)}) {
    EXPECT_NEAR(bearing({0, 0}, {1, 0}, model), 0.0, 1e-9);
    EXPECT_NEAR(bearing({0, 0}, {0, 1}, model), 90.0, 1e-9);
    EXPECT_NEAR(bearing({0, 0}, {-1, 0}, model), 180.0, 1e-9);
    EXPECT_NEAR(bearing({0, 0}, {0, -1}, model), 270.0, 1e-9);
  }
}

TEST(Project, ZeroDistanceReturnsStartExactly) {
  const GeoPoint p{12.3456789, -45.678};
  EXPECT_EQ(project(p, 123.0, 0.0, kGc), p);
  EXPECT_EQ(project(p, 123.0, 0.0, DistanceModel::planar(12.0)), p);
  EXPECT_THROW(project(p, 0.0, -1.0, kGc), std::invalid_argument);
}

TEST(Project, PlanarPastPoleThrows) {
  EXPECT_THROW(project({89.9, 0.0}, 0.0, 100.0, DistanceModel::planar(60.0)), std::domain_error);
}

// Points, distance and bearing are consistent: projecting along bearing(a, b)
// by distance(a, b) lands on b.
TEST(Project, InvertsBearingAndDistance) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> lat(-70.0, 70.0), lon(-180.0, 180.0), off(-1.5, 1.5);
  for (int i = 0; i < 500; ++i) {
    const GeoPoint a = GeoPoint::make(lat(gen), lon(gen));
    const GeoPoint b = GeoPoint::make(a.lat + off(gen), a.lon + off(gen));
    for (const auto& model : {kGc, DistanceModel::planar(a.lat)}) {
      const GeoPoint c = project(a, bearing(a, b, model), distance(a, b, model), model);
      EXPECT_LT(distance(b, c, kGc), 1e-7);
    }
  }
}

TEST(Project, PlanarReverseCourseReturns) {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> course(0.0, 360.0), dist(0.1, 150.0);
  const auto model = DistanceModel::planar(45.0);
  for (int i = 0; i < 200; ++i) {
    const GeoPoint a{45.0, 10.0};
    const double c = course(gen);
    const double d = dist(gen);
    const GeoPoint b = project(a, c, d, model);
    const GeoPoint back = project(b, normalize_course(c + 180.0), d, model);
    EXPECT_LT(distance(a, back, model), 1e-9);
  }
}

// On the sphere the reverse course is the back-azimuth at the far end, not c + 180.
TEST(Project, GreatCircleBackAzimuthReturns) {
  std::mt19937_64 gen(9);
  std::uniform_real_distribution<double> course(0.0, 360.0), dist(1.0, 2000.0);
  for (int i = 0; i < 200; ++i) {
    const GeoPoint a{30.0, -40.0};
    const GeoPoint b = project(a, course(gen), dist(gen), kGc);
    const GeoPoint back = project(b, bearing(b, a, kGc), distance(b, a, kGc), kGc);
    EXPECT_LT(distance(a, back, kGc), 1e-7);
  }
}

TEST(Distance, TriangleInequality) {
  std::mt19937_64 gen(10);
  std::uniform_real_distribution<double> lat(-60.0, 60.0), lon(-30.0, 30.0);
  for (int i = 0; i < 1000; ++i) {
    const GeoPoint a{lat(gen), lon(gen)}, b{lat(gen), lon(gen)}, c{lat(gen), lon(gen)};
    for (const auto& model : {kGc, DistanceModel::planar(0.0)}) {
      EXPECT_LE(distance(a, c, model), distance(a, b, model) + distance(b, c, model) + 1e-9);
    }
  }
}

TEST(Distance, PlanarTranslationAndScale) {
  const Plane plane;
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(-50.0, 50.0), k(0.1, 3.0);
  for (int i = 0; i < 500; ++i) {
    const double ax = u(gen), ay = u(gen), bx = u(gen), by = u(gen), tx = u(gen), ty = u(gen), s = k(gen);
    const double d = distance(plane.at(ax, ay), plane.at(bx, by), plane.model());
    EXPECT_NEAR(distance(plane.at(ax + tx, ay + ty), plane.at(bx + tx, by + ty), plane.model()), d, 1e-9);
    EXPECT_NEAR(distance(plane.at(s * ax, s * ay), plane.at(s * bx, s * by), plane.model()), s * d, 1e-9 * (1 + s * d));
    EXPECT_NEAR(d, std::hypot(bx - ax, by - ay), 1e-9);
  }
}

TEST(Polygon, RejectsDegenerateRings) {
  EXPECT_THROW(Polygon({{0, 0}, {0, 1}}), std::invalid_argument);
  EXPECT_THROW(Polygon({{0, 0}, {0, 1}, {1, 1}, {0, 0}}), std::invalid_argument);  // closing vertex
  EXPECT_THROW(Polygon({{0, 0}, {0, 1}, {0, 2}}), std::invalid_argument);          // no area
  EXPECT_THROW(Polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), std::invalid_argument);  // bow tie
  EXPECT_THROW(Polygon({{0, 0}, {0, 1}, {0, 1}, {1, 1}}), std::invalid_argument);  // zero edge
  EXPECT_NO_THROW(Polygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}));
}

using planar::point_in_ring;
using planar::segments_intersect;

TEST(Planar, SegmentIntersectionCases) {
  EXPECT_TRUE(segments_intersect({0, 0}, {2, 2}, {0, 2}, {2, 0}));
  EXPECT_FALSE(segments_intersect({0, 0}, {1, 0}, {0, 1}, {1, 1}));
  EXPECT_TRUE(segments_intersect({0, 0}, {2, 0}, {1, 0}, {3, 0}));   // collinear overlap
  EXPECT_FALSE(segments_intersect({0, 0}, {1, 0}, {2, 0}, {3, 0}));  // collinear, apart
  EXPECT_TRUE(segments_intersect({0, 0}, {1, 0}, {1, 0}, {1, 5}));   // shared endpoint
  EXPECT_TRUE(segments_intersect({0, 0}, {2, 0}, {1, 0}, {1, 5}));   // T junction
}

TEST(Planar, PointInRingIncludesBoundary) {
  const std::vector<Vec2> sq{{0, 0}, {2, 0}, {2, 2}, {0, 2}};
  EXPECT_TRUE(point_in_ring({1, 1}, sq));
  EXPECT_TRUE(point_in_ring({2, 1}, sq));
  EXPECT_TRUE(point_in_ring({0, 0}, sq));
  EXPECT_FALSE(point_in_ring({2.1, 1}, sq));
  const std::vector<Vec2> ell{{0, 0}, {3, 0}, {3, 1}, {1, 1}, {1, 3}, {0, 3}};
  EXPECT_FALSE(point_in_ring({2, 2}, ell));
  EXPECT_TRUE(point_in_ring({0.5, 2.5}, ell));
}

TEST(SegmentIntersects, TouchingCountsAsContact) {
  const Plane plane;
  const Polygon sq = testing::rect_xy(plane, 0, 0, 2, 2);
  const auto m = plane.model();
  EXPECT_TRUE(segment_intersects(plane.at(-1, 1), plane.at(3, 1), sq, m));     // crosses
  EXPECT_TRUE(segment_intersects(plane.at(0.5, 0.5), plane.at(1, 1), sq, m));  // inside
  EXPECT_TRUE(segment_intersects(plane.at(-1, 2), plane.at(3, 2), sq, m));     // along edge
  EXPECT_TRUE(segment_intersects(plane.at(-1, 3), plane.at(1, 1.5), sq, m));   // ends inside
  EXPECT_FALSE(segment_intersects(plane.at(-1, 2.01), plane.at(3, 2.01), sq, m));
  EXPECT_TRUE(segment_intersects(plane.at(-1, 3), plane.at(3, -1), sq, m));    // diagonal through
}

// Oracle: dense sampling of the segment plus a point-in-polygon test.
// Segments kept at least 0.05 nmi from tangency so sampling cannot miss.
TEST(SegmentIntersects, AgreesWithSamplingOracle) {
  const Plane plane;
  std::mt19937_64 gen(12);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  const std::vector<Vec2> ring{{-2, -3}, {3, -2}, {4, 2}, {0, 1}, {-3, 3}};
  std::vector<GeoPoint> geo_ring;
  for (const auto v : ring) geo_ring.push_back(plane.at(v.x, v.y));
  const Polygon poly(geo_ring);
  int checked = 0;
  while (checked < 400) {
    const Vec2 a{u(gen), u(gen)}, b{u(gen), u(gen)};
    bool oracle = false;
    double min_edge_dist = 1e9;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      min_edge_dist = std::min(min_edge_dist,
                               planar::segment_segment_distance(a, b, ring[i], ring[(i + 1) % ring.size()]));
    }
    constexpr int kSteps = 4000;
    for (int s = 0; s <= kSteps && !oracle; ++s) {
      const double t = static_cast<double>(s) / kSteps;
      oracle = point_in_ring({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}, ring);
    }
    if (!oracle && min_edge_dist < 0.05) continue;  // grazing case, not decidable by sampling
    EXPECT_EQ(segment_intersects(plane.at(a.x, a.y), plane.at(b.x, b.y), poly, plane.model()), oracle);
    ++checked;
  }
}

}  // namespace
}  // namespace routeval::geo
