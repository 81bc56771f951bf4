#include <chrono>
#include <random>

#include <gtest/gtest.h>

#include "routeval/safety.hpp"
#include "support.hpp"

namespace routeval {
namespace {

using testing::Plane;
using testing::rect_xy;
using testing::route_xy;

ObstacleMap map_of(std::vector<geo::Polygon> polys) {
  ObstacleMap m;
  for (auto& p : polys) m.obstacles.push_back(Obstacle{std::move(p), ObstacleKind::land, {}});
  return m;
}

SafetyConfig mc(double sigma, std::size_t samples = 2000, std::uint64_t seed = 99) {
  return SafetyConfig{SafetyMode::monte_carlo, samples, sigma, seed};
}

TEST(SafetyConfig, Validation) {
  EXPECT_THROW(mc(0.1, 50).validate(), std::invalid_argument);
  EXPECT_THROW(mc(-0.1).validate(), std::invalid_argument);
  EXPECT_NO_THROW((SafetyConfig{SafetyMode::deterministic, 1, std::nullopt, 0}).validate());
  EXPECT_EQ(safety_mode_from_string("monte-carlo"), SafetyMode::monte_carlo);
  EXPECT_THROW(safety_mode_from_string("mc"), std::invalid_argument);
  EXPECT_DOUBLE_EQ(*SafetyConfig{}.resolved(ShipProfile{10.0, 0.3}).sigma_nmi, 0.3);
}

TEST(Deterministic, HitOrMiss) {
  const Plane p;
  const auto obstacles = map_of({rect_xy(p, 4, -1, 6, 1)});
  const SafetyConfig det{SafetyMode::deterministic, 1, std::nullopt, 0};
  EXPECT_DOUBLE_EQ(p_collide(route_xy(p, {{0, 0}, {10, 0}}, 10.0), obstacles, det), 1.0);
  EXPECT_DOUBLE_EQ(p_collide(route_xy(p, {{0, 2}, {10, 2}}, 10.0), obstacles, det), 0.0);
  EXPECT_EQ(first_unsafe_leg(route_xy(p, {{0, 2}, {10, 2}, {5, 0}, {5, -5}}, 10.0), obstacles), 1u);
}

TEST(MonteCarlo, NoObstaclesMeansNoRisk) {
  const Plane p;
  EXPECT_DOUBLE_EQ(p_collide(route_xy(p, {{0, 0}, {10, 0}}, 10.0), ObstacleMap{}, mc(0.5)), 0.0);
  EXPECT_THROW(p_collide(route_xy(p, {{0, 0}, {10, 0}}, 10.0), map_of({rect_xy(p, 1, 1, 2, 2)}),
                         SafetyConfig{SafetyMode::monte_carlo, 1000, std::nullopt, 1}),
               std::invalid_argument);
}

TEST(MonteCarlo, DisplacementIsPerpendicularToIncomingLeg) {
  const Plane p;
  const Route r = route_xy(p, {{0, 0}, {10, 0}, {10, 10}}, 10.0);
  const DisplacementTable table(5, 10, r.size());
  for (std::size_t s = 0; s < 10; ++s) {
    const auto pts = perturbed_positions(r, table, s, 0.2);
    EXPECT_EQ(pts[0], r[0].position);
    const auto a = p.xy(pts[1]);
    const auto b = p.xy(pts[2]);
    EXPECT_NEAR(a.x, 10.0, 1e-9);  // east-going leg: offset north/south only
    EXPECT_NEAR(a.y, -0.2 * table.at(s, 1), 1e-9);
    EXPECT_NEAR(b.y, 10.0, 1e-9);  // north-going leg: offset east/west only
    EXPECT_NEAR(b.x, 10.0 + 0.2 * table.at(s, 2), 1e-9);
  }
}

// With sigma = 0 every sample is the unperturbed route.
TEST(MonteCarlo, ZeroSigmaEqualsDeterministic) {
  const Plane p;
  std::mt19937_64 gen(21);
  std::uniform_real_distribution<double> u(-30.0, 30.0), size(3.0, 12.0);
  const SafetyConfig det{SafetyMode::deterministic, 1, std::nullopt, 0};
  int hits = 0;
  for (int i = 0; i < 50; ++i) {
    const Route r = route_xy(p, testing::random_stops(gen, 2 + i % 6), 12.0);
    std::vector<geo::Polygon> polys;
    for (int k = 0; k < 3; ++k) {
      const double x = u(gen), y = u(gen);
      polys.push_back(rect_xy(p, x, y, x + size(gen), y + size(gen)));
    }
    const auto obstacles = map_of(std::move(polys));
    const double expected = p_collide(r, obstacles, det);
    EXPECT_EQ(p_collide(r, obstacles, mc(0.0, 200, i)), expected);
    hits += expected > 0.5;
  }
  EXPECT_GT(hits, 3);   // both outcomes exercised
  EXPECT_LT(hits, 47);
}

// A straight leg ending one sigma short of a half-plane: only the end point is
// displaced toward it, so the hit probability is P(Z >= 1).
TEST(MonteCarlo, HalfPlaneMatchesNormalTail) {
  const Plane p;
  const double sigma = 0.25;
  const auto obstacles = map_of({rect_xy(p, -50, sigma, 60, 50)});
  const Route r = route_xy(p, {{0, 0}, {10, 0}}, 10.0);
  const double pc = p_collide(r, obstacles, mc(sigma, 10000, 20120113));
  EXPECT_NEAR(pc, 0.1587, 0.01);
  EXPECT_EQ(pc, p_collide(r, obstacles, mc(sigma, 10000, 20120113)));
  EXPECT_NE(pc, p_collide(r, obstacles, mc(sigma, 10000, 7)));
}

TEST(MonteCarlo, IncreasesAsRouteNearsObstacle) {
  const Plane p;
  const auto obstacles = map_of({rect_xy(p, -50, 1.0, 60, 50)});
  double last = -1.0;
  for (const double y : {-1.0, -0.5, 0.0, 0.5, 0.9}) {
    const double pc = p_collide(route_xy(p, {{0, y}, {5, y}, {10, y}}, 10.0), obstacles, mc(0.5));
    EXPECT_GE(pc, last);
    last = pc;
  }
}

TEST(DisplacementTable, EntriesIndependentOfTableShape) {
  const DisplacementTable small(11, 5, 3);
  const DisplacementTable large(11, 50, 7);
  for (std::size_t s = 0; s < 5; ++s) {
    for (std::size_t w = 0; w < 3; ++w) EXPECT_EQ(small.at(s, w), large.at(s, w));
  }
}

}  // namespace
}  // namespace routeval
