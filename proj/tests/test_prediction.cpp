#include <random>

#include <gtest/gtest.h>

#include "routeval/prediction.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace routeval {
namespace {

using testing::Plane;
using testing::route_xy;
using testing::Stop;
using testing::random_case;
using testing::replay_oracle;

TEST(Predict, MatchesReplayOracle) {
  const Plane plane;
  std::mt19937_64 gen(31);
  for (int i = 0; i < 100; ++i) {
    const testing::PredictionCase c = random_case(gen, plane);
    const PredictedRoute pred = predict(c.scenario, c.at);
    const auto expected = replay_oracle(c.scenario, c.at, plane);
    ASSERT_EQ(pred.composite.size(), expected.size());
    EXPECT_EQ(pred.split_index, c.at);
    for (std::size_t k = 0; k < expected.size(); ++k) {
      const auto got = plane.xy(pred.composite[k].position);
      EXPECT_LT(std::hypot(got.x - expected[k].xy.x, got.y - expected[k].xy.y), 1e-6) << "case " << i << " wp " << k;
      EXPECT_NEAR(pred.composite[k].eta, expected[k].eta, 1e-3);
      EXPECT_NEAR(pred.composite[k].etd, expected[k].etd, 1e-3);
      EXPECT_EQ(pred.provenance[k], k <= c.at ? Provenance::sailed : Provenance::predicted);
    }
    EXPECT_EQ(pred.composite.label(), RouteLabel::predicted);
  }
}

TEST(Predict, ZeroDeviationReproducesPlan) {
  const Plane plane;
  std::mt19937_64 gen(32);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 2 + i % 8;
    const auto stops = testing::random_stops(gen, n, 600.0);
    const Route planned = route_xy(plane, stops, 11.0);
    const std::size_t m = 1 + static_cast<std::size_t>(i) % (n - 1);
    auto inputs = planned.inputs();
    inputs.resize(m);
    inputs.back().speed_kn = planned[m - 1].leg->speed_kn;
    const Route actual = Route::derive("actual", RouteLabel::actual, inputs, plane.model(), 1);
    const Scenario s = testing::make_scenario(plane.model(), planned, actual);
    for (std::size_t at = 0; at < m; ++at) {
      const PredictedRoute pred = predict(s, at);
      ASSERT_EQ(pred.composite.size(), planned.size());
      for (std::size_t k = 0; k < planned.size(); ++k) {
        EXPECT_LT(geo::distance(pred.composite[k].position, planned[k].position, plane.model()), 1e-9);
        EXPECT_NEAR(pred.composite[k].eta, planned[k].eta, 1e-6);
      }
    }
  }
}

TEST(Predict, TranslationEquivariant) {
  const Plane plane;
  std::mt19937_64 gen(33);
  std::uniform_real_distribution<double> shift(-40.0, 40.0);
  for (int i = 0; i < 50; ++i) {
    const testing::PredictionCase c = random_case(gen, plane);
    const double dx = shift(gen), dy = shift(gen);
    const auto move = [&](const Route& r) {
      auto in = r.inputs();
      for (auto& w : in) {
        const auto v = plane.xy(w.position);
        w.position = plane.at(v.x + dx, v.y + dy);
      }
      return Route::derive(r.id(), r.label(), in, plane.model(), 1);
    };
    const Scenario moved = testing::make_scenario(plane.model(), move(c.scenario.planned), move(c.scenario.actual));
    const PredictedRoute a = predict(c.scenario, c.at);
    const PredictedRoute b = predict(moved, c.at);
    ASSERT_EQ(a.composite.size(), b.composite.size());
    for (std::size_t k = 0; k < a.composite.size(); ++k) {
      const auto pa = plane.xy(a.composite[k].position);
      const auto pb = plane.xy(b.composite[k].position);
      EXPECT_NEAR(pb.x - pa.x, dx, 1e-9);
      EXPECT_NEAR(pb.y - pa.y, dy, 1e-9);
    }
  }
}

TEST(Predict, RejectsUnpairedAndFinalWaypoints) {
  const Plane plane;
  const Route planned = route_xy(plane, {{0, 0}, {10, 0}, {20, 0}}, 10.0);
  const Route actual = route_xy(plane, {{0, 0}, {5, 1}, {10, 1}, {20, 1}}, 10.0, RouteLabel::actual);
  const Scenario s = testing::make_scenario(plane.model(), planned, actual, Correspondence({{0, 0}, {2, 1}, {3, 2}}));
  EXPECT_THROW(predict(s, 1), std::invalid_argument);
  EXPECT_THROW(predict(s, 3), std::invalid_argument);
  EXPECT_THROW(predict(s, 4), std::invalid_argument);
  const PredictedRoute p = predict(s, 2);
  EXPECT_EQ(p.composite.size(), 4u);
  EXPECT_NEAR(plane.xy(p.composite[3].position).x, 20.0, 1e-9);
  EXPECT_NEAR(plane.xy(p.composite[3].position).y, 1.0, 1e-9);
}

TEST(Acceptability, DropsBeyondThresholds) {
  const CoefficientVector planned{1.0, 0.9, 0.8, 0.5, 0.0};
  const Thresholds t;
  EXPECT_TRUE(acceptability(planned, planned, t).acceptable);
  EXPECT_TRUE(acceptability({0.96, 0.81, 0.71, 0.26, 0.0}, planned, t).acceptable);
  // A drop equal to the threshold is tolerated (values exact in binary).
  EXPECT_TRUE(acceptability({0.75, 0.75, 0.75, 0.75, 0.0}, {1.0, 1.0, 1.0, 1.0, 0.0}, Thresholds{0.25, 0.25, 0.25, 0.25})
                  .acceptable);
  const auto a = acceptability({0.5, 0.7, 0.8, 0.5, 0.0}, planned, t);
  EXPECT_FALSE(a.acceptable);
  EXPECT_EQ(a.reasons, (std::vector<Coefficient>{Coefficient::safety, Coefficient::distance}));
  // S = 0 always advises replanning, even with a permissive safety threshold.
  const auto zero = acceptability({0.0, 0.9, 0.8, 0.5, 0.0}, {0.0, 0.9, 0.8, 0.5, 0.0}, Thresholds{1.0, 1.0, 1.0, 1.0});
  EXPECT_EQ(zero.reasons, (std::vector<Coefficient>{Coefficient::safety}));
  // Improvements never count against the route.
  EXPECT_TRUE(acceptability({1.0, 1.0, 1.0, 1.0, 0.0}, planned, t).acceptable);
}

}  // namespace
}  // namespace routeval
