#include <random>

#include <gtest/gtest.h>

#include "routeval/route.hpp"
#include "routeval/timestamp.hpp"
#include "support.hpp"

namespace routeval {
namespace {

using testing::kT0;
using testing::Plane;

TEST(Timestamp, ParsesUtcForms) {
  EXPECT_DOUBLE_EQ(parse_iso8601("1970-01-01T00:00:00Z"), 0.0);
  EXPECT_DOUBLE_EQ(parse_iso8601("2012-01-13T21:45:07Z"), 1326491107.0);
  EXPECT_DOUBLE_EQ(parse_iso8601("2012-01-13T21:45:07+00:00"), 1326491107.0);
  EXPECT_DOUBLE_EQ(parse_iso8601("2012-01-13T21:45:07.250Z"), 1326491107.25);
  EXPECT_DOUBLE_EQ(parse_iso8601("2000-02-29T12:00:00Z"), 951825600.0);
}

TEST(Timestamp, RejectsMalformed) {
  for (const char* bad : {"2012-01-13 21:45:07Z", "2012-01-13T21:45:07", "2012-13-01T00:00:00Z",
                          "2011-02-29T00:00:00Z", "2012-01-13T24:00:00Z", "2012-01-13T21:45:07+01:00", ""}) {
    EXPECT_THROW(parse_iso8601(bad), std::invalid_argument) << bad;
  }
}

TEST(Timestamp, MillisecondRoundTrip) {
  std::mt19937_64 gen(1);
  std::uniform_int_distribution<long long> ms(0, 4'000'000'000'000LL);
  for (int i = 0; i < 1000; ++i) {
    const double t = static_cast<double>(ms(gen)) / 1000.0;
    const std::string s = format_iso8601(t);
    EXPECT_EQ(format_iso8601(parse_iso8601(s)), s);
    EXPECT_DOUBLE_EQ(parse_iso8601(s), round_to_millis(t));
  }
  EXPECT_EQ(format_iso8601(1326491107.0), "2012-01-13T21:45:07Z");
  EXPECT_EQ(format_iso8601(1326491107.5), "2012-01-13T21:45:07.500Z");
}

WaypointInput wp(const Plane& p, double x, double y, double eta, std::optional<double> etd = std::nullopt,
                 std::optional<double> speed = std::nullopt) {
  return WaypointInput{p.at(x, y), eta, etd, speed, {}};
}

TEST(Route, DerivesLegs) {
  const Plane p;
  const std::vector<WaypointInput> in{wp(p, 0, 0, kT0), wp(p, 0, 10, kT0 + 3600, kT0 + 4200), wp(p, 10, 10, kT0 + 7800)};
  const Route r = Route::derive("r", RouteLabel::planned, in, p.model());
  ASSERT_EQ(r.size(), 3u);
  EXPECT_NEAR(r[0].leg->course_deg, 0.0, 1e-9);
  EXPECT_NEAR(r[0].leg->distance_nmi, 10.0, 1e-9);
  EXPECT_NEAR(r[0].leg->speed_kn, 10.0, 1e-9);
  EXPECT_NEAR(r[1].leg->course_deg, 90.0, 1e-9);
  EXPECT_NEAR(r[1].leg->speed_kn, 10.0, 1e-9);
  EXPECT_FALSE(r[2].leg);
  EXPECT_DOUBLE_EQ(r[1].wait_s(), 600.0);
  EXPECT_NEAR(r.length_nmi(), 20.0, 1e-9);
  EXPECT_NEAR(r.travel_time_h(), 7800.0 / 3600.0, 1e-12);
}

TEST(Route, RejectsInvariantViolations) {
  const Plane p;
  using F = RouteError::Field;
  const auto fails = [&](std::vector<WaypointInput> in, std::size_t wp_index, F field) {
    try {
      Route::derive("r", RouteLabel::planned, in, p.model());
      ADD_FAILURE() << "expected RouteError";
    } catch (const RouteError& e) {
      EXPECT_EQ(e.waypoint(), wp_index) << e.what();
      EXPECT_EQ(e.field(), field) << e.what();
    }
  };
  fails({wp(p, 0, 0, kT0)}, 0, F::route);
  fails({wp(p, 0, 0, kT0, kT0 - 1), wp(p, 0, 1, kT0 + 3600)}, 0, F::etd);
  fails({wp(p, 0, 0, kT0), wp(p, 0, 1, kT0)}, 1, F::eta);
  fails({wp(p, 0, 0, kT0, kT0 + 100), wp(p, 0, 1, kT0 + 50)}, 1, F::eta);
  fails({wp(p, 0, 0, kT0), wp(p, 0, 0, kT0 + 60)}, 1, F::position);
  fails({wp(p, 0, 0, kT0, kT0 + 60), wp(p, 0, 1, kT0 + 60)}, 1, F::eta);
  fails({wp(p, 0, 0, kT0, std::nullopt, 0.0), wp(p, 0, 1, kT0 + 360)}, 0, F::speed);
  fails({wp(p, 0, 0, kT0, std::nullopt, 20.0), wp(p, 0, 1, kT0 + 360)}, 0, F::speed);
}

TEST(Route, ExplicitSpeedWithinToleranceIsKept) {
  const Plane p;
  const std::vector<WaypointInput> in{wp(p, 0, 0, kT0, std::nullopt, 10.0), wp(p, 0, 1, kT0 + 360.4)};
  const Route r = Route::derive("r", RouteLabel::planned, in, p.model());
  EXPECT_DOUBLE_EQ(r[0].leg->speed_kn, 10.0);
}

TEST(Route, SingleWaypointPrefixAllowedOnRequest) {
  const Plane p;
  const std::vector<WaypointInput> in{wp(p, 0, 0, kT0)};
  EXPECT_EQ(Route::derive("r", RouteLabel::actual, in, p.model(), 1).size(), 1u);
}

// Leg times plus intermediate waits add up to the span from first ETD to last ETA.
TEST(Route, LegTimesAndWaitsCoverTheVoyage) {
  const Plane p;
  std::mt19937_64 gen(2);
  std::uniform_real_distribution<double> speed(4.0, 25.0);
  for (int i = 0; i < 100; ++i) {
    const auto stops = testing::random_stops(gen, 2 + i % 8, 900.0);
    std::vector<double> speeds;
    for (std::size_t k = 0; k + 1 < stops.size(); ++k) speeds.push_back(speed(gen));
    const Route r = testing::route_xy(p, stops, speeds);
    double total = 0.0;
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (r[k].leg) total += r[k].leg->duration_s();
      if (k > 0 && k + 1 < r.size()) total += r[k].wait_s();
    }
    EXPECT_NEAR(total, r.back().eta - r.front().etd, 1e-6);
    const Route rebuilt = Route::derive("r", RouteLabel::planned, r.inputs(), p.model());
    for (std::size_t k = 0; k + 1 < r.size(); ++k) EXPECT_EQ(rebuilt[k].leg->speed_kn, r[k].leg->speed_kn);
  }
}

TEST(RouteLabel, RoundTrips) {
  for (const auto l : {RouteLabel::planned, RouteLabel::actual, RouteLabel::predicted, RouteLabel::candidate}) {
    EXPECT_EQ(route_label_from_string(to_string(l)), l);
  }
  EXPECT_THROW(route_label_from_string("other"), std::invalid_argument);
}

}  // namespace
}  // namespace routeval
