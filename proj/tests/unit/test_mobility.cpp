#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "inftsn/engine/rng.hpp"
#include "inftsn/mobility/mobility.hpp"

using namespace inftsn;

TEST_SUITE("mobility") {

TEST_CASE("named deployment radii") {
  CHECK(named_region_radius("d1") == 85.0);
  CHECK(named_region_radius("d2") == 170.0);
  CHECK(named_region_radius("d3") == 255.0);
  CHECK_THROWS_AS(named_region_radius("d4"), std::invalid_argument);
  CHECK_THROWS_AS(named_region_radius(""), std::invalid_argument);
}

TEST_CASE("positions land uniformly inside the disc") {
  RngStream rng(1, "mobility.ue0");
  const double radius = 170.0;
  int inner = 0;  // within radius/sqrt(2), should hold half the points
  for (int i = 0; i < 10000; ++i) {
    const Position3D p = sample_position(radius, rng, 1.5);
    const double r = std::hypot(p.x, p.y);
    CHECK(r <= radius);
    CHECK(p.z == 1.5);
    if (r <= radius / std::sqrt(2.0)) ++inner;
  }
  // Area-uniform: P(r <= R/sqrt(2)) = 1/2.
  CHECK(inner == doctest::Approx(5000).epsilon(0.03));
}

TEST_CASE("waypoints carry a bounded speed") {
  RngStream rng(1, "mobility.ue1");
  for (int i = 0; i < 1000; ++i) {
    const Waypoint w = sample_waypoint(85.0, 0.2, 1.5, rng, 1.5);
    CHECK(w.speed_mps >= 0.2);
    CHECK(w.speed_mps < 1.5);
    CHECK(std::hypot(w.pos.x, w.pos.y) <= 85.0);
  }
  CHECK_THROWS_AS(sample_waypoint(85.0, 0.0, 1.5, rng, 1.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(sample_waypoint(85.0, 2.0, 1.5, rng, 1.5),
                  std::invalid_argument);
}

TEST_CASE("a leg interpolates linearly between its endpoints") {
  MobilityLeg leg;
  leg.from = {0.0, 0.0, 1.5};
  leg.to = {3.0, 4.0, 1.5};  // 5 m long
  leg.depart = SimTime::from_seconds(10.0);
  leg.speed_mps = 1.0;

  CHECK(leg.arrival_time().ns() == 15000000000);  // 10 s + 5 m / 1 m/s

  const Position3D mid = leg.position_at(SimTime::from_seconds(12.5));
  CHECK(mid.x == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(mid.y == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(mid.z == 1.5);

  // Clamped before departure and after arrival.
  const Position3D before = leg.position_at(SimTime::from_seconds(9.0));
  CHECK(before.x == 0.0);
  CHECK(before.y == 0.0);
  const Position3D after = leg.position_at(SimTime::from_seconds(20.0));
  CHECK(after.x == 3.0);
  CHECK(after.y == 4.0);
}

TEST_CASE("a zero-length leg still advances time") {
  MobilityLeg leg;
  leg.from = {5.0, 5.0, 1.5};
  leg.to = {5.0, 5.0, 1.5};
  leg.depart = SimTime::from_ns(1000);
  leg.speed_mps = 1.0;
  CHECK(leg.arrival_time().ns() == 1001);  // floored one ns after departure
  const Position3D p = leg.position_at(SimTime::from_ns(1000));
  CHECK(p.x == 5.0);
}

TEST_CASE("speed must be positive to travel") {
  MobilityLeg leg;
  leg.from = {0.0, 0.0, 1.5};
  leg.to = {1.0, 0.0, 1.5};
  leg.depart = SimTime::from_ns(0);
  leg.speed_mps = 0.0;
  CHECK_THROWS_AS(leg.arrival_time(), std::invalid_argument);
}

TEST_CASE("two streams with the same name replay the same walk") {
  RngStream a(42, "mobility.ue7");
  RngStream b(42, "mobility.ue7");
  for (int i = 0; i < 100; ++i) {
    const Waypoint wa = sample_waypoint(255.0, 0.2, 1.5, a, 1.5);
    const Waypoint wb = sample_waypoint(255.0, 0.2, 1.5, b, 1.5);
    CHECK(wa.pos.x == wb.pos.x);
    CHECK(wa.pos.y == wb.pos.y);
    CHECK(wa.speed_mps == wb.speed_mps);
  }
}

}  // TEST_SUITE
