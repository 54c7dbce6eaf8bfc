#include "inftsn/mobility/mobility.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace inftsn {

double named_region_radius(std::string_view name) {
  if (name == "d1") return 85.0;
  if (name == "d2") return 170.0;
  if (name == "d3") return 255.0;
  throw std::invalid_argument("unknown region name: " + std::string(name));
}

Position3D sample_position(double radius_m, RngStream& rng, double z_m) {
  if (!(radius_m > 0.0)) {
    throw std::invalid_argument("region radius must be positive");
  }
  const double r = radius_m * std::sqrt(rng.uniform01());
  const double theta = 2.0 * std::numbers::pi * rng.uniform01();
  Position3D p;
  p.x = r * std::cos(theta);
  p.y = r * std::sin(theta);
  p.z = z_m;
  return p;
}

Waypoint sample_waypoint(double radius_m, double speed_min_mps,
                         double speed_max_mps, RngStream& rng, double z_m) {
  if (!(speed_min_mps > 0.0) || speed_max_mps < speed_min_mps) {
    throw std::invalid_argument("speed range must satisfy 0 < min <= max");
  }
  Waypoint w;
  w.pos = sample_position(radius_m, rng, z_m);
  w.speed_mps = rng.uniform(speed_min_mps, speed_max_mps);
  return w;
}

SimTime MobilityLeg::arrival_time() const {
  if (!(speed_mps > 0.0)) {
    throw std::invalid_argument("leg speed must be positive");
  }
  const double dist = distance_3d(from, to);
  SimTime arrival = depart + SimTime::from_seconds(dist / speed_mps);
  if (arrival.ns() <= depart.ns()) {
    arrival = SimTime::from_ns(depart.ns() + 1);
  }
  return arrival;
}

Position3D MobilityLeg::position_at(SimTime t) const {
  const SimTime arrival = arrival_time();
  if (t.ns() <= depart.ns()) return from;
  if (t.ns() >= arrival.ns()) return to;
  const double frac = static_cast<double>(t.ns() - depart.ns()) /
                      static_cast<double>(arrival.ns() - depart.ns());
  Position3D p;
  p.x = from.x + (to.x - from.x) * frac;
  p.y = from.y + (to.y - from.y) * frac;
  p.z = from.z + (to.z - from.z) * frac;
  return p;
}

}  // namespace inftsn
