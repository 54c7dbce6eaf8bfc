#pragma once

#include <string_view>

#include "inftsn/channel/channel.hpp"
#include "inftsn/engine/rng.hpp"
#include "inftsn/engine/time.hpp"

namespace inftsn {

// Deployment disc radii selectable by name: d1 = 85 m, d2 = 170 m,
// d3 = 255 m.
double named_region_radius(std::string_view name);

// Uniform point on a disc of the given radius centered on the origin
// (r = R*sqrt(u), theta = 2*pi*u; z as given). Two draws.
Position3D sample_position(double radius_m, RngStream& rng, double z_m);

struct Waypoint {
  Position3D pos;
  double speed_mps = 0;
};

// Next waypoint of a random walk: uniform disc position plus a uniform
// speed draw. Three draws, position first.
Waypoint sample_waypoint(double radius_m, double speed_min_mps,
                         double speed_max_mps, RngStream& rng, double z_m);

// One straight constant-speed leg between waypoints, with zero pause time.
struct MobilityLeg {
  Position3D from;
  Position3D to;
  SimTime depart;
  double speed_mps = 1.0;

  // Departure plus travel time, floored one nanosecond after departure so
  // zero-length legs still make progress.
  SimTime arrival_time() const;

  // Position linearly interpolated along the leg; clamped to the endpoints
  // outside [depart, arrival].
  Position3D position_at(SimTime t) const;
};

}  // namespace inftsn
