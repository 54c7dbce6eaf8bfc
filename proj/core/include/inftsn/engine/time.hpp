#pragma once

#include <cmath>
#include <compare>
#include <cstdint>

namespace inftsn {

// Simulation time as integer nanoseconds. Event arithmetic stays exact;
// floating-point seconds exist only at the configuration and report boundary.
class SimTime {
 public:
  constexpr SimTime() = default;

  static constexpr SimTime from_ns(std::int64_t ns) { return SimTime(ns); }
  static SimTime from_seconds(double s) {
    return SimTime(static_cast<std::int64_t>(std::llround(s * 1e9)));
  }

  constexpr std::int64_t ns() const { return ns_; }
  constexpr double seconds() const { return static_cast<double>(ns_) * 1e-9; }

  friend constexpr auto operator<=>(SimTime a, SimTime b) = default;

  constexpr SimTime operator+(SimTime o) const { return SimTime(ns_ + o.ns_); }
  constexpr SimTime operator-(SimTime o) const { return SimTime(ns_ - o.ns_); }
  SimTime& operator+=(SimTime o) {
    ns_ += o.ns_;
    return *this;
  }

 private:
  constexpr explicit SimTime(std::int64_t ns) : ns_(ns) {}
  std::int64_t ns_ = 0;
};

}  // namespace inftsn
