#pragma once

#include <cstdint>
#include <variant>

#include "inftsn/engine/rng.hpp"
#include "inftsn/engine/time.hpp"
#include "inftsn/tsn/frame.hpp"

namespace inftsn {

struct ConstantDist {
  double value_s = 0;
  bool operator==(const ConstantDist&) const = default;
};

struct UniformDist {
  double low_s = 0;
  double high_s = 0;
  bool operator==(const UniformDist&) const = default;
};

struct ExponentialDist {
  double mean_s = 0;
  bool operator==(const ExponentialDist&) const = default;
};

using Distribution = std::variant<ConstantDist, UniformDist, ExponentialDist>;

double sample_distribution(const Distribution& d, RngStream& rng);
double distribution_mean_s(const Distribution& d);

// One periodic stream: payload size plus the emission-timing distributions.
// The first frame leaves at start + offset; each later frame follows the
// previous one by an interval draw (floored at 1 ns).
struct TrafficSpec {
  std::uint32_t payload_bytes = 0;
  Distribution interval{ConstantDist{}};
  Distribution start{ConstantDist{}};
  Distribution offset{ConstantDist{}};

  bool operator==(const TrafficSpec&) const = default;
};

// Built-in stream catalog: control 498 B every 55 ms, video 1453 B every
// 60-65 ms, best effort 1429 B at exponential 600 ms spacing, each with its
// own start window and per-stream phase offset.
TrafficSpec default_spec(TrafficClass c);

// Emits the frame sequence of one stream. Draw order is fixed: start and
// offset in the constructor, then one interval draw per emitted frame.
class StreamGenerator {
 public:
  StreamGenerator(TrafficSpec spec, std::uint32_t ue_id, TrafficClass cls,
                  Direction direction, int pcp, RngStream& rng);

  SimTime next_time() const { return next_time_; }
  std::uint64_t emitted() const { return seq_; }

  // Builds the frame stamped at next_time(), then advances to the following
  // emission instant.
  Frame emit();

 private:
  TrafficSpec spec_;
  std::uint32_t ue_id_;
  TrafficClass cls_;
  Direction direction_;
  int pcp_;
  RngStream& rng_;
  SimTime next_time_;
  std::uint64_t seq_ = 0;
};

}  // namespace inftsn
