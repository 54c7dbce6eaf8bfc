#include "inftsn/traffic/traffic.hpp"

#include <algorithm>
#include <stdexcept>

namespace inftsn {

double sample_distribution(const Distribution& d, RngStream& rng) {
  if (const auto* c = std::get_if<ConstantDist>(&d)) return c->value_s;
  if (const auto* u = std::get_if<UniformDist>(&d)) {
    return rng.uniform(u->low_s, u->high_s);
  }
  return rng.exponential(std::get<ExponentialDist>(d).mean_s);
}

double distribution_mean_s(const Distribution& d) {
  if (const auto* c = std::get_if<ConstantDist>(&d)) return c->value_s;
  if (const auto* u = std::get_if<UniformDist>(&d)) {
    return 0.5 * (u->low_s + u->high_s);
  }
  return std::get<ExponentialDist>(d).mean_s;
}

TrafficSpec default_spec(TrafficClass c) {
  TrafficSpec s;
  switch (c) {
    case TrafficClass::NetworkControl:
      s.payload_bytes = 498;
      s.interval = ConstantDist{0.055};
      s.start = UniformDist{0.0, 0.1};
      s.offset = UniformDist{0.0, 0.005};
      return s;
    case TrafficClass::Video:
      s.payload_bytes = 1453;
      s.interval = UniformDist{0.060, 0.065};
      s.start = UniformDist{0.2, 0.5};
      s.offset = UniformDist{0.0, 0.020};
      return s;
    case TrafficClass::BestEffort:
      s.payload_bytes = 1429;
      s.interval = ExponentialDist{0.600};
      s.start = UniformDist{0.5, 1.0};
      s.offset = UniformDist{0.0, 0.100};
      return s;
  }
  throw std::invalid_argument("unknown traffic class enum value");
}

StreamGenerator::StreamGenerator(TrafficSpec spec, std::uint32_t ue_id,
                                 TrafficClass cls, Direction direction,
                                 int pcp, RngStream& rng)
    : spec_(spec),
      ue_id_(ue_id),
      cls_(cls),
      direction_(direction),
      pcp_(pcp),
      rng_(rng) {
  const double start_s = sample_distribution(spec_.start, rng_);
  const double offset_s = sample_distribution(spec_.offset, rng_);
  next_time_ = SimTime::from_seconds(start_s + offset_s);
}

Frame StreamGenerator::emit() {
  Frame f;
  f.ue_id = ue_id_;
  f.cls = cls_;
  f.direction = direction_;
  f.seq = seq_++;
  f.payload_bytes = spec_.payload_bytes;
  f.wire_bytes = encapsulate(spec_.payload_bytes);
  f.pcp = pcp_;
  f.generated_at = next_time_;

  const double gap_s = sample_distribution(spec_.interval, rng_);
  SimTime gap = SimTime::from_seconds(gap_s);
  if (gap.ns() < 1) gap = SimTime::from_ns(1);
  next_time_ = next_time_ + gap;
  return f;
}

}  // namespace inftsn
