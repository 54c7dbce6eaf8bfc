#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "inftsn/direction.hpp"
#include "inftsn/tsn/frame.hpp"

namespace inftsn {

// Nearest-rank percentile over ascending values: element at 1-based rank
// clamp(ceil(p/100 * N), 1, N). Values must be sorted and non-empty.
double nearest_rank_percentile(const std::vector<double>& sorted_values,
                               double p);

struct DelaySample {
  double time_s = 0;
  std::uint32_t ue_id = 0;
  TrafficClass cls = TrafficClass::BestEffort;
  Direction direction = Direction::Downlink;
  double delay_s = 0;
};

struct SinrSample {
  double time_s = 0;
  std::uint32_t ue_id = 0;
  Direction direction = Direction::Downlink;
  double sinr_db = 0;
};

struct HarqCounters {
  std::uint64_t transmissions = 0;
  std::uint64_t failures = 0;

  // failures / transmissions; absent until the first transmission.
  std::optional<double> error_rate() const;

  bool operator==(const HarqCounters&) const = default;
};

struct FrameCounters {
  std::uint64_t generated = 0;
  std::uint64_t delivered = 0;
  std::uint64_t dropped = 0;

  bool operator==(const FrameCounters&) const = default;
};

struct DistSummary {
  std::size_t count = 0;
  double mean = 0;
  double p50 = 0;
  double p95 = 0;
  double p99 = 0;
  double max = 0;
  double q1 = 0;
  double q3 = 0;

  bool operator==(const DistSummary&) const = default;
};

struct Summary {
  std::map<std::pair<TrafficClass, Direction>, DistSummary> delay;
  std::map<Direction, DistSummary> sinr;
  std::map<Direction, HarqCounters> harq;
  std::map<std::pair<TrafficClass, Direction>, FrameCounters> frames;

  bool operator==(const Summary&) const = default;
};

// Collects per-run samples and counters. Samples earlier than the warmup
// exclusion window are validated but not kept; counters always cover the
// whole run.
class MetricsStore {
 public:
  explicit MetricsStore(double warmup_exclusion_s = 0.0);

  void record_delay(double time_s, std::uint32_t ue_id, TrafficClass cls,
                    Direction direction, double delay_s);
  void record_sinr(double time_s, std::uint32_t ue_id, Direction direction,
                   double sinr_db);
  void record_harq_attempt(Direction direction, bool failed);
  void record_generated(TrafficClass cls, Direction direction);
  void record_delivered(TrafficClass cls, Direction direction);
  void record_dropped(TrafficClass cls, Direction direction);

  const std::vector<DelaySample>& delay_samples() const { return delays_; }
  const std::vector<SinrSample>& sinr_samples() const { return sinrs_; }
  const std::map<Direction, HarqCounters>& harq_counters() const {
    return harq_;
  }
  const std::map<std::pair<TrafficClass, Direction>, FrameCounters>&
  frame_counters() const {
    return frames_;
  }
  double warmup_exclusion_s() const { return warmup_s_; }

  Summary summarize() const;

 private:
  double warmup_s_;
  std::vector<DelaySample> delays_;
  std::vector<SinrSample> sinrs_;
  std::map<Direction, HarqCounters> harq_;
  std::map<std::pair<TrafficClass, Direction>, FrameCounters> frames_;
};

}  // namespace inftsn
