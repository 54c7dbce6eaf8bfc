#include "inftsn/metrics/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace inftsn {

double nearest_rank_percentile(const std::vector<double>& sorted_values,
                               double p) {
  if (sorted_values.empty()) {
    throw std::invalid_argument("percentile of an empty sample set");
  }
  if (!(p >= 0.0 && p <= 100.0)) {
    throw std::invalid_argument("percentile must lie in [0, 100]");
  }
  const auto n = sorted_values.size();
  auto rank = static_cast<std::size_t>(
      std::ceil(p / 100.0 * static_cast<double>(n)));
  rank = std::clamp<std::size_t>(rank, 1, n);
  return sorted_values[rank - 1];
}

std::optional<double> HarqCounters::error_rate() const {
  if (transmissions == 0) return std::nullopt;
  return static_cast<double>(failures) / static_cast<double>(transmissions);
}

MetricsStore::MetricsStore(double warmup_exclusion_s)
    : warmup_s_(warmup_exclusion_s) {
  if (warmup_s_ < 0.0) {
    throw std::invalid_argument("warmup exclusion must be >= 0");
  }
}

void MetricsStore::record_delay(double time_s, std::uint32_t ue_id,
                                TrafficClass cls, Direction direction,
                                double delay_s) {
  if (delay_s < 0.0) {
    throw std::logic_error("negative end-to-end delay recorded");
  }
  if (time_s < warmup_s_) return;
  delays_.push_back({time_s, ue_id, cls, direction, delay_s});
}

void MetricsStore::record_sinr(double time_s, std::uint32_t ue_id,
                               Direction direction, double sinr_db) {
  if (time_s < warmup_s_) return;
  sinrs_.push_back({time_s, ue_id, direction, sinr_db});
}

void MetricsStore::record_harq_attempt(Direction direction, bool failed) {
  auto& c = harq_[direction];
  c.transmissions++;
  if (failed) c.failures++;
}

void MetricsStore::record_generated(TrafficClass cls, Direction direction) {
  frames_[{cls, direction}].generated++;
}

void MetricsStore::record_delivered(TrafficClass cls, Direction direction) {
  frames_[{cls, direction}].delivered++;
}

void MetricsStore::record_dropped(TrafficClass cls, Direction direction) {
  frames_[{cls, direction}].dropped++;
}

namespace {

DistSummary summarize_values(std::vector<double>& values) {
  std::sort(values.begin(), values.end());
  DistSummary s;
  s.count = values.size();
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(values.size());
  s.p50 = nearest_rank_percentile(values, 50.0);
  s.p95 = nearest_rank_percentile(values, 95.0);
  s.p99 = nearest_rank_percentile(values, 99.0);
  s.max = values.back();
  s.q1 = nearest_rank_percentile(values, 25.0);
  s.q3 = nearest_rank_percentile(values, 75.0);
  return s;
}

}  // namespace

Summary MetricsStore::summarize() const {
  Summary out;

  std::map<std::pair<TrafficClass, Direction>, std::vector<double>> delay_pool;
  for (const auto& d : delays_) {
    delay_pool[{d.cls, d.direction}].push_back(d.delay_s);
  }
  for (auto& [key, values] : delay_pool) {
    out.delay.emplace(key, summarize_values(values));
  }

  std::map<Direction, std::vector<double>> sinr_pool;
  for (const auto& s : sinrs_) sinr_pool[s.direction].push_back(s.sinr_db);
  for (auto& [key, values] : sinr_pool) {
    out.sinr.emplace(key, summarize_values(values));
  }

  out.harq = harq_;
  out.frames = frames_;
  return out;
}

}  // namespace inftsn
