#include "inftsn/radio/mac.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace inftsn {

std::int64_t transport_block_bits(const TransportBlock& tb) {
  return static_cast<std::int64_t>(tb.frame.wire_bytes) * 8;
}

RadioMac::RadioMac(Engine& engine, RadioConfig config, RadioHooks hooks)
    : engine_(engine),
      config_(config),
      hooks_(std::move(hooks)),
      slot_ns_(slot_duration_ns(config.numerology)) {
  if (config_.queue_depth_tbs < 1) {
    throw std::invalid_argument("queue depth must be at least 1");
  }
  if (!(config_.bandwidth_hz > 0.0)) {
    throw std::invalid_argument("bandwidth must be positive");
  }
}

bool RadioMac::enqueue(TransportBlock tb) {
  auto& q = queues_[tb.frame.ue_id];
  if (q.size() >= static_cast<std::size_t>(config_.queue_depth_tbs)) {
    hooks_.dropped(tb);
    return false;
  }
  PendingTb p;
  p.remaining_bits = transport_block_bits(tb);
  p.tb = std::move(tb);
  q.push_back(std::move(p));
  arm();
  return true;
}

void RadioMac::arm() {
  const std::int64_t now = engine_.now().ns();
  std::int64_t b = ((now + slot_ns_ - 1) / slot_ns_) * slot_ns_;
  if (b <= last_boundary_ns_) b = last_boundary_ns_ + slot_ns_;
  if (armed_ && armed_at_ns_ <= b) return;
  armed_ = true;
  armed_at_ns_ = b;
  engine_.schedule(SimTime::from_ns(b), [this, b] { on_tick(b); });
}

void RadioMac::on_tick(std::int64_t boundary_ns) {
  if (boundary_ns <= last_boundary_ns_) return;  // stale duplicate
  last_boundary_ns_ = boundary_ns;
  if (armed_ && armed_at_ns_ == boundary_ns) armed_ = false;

  std::vector<SlotDemand> demands;
  for (const auto& [ue, q] : queues_) {
    if (q.empty()) continue;
    SlotDemand d;
    d.ue_id = ue;
    d.sinr_db = hooks_.sinr_db(ue);
    d.pending_bits = 0;
    for (const auto& p : q) d.pending_bits += p.remaining_bits;
    demands.push_back(d);
  }
  const auto allocations =
      schedule_slot(demands, config_.bandwidth_hz, config_.numerology);

  for (std::size_t i = 0; i < allocations.size(); ++i) {
    const auto& alloc = allocations[i];
    const double sinr = demands[i].sinr_db;
    auto& q = queues_[alloc.ue_id];
    std::int64_t cap = alloc.capacity_bits;
    while (cap > 0 && !q.empty()) {
      PendingTb& head = q.front();
      const std::int64_t take = std::min(cap, head.remaining_bits);
      head.remaining_bits -= take;
      cap -= take;
      if (head.remaining_bits > 0) break;  // slot exhausted mid-block

      const HarqOutcome out = harq_step(head.harq, sinr, config_.bler_curve,
                                        hooks_.harq_rng(alloc.ue_id));
      hooks_.attempt(alloc.ue_id, sinr, out != HarqOutcome::Delivered);
      if (out == HarqOutcome::Delivered) {
        const std::uint64_t token = next_token_++;
        in_flight_.emplace(token, std::move(head.tb));
        q.pop_front();
        engine_.schedule(SimTime::from_ns(boundary_ns + slot_ns_),
                         [this, token] { deliver(token); });
      } else if (out == HarqOutcome::Retransmit) {
        head.remaining_bits = transport_block_bits(head.tb);
        const std::uint64_t token = next_token_++;
        parked_.emplace(token, std::move(head));
        q.pop_front();
        engine_.schedule(
            SimTime::from_ns(boundary_ns + kHarqRttSlots * slot_ns_),
            [this, token] { unpark(token); });
      } else {
        hooks_.dropped(head.tb);
        q.pop_front();
      }
    }
  }

  for (const auto& [ue, q] : queues_) {
    if (!q.empty()) {
      arm();
      break;
    }
  }
}

void RadioMac::deliver(std::uint64_t token) {
  auto it = in_flight_.find(token);
  if (it == in_flight_.end()) return;  // flushed
  TransportBlock tb = std::move(it->second);
  in_flight_.erase(it);
  hooks_.delivered(std::move(tb));
}

void RadioMac::unpark(std::uint64_t token) {
  auto it = parked_.find(token);
  if (it == parked_.end()) return;  // flushed
  PendingTb p = std::move(it->second);
  parked_.erase(it);
  queues_[p.tb.frame.ue_id].push_front(std::move(p));
  arm();
}

std::size_t RadioMac::flush() {
  std::size_t n = 0;
  for (auto& [ue, q] : queues_) {
    for (const auto& p : q) {
      hooks_.dropped(p.tb);
      ++n;
    }
    q.clear();
  }
  for (const auto& [token, p] : parked_) {
    hooks_.dropped(p.tb);
    ++n;
  }
  parked_.clear();
  for (const auto& [token, tb] : in_flight_) {
    hooks_.dropped(tb);
    ++n;
  }
  in_flight_.clear();
  return n;
}

std::size_t RadioMac::queue_size(std::uint32_t ue_id) const {
  auto it = queues_.find(ue_id);
  return it == queues_.end() ? 0 : it->second.size();
}

std::size_t RadioMac::parked_count() const { return parked_.size(); }

std::size_t RadioMac::in_flight_count() const { return in_flight_.size(); }

std::size_t RadioMac::backlog() const {
  std::size_t n = parked_.size() + in_flight_.size();
  for (const auto& [ue, q] : queues_) n += q.size();
  return n;
}

}  // namespace inftsn
