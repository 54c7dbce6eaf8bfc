#include "inftsn/tsn/egress.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace inftsn {

EgressPort::EgressPort(Engine& engine, EgressConfig config,
                       std::function<void(Frame&&)> deliver)
    : engine_(engine), config_(config), deliver_(std::move(deliver)) {
  if (!(config_.port_rate_bps > 0.0)) {
    throw std::invalid_argument("port rate must be positive");
  }
  credit_updated_ = engine_.now();
}

bool EgressPort::video_queued() const {
  auto it = queues_.find(config_.pcp.video);
  return it != queues_.end() && !it->second.empty();
}

void EgressPort::advance_credit() {
  const SimTime now = engine_.now();
  const double dt = (now - credit_updated_).seconds();
  cbs_advance(credit_, config_.video_slopes, dt,
              busy_ && current_is_video_, video_queued());
  credit_updated_ = now;
}

void EgressPort::submit(Frame frame) {
  advance_credit();
  Queued q;
  q.arrived = engine_.now();
  q.frame = std::move(frame);
  queues_[q.frame.pcp].push_back(std::move(q));
  try_transmit();
}

void EgressPort::try_transmit() {
  if (busy_) return;
  advance_credit();

  unsigned mask = 0;
  int chosen_pcp = -1;
  for (auto it = queues_.rbegin(); it != queues_.rend(); ++it) {
    if (it->second.empty()) continue;
    if (config_.enable_cbs && it->first == config_.pcp.video &&
        credit_.credit_bits < 0.0) {
      continue;  // shaped class waits for credit
    }
    mask |= 1u << static_cast<unsigned>(it->first);
    if (chosen_pcp < 0) chosen_pcp = it->first;
  }

  if (chosen_pcp < 0) {
    if (config_.enable_cbs && video_queued() && credit_.credit_bits < 0.0) {
      schedule_gate();
    }
    return;
  }

  auto& q = queues_[chosen_pcp];
  current_ = std::move(q.front());
  q.pop_front();
  busy_ = true;
  current_is_video_ = current_.frame.cls == TrafficClass::Video;

  const SimTime now = engine_.now();
  current_record_ = {};
  current_record_.tx_start = now;
  current_record_.ue_id = current_.frame.ue_id;
  current_record_.cls = current_.frame.cls;
  current_record_.seq = current_.frame.seq;
  current_record_.eligible_pcp_mask = mask;
  current_record_.credit_before = credit_.credit_bits;
  current_record_.queue_wait_s = (now - current_.arrived).seconds();

  const double dur_s =
      frame_tx_duration_s(current_.frame.wire_bytes, config_.port_rate_bps);
  const std::uint64_t token = ++tx_token_;
  engine_.schedule(now + SimTime::from_seconds(dur_s), [this, token] {
    if (busy_ && token == tx_token_) finish_transmission();
  });
}

void EgressPort::finish_transmission() {
  advance_credit();  // the elapsed window carried this frame
  busy_ = false;
  current_is_video_ = false;
  current_record_.tx_end = engine_.now();
  current_record_.credit_after = credit_.credit_bits;
  if (trace_) trace_->push_back(current_record_);
  ++transmitted_;
  Frame f = std::move(current_.frame);
  deliver_(std::move(f));
  try_transmit();
}

void EgressPort::schedule_gate() {
  if (gate_pending_) return;
  if (!(config_.video_slopes.idle_bps > 0.0)) {
    throw std::logic_error("credit gate needs a positive idle slope");
  }
  const double dt_s = -credit_.credit_bits / config_.video_slopes.idle_bps;
  std::int64_t dt_ns = static_cast<std::int64_t>(std::ceil(dt_s * 1e9));
  if (dt_ns < 1) dt_ns = 1;
  gate_pending_ = true;
  const std::uint64_t token = ++gate_token_;
  engine_.schedule(engine_.now() + SimTime::from_ns(dt_ns), [this, token] {
    if (!gate_pending_ || token != gate_token_) return;
    gate_pending_ = false;
    try_transmit();
  });
}

std::size_t EgressPort::flush(const std::function<void(const Frame&)>& on_drop) {
  std::size_t n = 0;
  if (busy_) {
    on_drop(current_.frame);
    busy_ = false;
    current_is_video_ = false;
    ++n;
  }
  for (auto& [pcp, q] : queues_) {
    for (const auto& item : q) {
      on_drop(item.frame);
      ++n;
    }
    q.clear();
  }
  gate_pending_ = false;
  return n;
}

std::size_t EgressPort::queue_depth(int pcp) const {
  auto it = queues_.find(pcp);
  return it == queues_.end() ? 0 : it->second.size();
}

std::size_t EgressPort::total_queued() const {
  std::size_t n = 0;
  for (const auto& [pcp, q] : queues_) n += q.size();
  return n;
}

}  // namespace inftsn
