#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <vector>

#include "inftsn/engine/engine.hpp"
#include "inftsn/tsn/cbs.hpp"
#include "inftsn/tsn/frame.hpp"

namespace inftsn {

struct EgressConfig {
  double port_rate_bps = 1e9;
  PcpMap pcp{};
  // Shaper for the video class; ignored when enable_cbs is false.
  CbsSlopes video_slopes{};
  bool enable_cbs = true;
};

// One trace row per transmitted frame, written at transmission end.
struct EgressRecord {
  SimTime tx_start;
  SimTime tx_end;
  std::uint32_t ue_id = 0;
  TrafficClass cls = TrafficClass::BestEffort;
  std::uint64_t seq = 0;
  // Bit i set: a frame with PCP i was head-of-queue and eligible when this
  // frame was selected (this frame's own bit included).
  unsigned eligible_pcp_mask = 0;
  double credit_before = 0;  // shaper credit at selection
  double credit_after = 0;   // shaper credit when the wire went idle
  double queue_wait_s = 0;   // selection time minus arrival at the port
};

// Store-and-forward output port: strict priority across PCP values (highest
// first), with the video class additionally gated on nonnegative shaper
// credit. One frame occupies the wire at a time.
class EgressPort {
 public:
  EgressPort(Engine& engine, EgressConfig config,
             std::function<void(Frame&&)> deliver);

  EgressPort(const EgressPort&) = delete;
  EgressPort& operator=(const EgressPort&) = delete;

  // Frame arrives at the port and queues by its PCP.
  void submit(Frame frame);

  // Drops everything still queued plus any frame mid-transmission; invokes
  // on_drop per frame, returns the count.
  std::size_t flush(const std::function<void(const Frame&)>& on_drop);

  void set_trace(std::vector<EgressRecord>* sink) { trace_ = sink; }

  double credit_bits() const { return credit_.credit_bits; }
  bool busy() const { return busy_; }
  std::size_t queue_depth(int pcp) const;
  std::size_t total_queued() const;
  std::uint64_t transmitted_count() const { return transmitted_; }

 private:
  struct Queued {
    Frame frame;
    SimTime arrived;
  };

  void advance_credit();
  void try_transmit();
  void finish_transmission();
  void schedule_gate();
  bool video_queued() const;

  Engine& engine_;
  EgressConfig config_;
  std::function<void(Frame&&)> deliver_;
  std::vector<EgressRecord>* trace_ = nullptr;

  std::map<int, std::deque<Queued>> queues_;  // keyed by PCP
  CbsState credit_{};
  SimTime credit_updated_{};
  bool busy_ = false;
  bool current_is_video_ = false;
  Queued current_{};
  EgressRecord current_record_{};
  bool gate_pending_ = false;
  std::uint64_t gate_token_ = 0;
  std::uint64_t tx_token_ = 0;
  std::uint64_t transmitted_ = 0;
};

}  // namespace inftsn
