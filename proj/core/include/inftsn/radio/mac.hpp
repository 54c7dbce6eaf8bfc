#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>

#include "inftsn/engine/engine.hpp"
#include "inftsn/radio/radio.hpp"
#include "inftsn/tsn/frame.hpp"

namespace inftsn {

struct RadioConfig {
  Numerology numerology{4};
  double bandwidth_hz = 40e6;
  BlerCurve bler_curve{};
  // Per-user admission limit; arrivals beyond this are dropped.
  int queue_depth_tbs = 128;
};

// A frame in flight across the radio link.
struct TransportBlock {
  Frame frame;
};

std::int64_t transport_block_bits(const TransportBlock& tb);

// Wiring between the MAC and the rest of the system. All four callbacks
// must be set before any traffic is enqueued.
struct RadioHooks {
  // Current channel SINR for the user, sampled once per slot while active.
  std::function<double(std::uint32_t ue_id)> sinr_db;
  // RNG used for the user's decode attempts.
  std::function<RngStream&(std::uint32_t ue_id)> harq_rng;
  // Block handed to the receiver (fires one slot after the final attempt).
  std::function<void(TransportBlock&& tb)> delivered;
  // Block lost: queue admission, attempt budget exhausted, or end-of-run flush.
  std::function<void(const TransportBlock& tb)> dropped;
  // One decode attempt resolved; sinr is the raw channel value at the
  // attempt slot (combining gain is internal to the decode).
  std::function<void(std::uint32_t ue_id, double sinr_db, bool failed)> attempt;
};

// Slot-clocked MAC for one link direction. Backlogged users share the
// bandwidth equally each slot; each user drains head-of-line first with
// leftover capacity flowing to its next block in the same slot. A block
// whose last bit is sent in a slot gets a decode attempt at that slot
// boundary; delivery lands one slot later, a failed attempt re-enters the
// head of the queue after the retransmission round trip.
class RadioMac {
 public:
  RadioMac(Engine& engine, RadioConfig config, RadioHooks hooks);

  RadioMac(const RadioMac&) = delete;
  RadioMac& operator=(const RadioMac&) = delete;

  // Admits a block (false and a dropped callback if the user queue is full).
  bool enqueue(TransportBlock tb);

  // Drops everything still queued, parked for retransmission, or in flight;
  // returns how many blocks that was. Used at teardown so every admitted
  // block is accounted as delivered or dropped.
  std::size_t flush();

  std::size_t queue_size(std::uint32_t ue_id) const;
  std::size_t parked_count() const;
  std::size_t in_flight_count() const;
  std::size_t backlog() const;  // queued + parked + in flight

  const RadioConfig& config() const { return config_; }

 private:
  struct PendingTb {
    TransportBlock tb;
    HarqProcess harq;
    std::int64_t remaining_bits = 0;
  };

  void arm();
  void on_tick(std::int64_t boundary_ns);
  void deliver(std::uint64_t token);
  void unpark(std::uint64_t token);

  Engine& engine_;
  RadioConfig config_;
  RadioHooks hooks_;
  std::int64_t slot_ns_;
  std::int64_t last_boundary_ns_ = -1;
  bool armed_ = false;
  std::int64_t armed_at_ns_ = -1;
  std::uint64_t next_token_ = 0;
  std::map<std::uint32_t, std::deque<PendingTb>> queues_;
  std::map<std::uint64_t, PendingTb> parked_;
  std::map<std::uint64_t, TransportBlock> in_flight_;
};

}  // namespace inftsn
