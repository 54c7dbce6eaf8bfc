#pragma once

#include <cstdint>
#include <vector>

#include "inftsn/engine/rng.hpp"

namespace inftsn {

// Slot grid: slot length = 1 ms / 2^mu. mu is limited to 0..6 so a slot is
// always an integer number of nanoseconds.
struct Numerology {
  int mu = 4;
};

double slot_duration_s(const Numerology& n);
std::int64_t slot_duration_ns(const Numerology& n);

// Logistic block-error curve: bler(sinr) = 1 / (1 + exp(slope*(sinr - s50))).
// s50 is the 50% error point; the documented operating anchor
// (target_bler at the anchor SINR) is derived from these two parameters.
struct BlerCurve {
  double s50_db = 3.0;
  double slope_per_db = 1.0;
};

double bler(const BlerCurve& curve, double sinr_db);

// Truncated-Shannon spectral efficiency in bit/s/Hz: 0.75 * log2(1 + snr),
// capped at 7.4 b/s/Hz.
double spectral_efficiency(double sinr_db);

// Chase-style combining: each prior failed attempt adds 3 dB to the SINR
// seen by the decoder. Four attempts total, then the block is lost.
constexpr int kHarqMaxAttempts = 4;
constexpr double kHarqCombiningGainDb = 3.0;
constexpr int kHarqRttSlots = 8;

enum class HarqOutcome { Delivered, Retransmit, Lost };

struct HarqProcess {
  int attempts_made = 0;
};

// One decode attempt at the given error probability. Counts the attempt,
// returns Delivered / Retransmit / Lost (Lost once the attempt budget is
// exhausted).
HarqOutcome harq_attempt(HarqProcess& proc, double attempt_bler,
                         RngStream& rng);

// One decode attempt at the given channel SINR: applies the combining gain
// for prior failed attempts, evaluates the error curve, then delegates to
// harq_attempt.
HarqOutcome harq_step(HarqProcess& proc, double channel_sinr_db,
                      const BlerCurve& curve, RngStream& rng);

// Per-slot allocation: every backlogged user gets an equal share of the
// bandwidth; each user's slot capacity is floor(se * bw * share * slot),
// floored at 1 bit so a backlogged user always drains.
struct SlotDemand {
  std::uint32_t ue_id = 0;
  double sinr_db = 0;
  std::int64_t pending_bits = 0;
};

struct SlotAllocation {
  std::uint32_t ue_id = 0;
  std::int64_t capacity_bits = 0;  // what the slot can carry for this user
  std::int64_t granted_bits = 0;   // min(capacity, pending)
};

std::vector<SlotAllocation> schedule_slot(const std::vector<SlotDemand>& demands,
                                          double bandwidth_hz,
                                          const Numerology& numerology);

}  // namespace inftsn
