#include "inftsn/radio/radio.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace inftsn {

namespace {

void check_mu(int mu) {
  if (mu < 0 || mu > 6) {
    throw std::invalid_argument("numerology mu must be in 0..6");
  }
}

}  // namespace

double slot_duration_s(const Numerology& n) {
  check_mu(n.mu);
  return 1e-3 / static_cast<double>(1 << n.mu);
}

std::int64_t slot_duration_ns(const Numerology& n) {
  check_mu(n.mu);
  return 1000000ll / (1ll << n.mu);
}

double bler(const BlerCurve& curve, double sinr_db) {
  return 1.0 / (1.0 + std::exp(curve.slope_per_db * (sinr_db - curve.s50_db)));
}

double spectral_efficiency(double sinr_db) {
  const double snr_lin = std::pow(10.0, sinr_db / 10.0);
  return 0.75 * std::min(std::log2(1.0 + snr_lin), 7.4);
}

HarqOutcome harq_attempt(HarqProcess& proc, double attempt_bler,
                         RngStream& rng) {
  if (proc.attempts_made >= kHarqMaxAttempts) {
    throw std::logic_error("attempt on an exhausted HARQ process");
  }
  proc.attempts_made++;
  if (!rng.bernoulli(attempt_bler)) return HarqOutcome::Delivered;
  return proc.attempts_made >= kHarqMaxAttempts ? HarqOutcome::Lost
                                                : HarqOutcome::Retransmit;
}

HarqOutcome harq_step(HarqProcess& proc, double channel_sinr_db,
                      const BlerCurve& curve, RngStream& rng) {
  const double effective =
      channel_sinr_db + kHarqCombiningGainDb * proc.attempts_made;
  return harq_attempt(proc, bler(curve, effective), rng);
}

std::vector<SlotAllocation> schedule_slot(const std::vector<SlotDemand>& demands,
                                          double bandwidth_hz,
                                          const Numerology& numerology) {
  std::vector<SlotAllocation> out;
  if (demands.empty()) return out;
  if (!(bandwidth_hz > 0.0)) {
    throw std::invalid_argument("bandwidth must be positive");
  }
  const double slot_s = slot_duration_s(numerology);
  const double share = 1.0 / static_cast<double>(demands.size());
  out.reserve(demands.size());
  for (const auto& d : demands) {
    SlotAllocation a;
    a.ue_id = d.ue_id;
    const double cap =
        spectral_efficiency(d.sinr_db) * bandwidth_hz * share * slot_s;
    a.capacity_bits = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(std::floor(cap)));
    a.granted_bits = std::min(a.capacity_bits, std::max<std::int64_t>(0, d.pending_bits));
    out.push_back(a);
  }
  return out;
}

}  // namespace inftsn
