#pragma once

#include <cstdint>
#include <vector>

#include "inftsn/metrics/metrics.hpp"
#include "inftsn/sim/config.hpp"
#include "inftsn/tsn/egress.hpp"

namespace inftsn {

struct ScenarioStats {
  std::uint64_t events_fired = 0;
  std::uint64_t legs_completed = 0;
  std::uint64_t los_redraws = 0;   // large-scale draws that landed LOS
  std::uint64_t nlos_redraws = 0;
  std::uint64_t radio_flushed = 0;  // blocks dropped at teardown
  std::uint64_t port_flushed = 0;   // frames dropped at teardown
};

struct RunOutput {
  Summary summary;
  ScenarioStats stats;
  MetricsStore metrics;
  std::vector<EgressRecord> dl_port_trace;  // filled when requested
  std::vector<EgressRecord> ul_port_trace;
};

// Runs one configured cell end to end: traffic into the wired egress toward
// the radio downlink, uplink radio into the wired egress toward the
// listener, with user mobility redrawing the large-scale channel per leg.
// The run drains in-flight work after the traffic horizon and then counts
// anything still stuck as dropped, so per class and direction
// generated == delivered + dropped always holds on return.
RunOutput run_scenario(const ScenarioConfig& cfg,
                       bool keep_port_traces = false);

}  // namespace inftsn
