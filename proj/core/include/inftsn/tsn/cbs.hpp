#pragma once

#include <cstdint>

namespace inftsn {

// Reserved rate for one periodic stream: wire frame + inter-frame gap (12)
// + 1 safety byte, sent once per interval.
double stream_data_rate_bps(std::uint32_t wire_bytes, double interval_s);

// Credit-based shaper slopes in bit/s. idle > 0 accrues credit while the
// shaped queue waits; send = idle - port_rate (negative) drains it while a
// shaped frame is on the wire.
struct CbsSlopes {
  double idle_bps = 0;
  double send_bps = 0;
};

// idle = n_streams * per_stream; rejects a reservation that is zero or that
// meets/exceeds the port rate.
CbsSlopes compute_slopes(int n_streams, double per_stream_bps,
                         double port_rate_bps);

struct CbsState {
  double credit_bits = 0;
};

// Advances the credit over a window of length dt_s during which the shaper
// state was constant: send slope while a shaped frame transmits; idle slope
// while shaped frames wait; with an empty queue, negative credit recovers
// toward zero (capped) and positive credit resets to zero. Returns the new
// credit.
double cbs_advance(CbsState& state, const CbsSlopes& slopes, double dt_s,
                   bool transmitting, bool queue_nonempty);

}  // namespace inftsn
