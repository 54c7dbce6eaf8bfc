#include "inftsn/tsn/cbs.hpp"

#include <algorithm>
#include <stdexcept>

namespace inftsn {

double stream_data_rate_bps(std::uint32_t wire_bytes, double interval_s) {
  if (!(interval_s > 0.0)) {
    throw std::invalid_argument("stream interval must be positive");
  }
  return static_cast<double>(wire_bytes + 12 + 1) * 8.0 / interval_s;
}

CbsSlopes compute_slopes(int n_streams, double per_stream_bps,
                         double port_rate_bps) {
  if (n_streams < 0) throw std::invalid_argument("negative stream count");
  if (!(per_stream_bps >= 0.0)) {
    throw std::invalid_argument("per-stream rate must be >= 0");
  }
  if (!(port_rate_bps > 0.0)) {
    throw std::invalid_argument("port rate must be positive");
  }
  CbsSlopes s;
  s.idle_bps = static_cast<double>(n_streams) * per_stream_bps;
  if (!(s.idle_bps > 0.0)) {
    throw std::invalid_argument("reservation must be positive");
  }
  if (s.idle_bps >= port_rate_bps) {
    throw std::invalid_argument("reservation meets or exceeds the port rate");
  }
  s.send_bps = s.idle_bps - port_rate_bps;
  return s;
}

double cbs_advance(CbsState& state, const CbsSlopes& slopes, double dt_s,
                   bool transmitting, bool queue_nonempty) {
  if (dt_s < 0.0) throw std::invalid_argument("negative time step");
  if (transmitting) {
    state.credit_bits += slopes.send_bps * dt_s;
  } else if (queue_nonempty) {
    state.credit_bits += slopes.idle_bps * dt_s;
  } else if (state.credit_bits < 0.0) {
    state.credit_bits =
        std::min(0.0, state.credit_bits + slopes.idle_bps * dt_s);
  } else if (state.credit_bits > 0.0) {
    state.credit_bits = 0.0;  // credit does not carry across an empty queue
  }
  return state.credit_bits;
}

}  // namespace inftsn
