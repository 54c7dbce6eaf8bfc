#include "inftsn/tsn/frame.hpp"

#include <stdexcept>
#include <string>

namespace inftsn {

const char* traffic_class_name(TrafficClass c) {
  switch (c) {
    case TrafficClass::NetworkControl: return "nc";
    case TrafficClass::Video: return "video";
    case TrafficClass::BestEffort: return "be";
  }
  throw std::invalid_argument("unknown traffic class enum value");
}

TrafficClass parse_traffic_class(std::string_view name) {
  if (name == "nc") return TrafficClass::NetworkControl;
  if (name == "video") return TrafficClass::Video;
  if (name == "be") return TrafficClass::BestEffort;
  throw std::invalid_argument("unknown traffic class: " + std::string(name));
}

int PcpMap::pcp_for(TrafficClass c) const {
  switch (c) {
    case TrafficClass::NetworkControl: return nc;
    case TrafficClass::Video: return video;
    case TrafficClass::BestEffort: return be;
  }
  throw std::invalid_argument("unknown traffic class enum value");
}

std::uint32_t encapsulate(std::uint32_t payload_bytes) {
  return payload_bytes + kEthOverheadBytes;
}

double frame_tx_duration_s(std::uint32_t wire_bytes, double bitrate_bps) {
  if (!(bitrate_bps > 0.0)) {
    throw std::invalid_argument("bitrate must be positive");
  }
  return static_cast<double>(wire_bytes) * 8.0 / bitrate_bps;
}

}  // namespace inftsn
