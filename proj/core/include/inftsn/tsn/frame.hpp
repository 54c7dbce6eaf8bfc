#pragma once

#include <cstdint>
#include <string_view>

#include "inftsn/direction.hpp"
#include "inftsn/engine/time.hpp"

namespace inftsn {

enum class TrafficClass { NetworkControl, Video, BestEffort };

const char* traffic_class_name(TrafficClass c);          // "nc", "video", "be"
TrafficClass parse_traffic_class(std::string_view name);

// Priority code points carried in the VLAN tag, one per traffic class.
struct PcpMap {
  int nc = 7;
  int video = 5;
  int be = 0;

  int pcp_for(TrafficClass c) const;

  bool operator==(const PcpMap&) const = default;
};

// Bytes added around a UDP payload on the wire: UDP(8) + IPv4(20) +
// Ethernet MAC header(14) + FCS(4) + preamble/SFD(8).
constexpr std::uint32_t kEthOverheadBytes = 54;

// Wire size of a frame carrying the given UDP payload.
std::uint32_t encapsulate(std::uint32_t payload_bytes);

struct Frame {
  std::uint32_t ue_id = 0;
  TrafficClass cls = TrafficClass::BestEffort;
  Direction direction = Direction::Downlink;
  std::uint64_t seq = 0;
  std::uint32_t payload_bytes = 0;
  std::uint32_t wire_bytes = 0;
  int pcp = 0;
  SimTime generated_at;
};

// Serialization time of the wire frame at the given line rate, in seconds.
double frame_tx_duration_s(std::uint32_t wire_bytes, double bitrate_bps);

}  // namespace inftsn
