#pragma once

namespace inftsn {

enum class Direction { Downlink, Uplink };

inline const char* direction_name(Direction d) {
  return d == Direction::Downlink ? "dl" : "ul";
}

}  // namespace inftsn
