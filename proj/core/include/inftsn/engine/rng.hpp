#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace inftsn {

// Stable 64-bit hash of (seed, name). Used to derive independent substream
// seeds and per-cell sweep seeds; must never change once results exist.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view name);

// One named, reproducible random substream. The generator state depends only
// on (master seed, stream name), never on creation order or on other streams.
// Variate transforms are implemented here instead of <random> distributions
// because std::*_distribution output is implementation-defined.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::string_view name);

  double uniform01();  // [0, 1)
  double uniform(double lo, double hi);
  double normal(double mean, double stddev);
  double exponential(double mean);  // mean > 0, returns [0, inf)
  bool bernoulli(double p);
  std::uint64_t bits();

 private:
  std::mt19937_64 gen_;
  std::optional<double> spare_normal_;
};

}  // namespace inftsn
