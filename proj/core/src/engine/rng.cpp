#include "inftsn/engine/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace inftsn {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::string_view name) {
  // FNV-1a over the seed bytes then the name bytes, finalized with splitmix64
  // to spread low-entropy inputs across the full word.
  std::uint64_t h = 14695981039346656037ull;
  for (int i = 0; i < 8; ++i) {
    h = (h ^ ((seed >> (8 * i)) & 0xffu)) * 1099511628211ull;
  }
  for (unsigned char c : name) {
    h = (h ^ c) * 1099511628211ull;
  }
  return splitmix64(h);
}

RngStream::RngStream(std::uint64_t master_seed, std::string_view name)
    : gen_(derive_seed(master_seed, name)) {}

double RngStream::uniform01() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform(double lo, double hi) {
  if (!(lo <= hi)) throw std::invalid_argument("uniform: lo > hi");
  return lo + (hi - lo) * uniform01();
}

double RngStream::normal(double mean, double stddev) {
  if (stddev < 0) throw std::invalid_argument("normal: negative stddev");
  if (spare_normal_) {
    double z = *spare_normal_;
    spare_normal_.reset();
    return mean + stddev * z;
  }
  double u1 = 1.0 - uniform01();  // (0, 1], keeps log() finite
  double u2 = uniform01();
  double r = std::sqrt(-2.0 * std::log(u1));
  spare_normal_ = r * std::sin(2.0 * kPi * u2);
  return mean + stddev * r * std::cos(2.0 * kPi * u2);
}

double RngStream::exponential(double mean) {
  if (!(mean > 0)) throw std::invalid_argument("exponential: mean must be > 0");
  double u = 1.0 - uniform01();  // (0, 1]
  return -mean * std::log(u);
}

bool RngStream::bernoulli(double p) {
  if (p < 0 || p > 1) throw std::invalid_argument("bernoulli: p outside [0, 1]");
  return uniform01() < p;
}

std::uint64_t RngStream::bits() { return gen_(); }

}  // namespace inftsn
