#include "inftsn/channel/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace inftsn {

const char* profile_name(InFProfile p) {
  switch (p) {
    case InFProfile::SL: return "InF-SL";
    case InFProfile::DL: return "InF-DL";
    case InFProfile::SH: return "InF-SH";
    case InFProfile::DH: return "InF-DH";
    case InFProfile::HH: return "InF-HH";
  }
  throw std::invalid_argument("unknown profile enum value");
}

InFProfile parse_profile(std::string_view name) {
  std::string_view tail = name;
  if (tail.size() > 4 && (tail.substr(0, 4) == "InF-" || tail.substr(0, 4) == "inf-")) {
    tail = tail.substr(4);
  }
  if (tail == "SL" || tail == "sl") return InFProfile::SL;
  if (tail == "DL" || tail == "dl") return InFProfile::DL;
  if (tail == "SH" || tail == "sh") return InFProfile::SH;
  if (tail == "DH" || tail == "dh") return InFProfile::DH;
  if (tail == "HH" || tail == "hh") return InFProfile::HH;
  throw std::invalid_argument("unknown profile name: " + std::string(name));
}

double distance_2d(const Position3D& a, const Position3D& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

double distance_3d(const Position3D& a, const Position3D& b) {
  return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

namespace {

void check_pathloss_domain(double d3d_m, double fc_ghz) {
  if (!(d3d_m >= 1.0 && d3d_m <= 600.0)) {
    throw std::domain_error("pathloss distance out of range [1, 600] m: " +
                            std::to_string(d3d_m));
  }
  if (!(fc_ghz > 0.0)) {
    throw std::domain_error("carrier frequency must be positive");
  }
}

}  // namespace

double pathloss_los_db(double d3d_m, double fc_ghz) {
  check_pathloss_domain(d3d_m, fc_ghz);
  return 31.84 + 21.5 * std::log10(d3d_m) + 19.0 * std::log10(fc_ghz);
}

double pathloss_nlos_db(InFProfile p, double d3d_m, double fc_ghz) {
  check_pathloss_domain(d3d_m, fc_ghz);
  const double los = pathloss_los_db(d3d_m, fc_ghz);
  const double logd = std::log10(d3d_m);
  const double logf = std::log10(fc_ghz);
  switch (p) {
    case InFProfile::SL:
      return std::max(33.0 + 25.5 * logd + 20.0 * logf, los);
    case InFProfile::DL: {
      const double sl = std::max(33.0 + 25.5 * logd + 20.0 * logf, los);
      return std::max({18.6 + 35.7 * logd + 20.0 * logf, los, sl});
    }
    case InFProfile::SH:
      return std::max(32.4 + 23.0 * logd + 20.0 * logf, los);
    case InFProfile::DH:
      return std::max(33.63 + 21.9 * logd + 20.0 * logf, los);
    case InFProfile::HH:
      throw std::invalid_argument("profile InF-HH has no NLOS state");
  }
  throw std::invalid_argument("unknown profile enum value");
}

double shadow_sigma_db(InFProfile p, bool los) {
  if (los) return 4.0;
  switch (p) {
    case InFProfile::SL: return 5.7;
    case InFProfile::DL: return 7.2;
    case InFProfile::SH: return 5.9;
    case InFProfile::DH: return 4.0;
    case InFProfile::HH:
      throw std::invalid_argument("profile InF-HH has no NLOS state");
  }
  throw std::invalid_argument("unknown profile enum value");
}

double los_probability(InFProfile p, double d2d_m, const ChannelConfig& cfg) {
  if (d2d_m < 0.0) throw std::domain_error("negative 2D distance");
  if (p == InFProfile::HH) return 1.0;
  if (!(cfg.clutter_density_r > 0.0 && cfg.clutter_density_r < 1.0)) {
    throw std::domain_error("clutter density must lie in (0, 1)");
  }
  if (!(cfg.d_clutter_m > 0.0)) {
    throw std::domain_error("clutter size must be positive");
  }
  double k = -cfg.d_clutter_m / std::log(1.0 - cfg.clutter_density_r);
  if (p == InFProfile::SH || p == InFProfile::DH) {
    if (!(cfg.h_c_m > cfg.h_ut_m)) {
      throw std::domain_error(
          "elevated-antenna LOS model needs clutter height above the UT");
    }
    if (!(cfg.h_bs_m > cfg.h_ut_m)) {
      throw std::domain_error(
          "elevated-antenna LOS model needs the BS above the UT");
    }
    k *= (cfg.h_bs_m - cfg.h_ut_m) / (cfg.h_c_m - cfg.h_ut_m);
  }
  return std::exp(-d2d_m / k);
}

double effective_distance_m(double d3d_m, const ChannelConfig& cfg) {
  if (d3d_m > 600.0) {
    throw std::domain_error("link distance beyond 600 m model range: " +
                            std::to_string(d3d_m));
  }
  if (d3d_m < 1.0) {
    if (cfg.clamp_distances && d3d_m >= 0.0) return 1.0;
    throw std::domain_error("link distance below 1 m model range: " +
                            std::to_string(d3d_m));
  }
  return d3d_m;
}

LargeScaleState make_large_scale(InFProfile p, bool los, double d3d_m,
                                 const ChannelConfig& cfg, RngStream& rng) {
  if (p == InFProfile::HH && !los) {
    throw std::invalid_argument("profile InF-HH has no NLOS state");
  }
  LargeScaleState st;
  st.los = los;
  const double sigma = cfg.shadow_sigma_override_db
                           ? *cfg.shadow_sigma_override_db
                           : shadow_sigma_db(p, los);
  if (sigma < 0.0) throw std::domain_error("shadow sigma must be >= 0");
  st.shadow_db = rng.normal(0.0, sigma);
  const double d = effective_distance_m(d3d_m, cfg);
  st.pathloss_db = los ? pathloss_los_db(d, cfg.fc_ghz)
                       : pathloss_nlos_db(p, d, cfg.fc_ghz);
  return st;
}

LargeScaleState draw_large_scale(InFProfile p, const Position3D& tx,
                                 const Position3D& rx,
                                 const ChannelConfig& cfg, RngStream& rng) {
  const double d2d = distance_2d(tx, rx);
  const double p_los = los_probability(p, d2d, cfg);
  const bool los = (p == InFProfile::HH) ? true : rng.bernoulli(p_los);
  return make_large_scale(p, los, distance_3d(tx, rx), cfg, rng);
}

double thermal_noise_dbm(double bandwidth_hz, double noise_figure_db) {
  if (!(bandwidth_hz > 0.0)) {
    throw std::domain_error("bandwidth must be positive");
  }
  return -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

double sinr_db(double tx_power_dbm, const LargeScaleState& state,
               double noise_dbm) {
  return tx_power_dbm - state.pathloss_db - state.shadow_db - noise_dbm;
}

}  // namespace inftsn
