#pragma once

#include <optional>
#include <string_view>

#include "inftsn/engine/rng.hpp"

namespace inftsn {

// Indoor-factory large-scale channel profile: clutter density (sparse/dense)
// crossed with antenna elevation (low = clutter-embedded, high = elevated).
// HH has both ends elevated and is line-of-sight only.
enum class InFProfile { SL, DL, SH, DH, HH };

const char* profile_name(InFProfile p);             // "InF-SL", ...
InFProfile parse_profile(std::string_view name);    // accepts "InF-SL" or "SL"

struct Position3D {
  double x = 0;
  double y = 0;
  double z = 0;
};

double distance_2d(const Position3D& a, const Position3D& b);
double distance_3d(const Position3D& a, const Position3D& b);

struct ChannelConfig {
  double fc_ghz = 5.9;
  double d_clutter_m = 10.0;       // typical clutter size
  double clutter_density_r = 0.2;  // fraction of floor area under clutter
  double h_c_m = 2.0;              // clutter height
  double h_bs_m = 1.5;
  double h_ut_m = 1.5;
  // Distances below 1 m are clamped to 1 m when true; a hard error otherwise.
  bool clamp_distances = false;
  // Replaces the profile's shadow-fading sigma when set (0 disables fading).
  std::optional<double> shadow_sigma_override_db;
};

struct LargeScaleState {
  bool los = true;
  double shadow_db = 0;
  double pathloss_db = 0;
};

// Line-of-sight path loss in dB; valid for 1 <= d3d_m <= 600, fc in GHz.
double pathloss_los_db(double d3d_m, double fc_ghz);

// Non-line-of-sight path loss in dB for the given profile; composed as a max
// with the LOS floor (and with the sparse-low term for the dense-low
// profile). HH has no NLOS state and throws std::invalid_argument.
double pathloss_nlos_db(InFProfile p, double d3d_m, double fc_ghz);

// Shadow-fading standard deviation in dB for (profile, LOS state).
double shadow_sigma_db(InFProfile p, bool los);

// LOS probability at 2D distance d2d_m: exactly 1 for HH; exp(-d2d/k) with
// k = -d_clutter/ln(1-r) for low tx ends, scaled by the elevation factor
// (h_bs-h_ut)/(h_c-h_ut) for SH/DH.
double los_probability(InFProfile p, double d2d_m, const ChannelConfig& cfg);

// Applies the distance validity policy: clamps [0,1) m up to 1 m when
// cfg.clamp_distances, throws std::domain_error otherwise; > 600 m throws.
double effective_distance_m(double d3d_m, const ChannelConfig& cfg);

// Builds the large-scale state for a known LOS state: draws the shadow
// normal (profile sigma or override) and evaluates path loss at d3d_m.
LargeScaleState make_large_scale(InFProfile p, bool los, double d3d_m,
                                 const ChannelConfig& cfg, RngStream& rng);

// Draws LOS (Bernoulli at the 2D distance) then shadow fading, and snapshots
// the path loss at the given geometry. Draw order is part of the contract.
LargeScaleState draw_large_scale(InFProfile p, const Position3D& tx,
                                 const Position3D& rx,
                                 const ChannelConfig& cfg, RngStream& rng);

// Thermal noise floor: -174 dBm/Hz + 10*log10(bandwidth) + noise figure.
double thermal_noise_dbm(double bandwidth_hz, double noise_figure_db);

double sinr_db(double tx_power_dbm, const LargeScaleState& state,
               double noise_dbm);

}  // namespace inftsn
