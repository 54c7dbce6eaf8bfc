#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "inftsn/channel/channel.hpp"
#include "inftsn/radio/mac.hpp"
#include "inftsn/traffic/traffic.hpp"

namespace inftsn {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Deployment disc, either one of the named radii (d1/d2/d3) or a custom
// radius in meters.
struct RegionSpec {
  std::string name = "d2";  // empty for a custom radius
  double radius_m = 170.0;

  std::string label() const;  // name, or the radius rendered as a number
  bool operator==(const RegionSpec&) const = default;
};

RegionSpec parse_region(const std::string& name);
RegionSpec region_from_radius(double radius_m);

struct ChannelSection {
  double fc_ghz = 5.9;
  double d_clutter_m = 10.0;
  double clutter_density_r = 0.2;
  double h_c_m = 2.0;
  double h_bs_m = 1.5;
  double h_ut_m = 1.5;
  bool clamp_distances = true;
  std::optional<double> shadow_sigma_override_db;
  double interference_margin_db = 0.0;

  bool operator==(const ChannelSection&) const = default;
};

struct RadioSection {
  int mu = 4;
  double bandwidth_hz = 40e6;
  double gnb_tx_power_dbm = 23.0;
  double ue_tx_power_dbm = 23.0;
  double gnb_noise_figure_db = 7.0;
  double ue_noise_figure_db = 5.0;
  double bler_s50_db = 3.0;
  double bler_slope_per_db = 1.0;
  // Documents the intended operating point of the error curve; the curve
  // itself is fully determined by s50 and slope.
  double target_bler = 0.01;
  int queue_depth_tbs = 128;

  bool operator==(const RadioSection&) const = default;
};

struct TsnSection {
  double port_rate_bps = 1e9;
  PcpMap pcp{};
  // Interval used when sizing the video reservation (idle slope).
  double cbs_reservation_interval_s = 0.060;
  std::optional<double> idle_slope_override_bps;
  bool enable_cbs = true;

  bool operator==(const TsnSection&) const = default;
};

struct ClassConfig {
  bool downlink = true;
  bool uplink = true;
  TrafficSpec spec{};

  bool operator==(const ClassConfig&) const = default;
};

struct TrafficSection {
  ClassConfig nc{true, true, default_spec(TrafficClass::NetworkControl)};
  ClassConfig video{true, true, default_spec(TrafficClass::Video)};
  ClassConfig be{true, true, default_spec(TrafficClass::BestEffort)};

  const ClassConfig& for_class(TrafficClass c) const;
  ClassConfig& for_class(TrafficClass c);

  bool operator==(const TrafficSection&) const = default;
};

struct MobilitySection {
  double speed_min_mps = 0.2;
  double speed_max_mps = 1.5;

  bool operator==(const MobilitySection&) const = default;
};

struct ScenarioConfig {
  InFProfile profile = InFProfile::SL;
  int ues = 5;
  RegionSpec region{};
  std::uint64_t seed = 1;
  double duration_s = 10.0;
  double warmup_exclusion_s = 1.0;
  ChannelSection channel{};
  RadioSection radio{};
  TsnSection tsn{};
  TrafficSection traffic{};
  MobilitySection mobility{};

  bool operator==(const ScenarioConfig&) const = default;
};

// Per-profile clutter and antenna defaults applied on top of the common
// scenario defaults.
ScenarioConfig default_scenario_config(InFProfile p);

// Throws ConfigError on any out-of-range or inconsistent setting.
void validate(const ScenarioConfig& cfg);

ChannelConfig channel_config(const ScenarioConfig& cfg);
RadioConfig radio_config(const ScenarioConfig& cfg);

// Channel keys a sweep may override globally; the clutter and antenna
// geometry always follow each cell's profile defaults.
struct SweepChannelOverrides {
  std::optional<double> fc_ghz;
  std::optional<double> h_ut_m;
  std::optional<bool> clamp_distances;
  std::optional<double> shadow_sigma_override_db;
  std::optional<double> interference_margin_db;

  bool operator==(const SweepChannelOverrides&) const = default;
};

struct SweepConfig {
  std::vector<InFProfile> profiles;
  std::vector<int> ue_counts;
  std::vector<RegionSpec> regions;
  int repetitions = 1;
  std::uint64_t master_seed = 1;
  double duration_s = 10.0;
  double warmup_exclusion_s = 1.0;
  SweepChannelOverrides channel{};
  RadioSection radio{};
  TsnSection tsn{};
  TrafficSection traffic{};
  MobilitySection mobility{};

  bool operator==(const SweepConfig&) const = default;
};

void validate(const SweepConfig& cfg);

// "<profile>_<ues>_<region>_<rep>", e.g. "InF-SL_5_d2_0".
std::string cell_name(InFProfile p, int ues, const RegionSpec& region,
                      int rep);

// Independent per-cell seed derived from the sweep master seed and the cell
// coordinates; inserting new axis values does not disturb other cells.
std::uint64_t cell_seed(std::uint64_t master_seed, InFProfile p, int ues,
                        const RegionSpec& region, int rep);

// Fully resolved scenario for one sweep cell.
ScenarioConfig cell_config(const SweepConfig& sweep, InFProfile p, int ues,
                           const RegionSpec& region, int rep);

using ParsedConfig = std::variant<ScenarioConfig, SweepConfig>;

// JSON in, strict: unknown keys are rejected with their full path. A config
// containing a "sweep" section parses as SweepConfig, otherwise as
// ScenarioConfig.
ParsedConfig parse_config_text(const std::string& text);
ParsedConfig parse_config_file(const std::filesystem::path& path);

std::string serialize(const ScenarioConfig& cfg);
std::string serialize(const SweepConfig& cfg);

}  // namespace inftsn
