#include "inftsn/sim/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "inftsn/mobility/mobility.hpp"
#include "json.hpp"

namespace inftsn {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ConfigError(path.empty() ? msg : path + ": " + msg);
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

// Strict object reader: every key must be consumed, leftovers are errors.
class Obj {
 public:
  Obj(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail(path_, "expected an object");
  }

  ~Obj() = default;

  const json* find(const std::string& key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  bool has(const std::string& key) const { return j_.contains(key); }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) fail(join(path_, it.key()), "unknown key");
    }
  }

  double number(const std::string& key, double fallback) {
    const json* v = find(key);
    if (!v) return fallback;
    if (!v->is_number()) fail(join(path_, key), "expected a number");
    return v->get<double>();
  }

  int integer(const std::string& key, int fallback) {
    const json* v = find(key);
    if (!v) return fallback;
    if (!v->is_number_integer()) fail(join(path_, key), "expected an integer");
    return v->get<int>();
  }

  std::uint64_t uinteger(const std::string& key, std::uint64_t fallback) {
    const json* v = find(key);
    if (!v) return fallback;
    if (!v->is_number_unsigned() && !v->is_number_integer()) {
      fail(join(path_, key), "expected an integer");
    }
    if (v->is_number_integer() && v->get<std::int64_t>() < 0) {
      fail(join(path_, key), "expected a nonnegative integer");
    }
    return v->get<std::uint64_t>();
  }

  bool boolean(const std::string& key, bool fallback) {
    const json* v = find(key);
    if (!v) return fallback;
    if (!v->is_boolean()) fail(join(path_, key), "expected a boolean");
    return v->get<bool>();
  }

  std::string text(const std::string& key, const std::string& fallback) {
    const json* v = find(key);
    if (!v) return fallback;
    if (!v->is_string()) fail(join(path_, key), "expected a string");
    return v->get<std::string>();
  }

  std::optional<double> nullable_number(const std::string& key,
                                        std::optional<double> fallback) {
    const json* v = find(key);
    if (!v) return fallback;
    if (v->is_null()) return std::nullopt;
    if (!v->is_number()) fail(join(path_, key), "expected a number or null");
    return v->get<double>();
  }

  const std::string& path() const { return path_; }
  const json& raw() const { return j_; }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

Distribution parse_distribution(const json& j, const std::string& path) {
  Obj o(j, path);
  const std::string type = o.text("type", "");
  if (type == "constant") {
    ConstantDist d;
    d.value_s = o.number("value_s", 0.0);
    o.finish();
    return d;
  }
  if (type == "uniform") {
    UniformDist d;
    d.low_s = o.number("low_s", 0.0);
    d.high_s = o.number("high_s", 0.0);
    o.finish();
    return d;
  }
  if (type == "exponential") {
    ExponentialDist d;
    d.mean_s = o.number("mean_s", 0.0);
    o.finish();
    return d;
  }
  fail(join(path, "type"),
       "expected one of \"constant\", \"uniform\", \"exponential\"");
}

json serialize_distribution(const Distribution& d) {
  json j;
  if (const auto* c = std::get_if<ConstantDist>(&d)) {
    j["type"] = "constant";
    j["value_s"] = c->value_s;
  } else if (const auto* u = std::get_if<UniformDist>(&d)) {
    j["type"] = "uniform";
    j["low_s"] = u->low_s;
    j["high_s"] = u->high_s;
  } else {
    j["type"] = "exponential";
    j["mean_s"] = std::get<ExponentialDist>(d).mean_s;
  }
  return j;
}

RegionSpec parse_region_value(const json& v, const std::string& path) {
  if (v.is_string()) return parse_region(v.get<std::string>());
  if (v.is_number()) return region_from_radius(v.get<double>());
  fail(path, "expected a region name or a radius in meters");
}

json serialize_region(const RegionSpec& r) {
  if (!r.name.empty()) return json(r.name);
  return json(r.radius_m);
}

void parse_channel_section(const json& j, const std::string& path,
                           ChannelSection& out) {
  Obj o(j, path);
  out.fc_ghz = o.number("fc_ghz", out.fc_ghz);
  out.d_clutter_m = o.number("d_clutter_m", out.d_clutter_m);
  out.clutter_density_r = o.number("clutter_density_r", out.clutter_density_r);
  out.h_c_m = o.number("h_c_m", out.h_c_m);
  out.h_bs_m = o.number("h_bs_m", out.h_bs_m);
  out.h_ut_m = o.number("h_ut_m", out.h_ut_m);
  out.clamp_distances = o.boolean("clamp_distances", out.clamp_distances);
  out.shadow_sigma_override_db = o.nullable_number(
      "shadow_sigma_override_db", out.shadow_sigma_override_db);
  out.interference_margin_db =
      o.number("interference_margin_db", out.interference_margin_db);
  o.finish();
}

json serialize_channel_section(const ChannelSection& c) {
  json j;
  j["fc_ghz"] = c.fc_ghz;
  j["d_clutter_m"] = c.d_clutter_m;
  j["clutter_density_r"] = c.clutter_density_r;
  j["h_c_m"] = c.h_c_m;
  j["h_bs_m"] = c.h_bs_m;
  j["h_ut_m"] = c.h_ut_m;
  j["clamp_distances"] = c.clamp_distances;
  j["shadow_sigma_override_db"] =
      c.shadow_sigma_override_db ? json(*c.shadow_sigma_override_db)
                                 : json(nullptr);
  j["interference_margin_db"] = c.interference_margin_db;
  return j;
}

void parse_radio_section(const json& j, const std::string& path,
                         RadioSection& out) {
  Obj o(j, path);
  out.mu = o.integer("mu", out.mu);
  out.bandwidth_hz = o.number("bandwidth_hz", out.bandwidth_hz);
  out.gnb_tx_power_dbm = o.number("gnb_tx_power_dbm", out.gnb_tx_power_dbm);
  out.ue_tx_power_dbm = o.number("ue_tx_power_dbm", out.ue_tx_power_dbm);
  out.gnb_noise_figure_db =
      o.number("gnb_noise_figure_db", out.gnb_noise_figure_db);
  out.ue_noise_figure_db =
      o.number("ue_noise_figure_db", out.ue_noise_figure_db);
  out.bler_s50_db = o.number("bler_s50_db", out.bler_s50_db);
  out.bler_slope_per_db = o.number("bler_slope_per_db", out.bler_slope_per_db);
  out.target_bler = o.number("target_bler", out.target_bler);
  out.queue_depth_tbs = o.integer("queue_depth_tbs", out.queue_depth_tbs);
  o.finish();
}

json serialize_radio_section(const RadioSection& r) {
  json j;
  j["mu"] = r.mu;
  j["bandwidth_hz"] = r.bandwidth_hz;
  j["gnb_tx_power_dbm"] = r.gnb_tx_power_dbm;
  j["ue_tx_power_dbm"] = r.ue_tx_power_dbm;
  j["gnb_noise_figure_db"] = r.gnb_noise_figure_db;
  j["ue_noise_figure_db"] = r.ue_noise_figure_db;
  j["bler_s50_db"] = r.bler_s50_db;
  j["bler_slope_per_db"] = r.bler_slope_per_db;
  j["target_bler"] = r.target_bler;
  j["queue_depth_tbs"] = r.queue_depth_tbs;
  return j;
}

void parse_tsn_section(const json& j, const std::string& path,
                       TsnSection& out) {
  Obj o(j, path);
  out.port_rate_bps = o.number("port_rate_bps", out.port_rate_bps);
  if (const json* p = o.find("pcp")) {
    Obj po(*p, join(path, "pcp"));
    out.pcp.nc = po.integer("nc", out.pcp.nc);
    out.pcp.video = po.integer("video", out.pcp.video);
    out.pcp.be = po.integer("be", out.pcp.be);
    po.finish();
  }
  out.cbs_reservation_interval_s =
      o.number("cbs_reservation_interval_s", out.cbs_reservation_interval_s);
  out.idle_slope_override_bps = o.nullable_number("idle_slope_override_bps",
                                                  out.idle_slope_override_bps);
  out.enable_cbs = o.boolean("enable_cbs", out.enable_cbs);
  o.finish();
}

json serialize_tsn_section(const TsnSection& t) {
  json j;
  j["port_rate_bps"] = t.port_rate_bps;
  j["pcp"] = {{"nc", t.pcp.nc}, {"video", t.pcp.video}, {"be", t.pcp.be}};
  j["cbs_reservation_interval_s"] = t.cbs_reservation_interval_s;
  j["idle_slope_override_bps"] = t.idle_slope_override_bps
                                     ? json(*t.idle_slope_override_bps)
                                     : json(nullptr);
  j["enable_cbs"] = t.enable_cbs;
  return j;
}

void parse_class_config(const json& j, const std::string& path,
                        ClassConfig& out) {
  Obj o(j, path);
  out.downlink = o.boolean("downlink", out.downlink);
  out.uplink = o.boolean("uplink", out.uplink);
  const json* v = o.find("payload_bytes");
  if (v) {
    if (!v->is_number_integer() || v->get<std::int64_t>() < 0) {
      fail(join(path, "payload_bytes"), "expected a nonnegative integer");
    }
    out.spec.payload_bytes = v->get<std::uint32_t>();
  }
  if (const json* d = o.find("interval")) {
    out.spec.interval = parse_distribution(*d, join(path, "interval"));
  }
  if (const json* d = o.find("start")) {
    out.spec.start = parse_distribution(*d, join(path, "start"));
  }
  if (const json* d = o.find("offset")) {
    out.spec.offset = parse_distribution(*d, join(path, "offset"));
  }
  o.finish();
}

json serialize_class_config(const ClassConfig& c) {
  json j;
  j["downlink"] = c.downlink;
  j["uplink"] = c.uplink;
  j["payload_bytes"] = c.spec.payload_bytes;
  j["interval"] = serialize_distribution(c.spec.interval);
  j["start"] = serialize_distribution(c.spec.start);
  j["offset"] = serialize_distribution(c.spec.offset);
  return j;
}

void parse_traffic_section(const json& j, const std::string& path,
                           TrafficSection& out) {
  Obj o(j, path);
  if (const json* v = o.find("nc")) parse_class_config(*v, join(path, "nc"), out.nc);
  if (const json* v = o.find("video")) {
    parse_class_config(*v, join(path, "video"), out.video);
  }
  if (const json* v = o.find("be")) parse_class_config(*v, join(path, "be"), out.be);
  o.finish();
}

json serialize_traffic_section(const TrafficSection& t) {
  json j;
  j["nc"] = serialize_class_config(t.nc);
  j["video"] = serialize_class_config(t.video);
  j["be"] = serialize_class_config(t.be);
  return j;
}

void parse_mobility_section(const json& j, const std::string& path,
                            MobilitySection& out) {
  Obj o(j, path);
  out.speed_min_mps = o.number("speed_min_mps", out.speed_min_mps);
  out.speed_max_mps = o.number("speed_max_mps", out.speed_max_mps);
  o.finish();
}

json serialize_mobility_section(const MobilitySection& m) {
  json j;
  j["speed_min_mps"] = m.speed_min_mps;
  j["speed_max_mps"] = m.speed_max_mps;
  return j;
}

void check_distribution(const Distribution& d, const std::string& what,
                        bool positive_mean) {
  if (const auto* c = std::get_if<ConstantDist>(&d)) {
    if (c->value_s < 0.0) fail(what, "constant value must be >= 0");
    if (positive_mean && !(c->value_s > 0.0)) {
      fail(what, "constant value must be > 0");
    }
  } else if (const auto* u = std::get_if<UniformDist>(&d)) {
    if (u->low_s < 0.0 || u->high_s < u->low_s) {
      fail(what, "uniform bounds must satisfy 0 <= low <= high");
    }
    if (positive_mean && !(u->high_s > 0.0)) {
      fail(what, "uniform upper bound must be > 0");
    }
  } else {
    const auto& e = std::get<ExponentialDist>(d);
    if (!(e.mean_s > 0.0)) fail(what, "exponential mean must be > 0");
  }
}

void validate_common(const RadioSection& radio, const TsnSection& tsn,
                     const TrafficSection& traffic,
                     const MobilitySection& mobility, double duration_s,
                     double warmup_s) {
  if (!(duration_s > 0.0)) fail("duration_s", "must be > 0");
  if (warmup_s < 0.0 || warmup_s >= duration_s) {
    fail("warmup_exclusion_s", "must lie in [0, duration_s)");
  }
  if (radio.mu < 0 || radio.mu > 6) fail("radio.mu", "must lie in 0..6");
  if (!(radio.bandwidth_hz > 0.0)) fail("radio.bandwidth_hz", "must be > 0");
  if (radio.ue_noise_figure_db < 0.0 || radio.gnb_noise_figure_db < 0.0) {
    fail("radio", "noise figures must be >= 0");
  }
  if (!(radio.bler_slope_per_db > 0.0)) {
    fail("radio.bler_slope_per_db", "must be > 0");
  }
  if (!(radio.target_bler > 0.0 && radio.target_bler < 1.0)) {
    fail("radio.target_bler", "must lie in (0, 1)");
  }
  if (radio.queue_depth_tbs < 1) fail("radio.queue_depth_tbs", "must be >= 1");

  if (!(tsn.port_rate_bps > 0.0)) fail("tsn.port_rate_bps", "must be > 0");
  for (int pcp : {tsn.pcp.nc, tsn.pcp.video, tsn.pcp.be}) {
    if (pcp < 0 || pcp > 7) fail("tsn.pcp", "values must lie in 0..7");
  }
  if (tsn.pcp.nc == tsn.pcp.video || tsn.pcp.nc == tsn.pcp.be ||
      tsn.pcp.video == tsn.pcp.be) {
    fail("tsn.pcp", "class priorities must be distinct");
  }
  if (!(tsn.cbs_reservation_interval_s > 0.0)) {
    fail("tsn.cbs_reservation_interval_s", "must be > 0");
  }
  if (tsn.idle_slope_override_bps && !(*tsn.idle_slope_override_bps > 0.0)) {
    fail("tsn.idle_slope_override_bps", "must be > 0 when set");
  }

  for (TrafficClass c : {TrafficClass::NetworkControl, TrafficClass::Video,
                         TrafficClass::BestEffort}) {
    const ClassConfig& cc = traffic.for_class(c);
    const std::string base = std::string("traffic.") + traffic_class_name(c);
    if (!cc.downlink && !cc.uplink) continue;
    if (cc.spec.payload_bytes < 1) fail(base + ".payload_bytes", "must be >= 1");
    check_distribution(cc.spec.interval, base + ".interval", true);
    check_distribution(cc.spec.start, base + ".start", false);
    check_distribution(cc.spec.offset, base + ".offset", false);
  }

  if (!(mobility.speed_min_mps > 0.0) ||
      mobility.speed_max_mps < mobility.speed_min_mps) {
    fail("mobility", "speeds must satisfy 0 < min <= max");
  }
}

void validate_channel_section(const ChannelSection& ch, InFProfile profile) {
  if (!(ch.fc_ghz > 0.0)) fail("channel.fc_ghz", "must be > 0");
  if (!(ch.d_clutter_m > 0.0)) fail("channel.d_clutter_m", "must be > 0");
  if (!(ch.clutter_density_r > 0.0 && ch.clutter_density_r < 1.0)) {
    fail("channel.clutter_density_r", "must lie in (0, 1)");
  }
  if (ch.shadow_sigma_override_db && *ch.shadow_sigma_override_db < 0.0) {
    fail("channel.shadow_sigma_override_db", "must be >= 0 when set");
  }
  if (ch.interference_margin_db < 0.0) {
    fail("channel.interference_margin_db", "must be >= 0");
  }
  if (profile == InFProfile::SH || profile == InFProfile::DH) {
    if (!(ch.h_c_m > ch.h_ut_m)) {
      fail("channel.h_c_m", "must exceed h_ut_m for elevated-antenna profiles");
    }
    if (!(ch.h_bs_m > ch.h_ut_m)) {
      fail("channel.h_bs_m", "must exceed h_ut_m for elevated-antenna profiles");
    }
  }
}

}  // namespace

std::string RegionSpec::label() const {
  if (!name.empty()) return name;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", radius_m);
  return buf;
}

RegionSpec parse_region(const std::string& name) {
  RegionSpec r;
  r.name = name;
  r.radius_m = named_region_radius(name);  // throws on unknown names
  return r;
}

RegionSpec region_from_radius(double radius_m) {
  if (!(radius_m > 0.0)) {
    throw ConfigError("region radius must be > 0");
  }
  RegionSpec r;
  r.name.clear();
  r.radius_m = radius_m;
  return r;
}

const ClassConfig& TrafficSection::for_class(TrafficClass c) const {
  switch (c) {
    case TrafficClass::NetworkControl: return nc;
    case TrafficClass::Video: return video;
    case TrafficClass::BestEffort: return be;
  }
  throw std::invalid_argument("unknown traffic class enum value");
}

ClassConfig& TrafficSection::for_class(TrafficClass c) {
  return const_cast<ClassConfig&>(
      static_cast<const TrafficSection&>(*this).for_class(c));
}

ScenarioConfig default_scenario_config(InFProfile p) {
  ScenarioConfig c;
  c.profile = p;
  switch (p) {
    case InFProfile::SL:
      c.channel.d_clutter_m = 10.0;
      c.channel.clutter_density_r = 0.2;
      c.channel.h_c_m = 2.0;
      c.channel.h_bs_m = 1.5;
      break;
    case InFProfile::DL:
      c.channel.d_clutter_m = 2.0;
      c.channel.clutter_density_r = 0.6;
      c.channel.h_c_m = 6.0;
      c.channel.h_bs_m = 1.5;
      break;
    case InFProfile::SH:
      c.channel.d_clutter_m = 10.0;
      c.channel.clutter_density_r = 0.2;
      c.channel.h_c_m = 2.0;
      c.channel.h_bs_m = 8.0;
      break;
    case InFProfile::DH:
      c.channel.d_clutter_m = 2.0;
      c.channel.clutter_density_r = 0.6;
      c.channel.h_c_m = 6.0;
      c.channel.h_bs_m = 8.0;
      break;
    case InFProfile::HH:
      c.channel.d_clutter_m = 10.0;
      c.channel.clutter_density_r = 0.2;
      c.channel.h_c_m = 2.0;
      c.channel.h_bs_m = 8.0;
      break;
  }
  return c;
}

void validate(const ScenarioConfig& cfg) {
  if (cfg.ues < 1) fail("ues", "must be >= 1");
  if (!(cfg.region.radius_m > 0.0)) fail("region", "radius must be > 0");
  if (std::hypot(cfg.region.radius_m, cfg.channel.h_bs_m - cfg.channel.h_ut_m) >
      600.0) {
    fail("region", "deployment radius exceeds the 600 m channel model range");
  }
  validate_channel_section(cfg.channel, cfg.profile);
  validate_common(cfg.radio, cfg.tsn, cfg.traffic, cfg.mobility,
                  cfg.duration_s, cfg.warmup_exclusion_s);
}

ChannelConfig channel_config(const ScenarioConfig& cfg) {
  ChannelConfig c;
  c.fc_ghz = cfg.channel.fc_ghz;
  c.d_clutter_m = cfg.channel.d_clutter_m;
  c.clutter_density_r = cfg.channel.clutter_density_r;
  c.h_c_m = cfg.channel.h_c_m;
  c.h_bs_m = cfg.channel.h_bs_m;
  c.h_ut_m = cfg.channel.h_ut_m;
  c.clamp_distances = cfg.channel.clamp_distances;
  c.shadow_sigma_override_db = cfg.channel.shadow_sigma_override_db;
  return c;
}

RadioConfig radio_config(const ScenarioConfig& cfg) {
  RadioConfig r;
  r.numerology.mu = cfg.radio.mu;
  r.bandwidth_hz = cfg.radio.bandwidth_hz;
  r.bler_curve.s50_db = cfg.radio.bler_s50_db;
  r.bler_curve.slope_per_db = cfg.radio.bler_slope_per_db;
  r.queue_depth_tbs = cfg.radio.queue_depth_tbs;
  return r;
}

void validate(const SweepConfig& cfg) {
  if (cfg.profiles.empty()) fail("sweep.profiles", "must not be empty");
  if (cfg.ue_counts.empty()) fail("sweep.ues", "must not be empty");
  if (cfg.regions.empty()) fail("sweep.regions", "must not be empty");
  if (cfg.repetitions < 1) fail("sweep.repetitions", "must be >= 1");
  for (int u : cfg.ue_counts) {
    if (u < 1) fail("sweep.ues", "entries must be >= 1");
  }
  // Each resolved cell is validated fully; here just catch cheap mistakes.
  validate_common(cfg.radio, cfg.tsn, cfg.traffic, cfg.mobility,
                  cfg.duration_s, cfg.warmup_exclusion_s);
}

std::string cell_name(InFProfile p, int ues, const RegionSpec& region,
                      int rep) {
  return std::string(profile_name(p)) + "_" + std::to_string(ues) + "_" +
         region.label() + "_" + std::to_string(rep);
}

std::uint64_t cell_seed(std::uint64_t master_seed, InFProfile p, int ues,
                        const RegionSpec& region, int rep) {
  std::uint64_t s = derive_seed(master_seed, profile_name(p));
  s = derive_seed(s, "ues=" + std::to_string(ues));
  s = derive_seed(s, "region=" + region.label());
  s = derive_seed(s, "rep=" + std::to_string(rep));
  return s;
}

ScenarioConfig cell_config(const SweepConfig& sweep, InFProfile p, int ues,
                           const RegionSpec& region, int rep) {
  ScenarioConfig c = default_scenario_config(p);
  c.ues = ues;
  c.region = region;
  c.seed = cell_seed(sweep.master_seed, p, ues, region, rep);
  c.duration_s = sweep.duration_s;
  c.warmup_exclusion_s = sweep.warmup_exclusion_s;
  if (sweep.channel.fc_ghz) c.channel.fc_ghz = *sweep.channel.fc_ghz;
  if (sweep.channel.h_ut_m) c.channel.h_ut_m = *sweep.channel.h_ut_m;
  if (sweep.channel.clamp_distances) {
    c.channel.clamp_distances = *sweep.channel.clamp_distances;
  }
  if (sweep.channel.shadow_sigma_override_db) {
    c.channel.shadow_sigma_override_db = sweep.channel.shadow_sigma_override_db;
  }
  if (sweep.channel.interference_margin_db) {
    c.channel.interference_margin_db = *sweep.channel.interference_margin_db;
  }
  c.radio = sweep.radio;
  c.tsn = sweep.tsn;
  c.traffic = sweep.traffic;
  c.mobility = sweep.mobility;
  return c;
}

namespace {

ScenarioConfig parse_scenario(const json& j) {
  Obj o(j, "");
  const std::string profile = o.text("profile", "InF-SL");
  InFProfile p;
  try {
    p = parse_profile(profile);
  } catch (const std::invalid_argument& e) {
    fail("profile", e.what());
  }
  ScenarioConfig c = default_scenario_config(p);
  c.ues = o.integer("ues", c.ues);
  if (const json* v = o.find("region")) {
    try {
      c.region = parse_region_value(*v, "region");
    } catch (const std::invalid_argument& e) {
      fail("region", e.what());
    }
  }
  c.seed = o.uinteger("seed", c.seed);
  c.duration_s = o.number("duration_s", c.duration_s);
  c.warmup_exclusion_s = o.number("warmup_exclusion_s", c.warmup_exclusion_s);
  if (const json* v = o.find("channel")) {
    parse_channel_section(*v, "channel", c.channel);
  }
  if (const json* v = o.find("radio")) parse_radio_section(*v, "radio", c.radio);
  if (const json* v = o.find("tsn")) parse_tsn_section(*v, "tsn", c.tsn);
  if (const json* v = o.find("traffic")) {
    parse_traffic_section(*v, "traffic", c.traffic);
  }
  if (const json* v = o.find("mobility")) {
    parse_mobility_section(*v, "mobility", c.mobility);
  }
  o.finish();
  validate(c);
  return c;
}

SweepConfig parse_sweep(const json& j) {
  SweepConfig c;
  Obj o(j, "");
  {
    const json* sv = o.find("sweep");
    Obj so(*sv, "sweep");
    if (const json* v = so.find("profiles")) {
      if (!v->is_array()) fail("sweep.profiles", "expected an array");
      for (const auto& e : *v) {
        if (!e.is_string()) fail("sweep.profiles", "entries must be strings");
        try {
          c.profiles.push_back(parse_profile(e.get<std::string>()));
        } catch (const std::invalid_argument& err) {
          fail("sweep.profiles", err.what());
        }
      }
    }
    if (const json* v = so.find("ues")) {
      if (!v->is_array()) fail("sweep.ues", "expected an array");
      for (const auto& e : *v) {
        if (!e.is_number_integer()) fail("sweep.ues", "entries must be integers");
        c.ue_counts.push_back(e.get<int>());
      }
    }
    if (const json* v = so.find("regions")) {
      if (!v->is_array()) fail("sweep.regions", "expected an array");
      for (const auto& e : *v) {
        try {
          c.regions.push_back(parse_region_value(e, "sweep.regions"));
        } catch (const std::invalid_argument& err) {
          fail("sweep.regions", err.what());
        }
      }
    }
    c.repetitions = so.integer("repetitions", c.repetitions);
    c.master_seed = so.uinteger("master_seed", c.master_seed);
    so.finish();
  }
  c.duration_s = o.number("duration_s", c.duration_s);
  c.warmup_exclusion_s = o.number("warmup_exclusion_s", c.warmup_exclusion_s);
  if (const json* v = o.find("channel")) {
    Obj co(*v, "channel");
    c.channel.fc_ghz = co.nullable_number("fc_ghz", c.channel.fc_ghz);
    c.channel.h_ut_m = co.nullable_number("h_ut_m", c.channel.h_ut_m);
    if (const json* b = co.find("clamp_distances")) {
      if (!b->is_boolean()) fail("channel.clamp_distances", "expected a boolean");
      c.channel.clamp_distances = b->get<bool>();
    }
    c.channel.shadow_sigma_override_db = co.nullable_number(
        "shadow_sigma_override_db", c.channel.shadow_sigma_override_db);
    c.channel.interference_margin_db = co.nullable_number(
        "interference_margin_db", c.channel.interference_margin_db);
    co.finish();  // clutter/antenna keys are per-profile, rejected here
  }
  if (const json* v = o.find("radio")) parse_radio_section(*v, "radio", c.radio);
  if (const json* v = o.find("tsn")) parse_tsn_section(*v, "tsn", c.tsn);
  if (const json* v = o.find("traffic")) {
    parse_traffic_section(*v, "traffic", c.traffic);
  }
  if (const json* v = o.find("mobility")) {
    parse_mobility_section(*v, "mobility", c.mobility);
  }
  o.finish();
  validate(c);
  return c;
}

}  // namespace

ParsedConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("top level must be an object");
  if (j.contains("sweep")) return parse_sweep(j);
  return parse_scenario(j);
}

ParsedConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file: " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config_text(ss.str());
}

std::string serialize(const ScenarioConfig& cfg) {
  json j;
  j["profile"] = profile_name(cfg.profile);
  j["ues"] = cfg.ues;
  j["region"] = serialize_region(cfg.region);
  j["seed"] = cfg.seed;
  j["duration_s"] = cfg.duration_s;
  j["warmup_exclusion_s"] = cfg.warmup_exclusion_s;
  j["channel"] = serialize_channel_section(cfg.channel);
  j["radio"] = serialize_radio_section(cfg.radio);
  j["tsn"] = serialize_tsn_section(cfg.tsn);
  j["traffic"] = serialize_traffic_section(cfg.traffic);
  j["mobility"] = serialize_mobility_section(cfg.mobility);
  return j.dump(2) + "\n";
}

std::string serialize(const SweepConfig& cfg) {
  json j;
  json sw;
  json profiles = json::array();
  for (InFProfile p : cfg.profiles) profiles.push_back(profile_name(p));
  sw["profiles"] = profiles;
  sw["ues"] = cfg.ue_counts;
  json regions = json::array();
  for (const auto& r : cfg.regions) regions.push_back(serialize_region(r));
  sw["regions"] = regions;
  sw["repetitions"] = cfg.repetitions;
  sw["master_seed"] = cfg.master_seed;
  j["sweep"] = sw;
  j["duration_s"] = cfg.duration_s;
  j["warmup_exclusion_s"] = cfg.warmup_exclusion_s;
  json ch;
  ch["fc_ghz"] = cfg.channel.fc_ghz ? json(*cfg.channel.fc_ghz) : json(nullptr);
  ch["h_ut_m"] = cfg.channel.h_ut_m ? json(*cfg.channel.h_ut_m) : json(nullptr);
  if (cfg.channel.clamp_distances) {
    ch["clamp_distances"] = *cfg.channel.clamp_distances;
  }
  ch["shadow_sigma_override_db"] =
      cfg.channel.shadow_sigma_override_db
          ? json(*cfg.channel.shadow_sigma_override_db)
          : json(nullptr);
  ch["interference_margin_db"] =
      cfg.channel.interference_margin_db
          ? json(*cfg.channel.interference_margin_db)
          : json(nullptr);
  j["channel"] = ch;
  j["radio"] = serialize_radio_section(cfg.radio);
  j["tsn"] = serialize_tsn_section(cfg.tsn);
  j["traffic"] = serialize_traffic_section(cfg.traffic);
  j["mobility"] = serialize_mobility_section(cfg.mobility);
  return j.dump(2) + "\n";
}

}  // namespace inftsn
