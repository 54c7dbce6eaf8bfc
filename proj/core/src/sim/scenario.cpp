#include "inftsn/sim/scenario.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "inftsn/mobility/mobility.hpp"
#include "inftsn/radio/mac.hpp"

namespace inftsn {

namespace {

// Extra simulated time allowed for queued work to finish after the traffic
// horizon; whatever is still stuck afterwards counts as dropped.
constexpr double kDrainHorizonS = 30.0;

struct UeState {
  std::uint32_t id = 0;
  MobilityLeg leg{};
  LargeScaleState channel{};
};

class ScenarioRun {
 public:
  ScenarioRun(const ScenarioConfig& cfg, bool keep_traces)
      : cfg_(cfg),
        engine_(cfg.seed),
        metrics_(cfg.warmup_exclusion_s),
        chan_(channel_config(cfg)),
        t_end_(SimTime::from_seconds(cfg.duration_s)),
        keep_traces_(keep_traces) {
    validate(cfg_);
    gnb_pos_ = Position3D{0.0, 0.0, cfg_.channel.h_bs_m};
    noise_dl_dbm_ = thermal_noise_dbm(cfg_.radio.bandwidth_hz,
                                      cfg_.radio.ue_noise_figure_db);
    noise_ul_dbm_ = thermal_noise_dbm(cfg_.radio.bandwidth_hz,
                                      cfg_.radio.gnb_noise_figure_db);
    setup_ues();
    setup_ports();
    setup_macs();
    setup_traffic();
  }

  RunOutput run() {
    engine_.run_until(t_end_);
    engine_.run_until_idle(t_end_ + SimTime::from_seconds(kDrainHorizonS));

    stats_.radio_flushed += dl_mac_->flush();
    stats_.radio_flushed += ul_mac_->flush();
    auto drop_port_frame = [this](const Frame& f) {
      metrics_.record_dropped(f.cls, f.direction);
    };
    stats_.port_flushed += dl_port_->flush(drop_port_frame);
    stats_.port_flushed += ul_port_->flush(drop_port_frame);

    for (const auto& [key, c] : metrics_.frame_counters()) {
      if (c.generated != c.delivered + c.dropped) {
        throw std::logic_error(
            std::string("frame conservation violated for class ") +
            traffic_class_name(key.first) + "/" +
            direction_name(key.second));
      }
    }

    stats_.events_fired = engine_.events_fired();
    RunOutput out;
    out.summary = metrics_.summarize();
    out.stats = stats_;
    out.metrics = std::move(metrics_);
    out.dl_port_trace = std::move(dl_trace_);
    out.ul_port_trace = std::move(ul_trace_);
    return out;
  }

 private:
  RngStream& mobility_rng(std::uint32_t ue) {
    return engine_.rng_stream("mobility.ue" + std::to_string(ue));
  }
  RngStream& channel_rng(std::uint32_t ue) {
    return engine_.rng_stream("channel.ue" + std::to_string(ue));
  }
  RngStream& harq_rng(Direction dir, std::uint32_t ue) {
    return engine_.rng_stream(std::string("harq.") + direction_name(dir) +
                              ".ue" + std::to_string(ue));
  }

  void redraw_channel(UeState& u, const Position3D& at) {
    u.channel =
        draw_large_scale(cfg_.profile, gnb_pos_, at, chan_, channel_rng(u.id));
    if (u.channel.los) {
      stats_.los_redraws++;
    } else {
      stats_.nlos_redraws++;
    }
  }

  void schedule_leg_arrival(std::uint32_t ue) {
    const SimTime arr = ues_[ue].leg.arrival_time();
    if (arr > t_end_) return;  // finishes the run mid-leg
    engine_.schedule(arr, [this, ue] { on_leg_arrival(ue); });
  }

  void on_leg_arrival(std::uint32_t ue) {
    UeState& u = ues_[ue];
    stats_.legs_completed++;
    const Position3D here = u.leg.to;
    redraw_channel(u, here);
    const Waypoint w =
        sample_waypoint(cfg_.region.radius_m, cfg_.mobility.speed_min_mps,
                        cfg_.mobility.speed_max_mps, mobility_rng(ue),
                        cfg_.channel.h_ut_m);
    u.leg = MobilityLeg{here, w.pos, engine_.now(), w.speed_mps};
    schedule_leg_arrival(ue);
  }

  void setup_ues() {
    ues_.resize(static_cast<std::size_t>(cfg_.ues));
    for (std::uint32_t i = 0; i < ues_.size(); ++i) {
      UeState& u = ues_[i];
      u.id = i;
      auto& mrng = mobility_rng(i);
      const Position3D start =
          sample_position(cfg_.region.radius_m, mrng, cfg_.channel.h_ut_m);
      const Waypoint w =
          sample_waypoint(cfg_.region.radius_m, cfg_.mobility.speed_min_mps,
                          cfg_.mobility.speed_max_mps, mrng,
                          cfg_.channel.h_ut_m);
      u.leg = MobilityLeg{start, w.pos, SimTime{}, w.speed_mps};
      redraw_channel(u, start);
      schedule_leg_arrival(i);
    }
  }

  CbsSlopes port_slopes(bool video_on_port) const {
    if (!cfg_.tsn.enable_cbs || !video_on_port) return CbsSlopes{};
    if (cfg_.tsn.idle_slope_override_bps) {
      const double idle = *cfg_.tsn.idle_slope_override_bps;
      if (idle >= cfg_.tsn.port_rate_bps) {
        throw ConfigError(
            "tsn.idle_slope_override_bps: reservation meets or exceeds the "
            "port rate");
      }
      return CbsSlopes{idle, idle - cfg_.tsn.port_rate_bps};
    }
    const double per_stream = stream_data_rate_bps(
        encapsulate(cfg_.traffic.video.spec.payload_bytes),
        cfg_.tsn.cbs_reservation_interval_s);
    return compute_slopes(cfg_.ues, per_stream, cfg_.tsn.port_rate_bps);
  }

  void setup_ports() {
    EgressConfig dl;
    dl.port_rate_bps = cfg_.tsn.port_rate_bps;
    dl.pcp = cfg_.tsn.pcp;
    dl.enable_cbs = cfg_.tsn.enable_cbs && cfg_.traffic.video.downlink;
    dl.video_slopes = port_slopes(cfg_.traffic.video.downlink);
    dl_port_ = std::make_unique<EgressPort>(engine_, dl, [this](Frame&& f) {
      TransportBlock tb;
      tb.frame = std::move(f);
      dl_mac_->enqueue(std::move(tb));
    });

    EgressConfig ul = dl;
    ul.enable_cbs = cfg_.tsn.enable_cbs && cfg_.traffic.video.uplink;
    ul.video_slopes = port_slopes(cfg_.traffic.video.uplink);
    ul_port_ = std::make_unique<EgressPort>(engine_, ul, [this](Frame&& f) {
      finish_delivery(f);
    });

    if (keep_traces_) {
      dl_port_->set_trace(&dl_trace_);
      ul_port_->set_trace(&ul_trace_);
    }
  }

  void finish_delivery(const Frame& f) {
    const SimTime now = engine_.now();
    metrics_.record_delay(now.seconds(), f.ue_id, f.cls, f.direction,
                          (now - f.generated_at).seconds());
    metrics_.record_delivered(f.cls, f.direction);
  }

  void setup_macs() {
    const RadioConfig rc = radio_config(cfg_);

    RadioHooks dl;
    dl.sinr_db = [this](std::uint32_t ue) {
      return current_sinr(ue, Direction::Downlink);
    };
    dl.harq_rng = [this](std::uint32_t ue) -> RngStream& {
      return harq_rng(Direction::Downlink, ue);
    };
    dl.delivered = [this](TransportBlock&& tb) { finish_delivery(tb.frame); };
    dl.dropped = [this](const TransportBlock& tb) {
      metrics_.record_dropped(tb.frame.cls, tb.frame.direction);
    };
    dl.attempt = [this](std::uint32_t ue, double sinr, bool failed) {
      metrics_.record_harq_attempt(Direction::Downlink, failed);
      metrics_.record_sinr(engine_.now().seconds(), ue, Direction::Downlink,
                           sinr);
    };
    dl_mac_ = std::make_unique<RadioMac>(engine_, rc, dl);

    RadioHooks ul;
    ul.sinr_db = [this](std::uint32_t ue) {
      return current_sinr(ue, Direction::Uplink);
    };
    ul.harq_rng = [this](std::uint32_t ue) -> RngStream& {
      return harq_rng(Direction::Uplink, ue);
    };
    ul.delivered = [this](TransportBlock&& tb) {
      ul_port_->submit(std::move(tb.frame));
    };
    ul.dropped = [this](const TransportBlock& tb) {
      metrics_.record_dropped(tb.frame.cls, tb.frame.direction);
    };
    ul.attempt = [this](std::uint32_t ue, double sinr, bool failed) {
      metrics_.record_harq_attempt(Direction::Uplink, failed);
      metrics_.record_sinr(engine_.now().seconds(), ue, Direction::Uplink,
                           sinr);
    };
    ul_mac_ = std::make_unique<RadioMac>(engine_, rc, ul);
  }

  double current_sinr(std::uint32_t ue, Direction dir) {
    const UeState& u = ues_[ue];
    const Position3D pos = u.leg.position_at(engine_.now());
    const double d =
        effective_distance_m(distance_3d(pos, gnb_pos_), chan_);
    const double pl = u.channel.los
                          ? pathloss_los_db(d, chan_.fc_ghz)
                          : pathloss_nlos_db(cfg_.profile, d, chan_.fc_ghz);
    const double tx = dir == Direction::Downlink ? cfg_.radio.gnb_tx_power_dbm
                                                 : cfg_.radio.ue_tx_power_dbm;
    const double noise =
        dir == Direction::Downlink ? noise_dl_dbm_ : noise_ul_dbm_;
    return tx - pl - u.channel.shadow_db - noise -
           cfg_.channel.interference_margin_db;
  }

  void setup_traffic() {
    for (std::uint32_t ue = 0; ue < ues_.size(); ++ue) {
      for (TrafficClass cls : {TrafficClass::NetworkControl,
                               TrafficClass::Video, TrafficClass::BestEffort}) {
        const ClassConfig& cc = cfg_.traffic.for_class(cls);
        for (Direction dir : {Direction::Downlink, Direction::Uplink}) {
          if (dir == Direction::Downlink && !cc.downlink) continue;
          if (dir == Direction::Uplink && !cc.uplink) continue;
          auto& rng = engine_.rng_stream(
              std::string("traffic.") + direction_name(dir) + "." +
              traffic_class_name(cls) + ".ue" + std::to_string(ue));
          gens_.emplace_back(cc.spec, ue, cls, dir,
                             cfg_.tsn.pcp.pcp_for(cls), rng);
          schedule_emission(gens_.size() - 1);
        }
      }
    }
  }

  void schedule_emission(std::size_t gi) {
    const SimTime t = gens_[gi].next_time();
    if (t > t_end_) return;
    engine_.schedule(t, [this, gi] { fire_emission(gi); });
  }

  void fire_emission(std::size_t gi) {
    Frame f = gens_[gi].emit();
    metrics_.record_generated(f.cls, f.direction);
    if (f.direction == Direction::Downlink) {
      dl_port_->submit(std::move(f));
    } else {
      TransportBlock tb;
      tb.frame = std::move(f);
      ul_mac_->enqueue(std::move(tb));
    }
    schedule_emission(gi);
  }

  const ScenarioConfig& cfg_;
  Engine engine_;
  MetricsStore metrics_;
  ChannelConfig chan_;
  SimTime t_end_;
  bool keep_traces_;
  Position3D gnb_pos_{};
  double noise_dl_dbm_ = 0;
  double noise_ul_dbm_ = 0;
  std::vector<UeState> ues_;
  std::unique_ptr<EgressPort> dl_port_;
  std::unique_ptr<EgressPort> ul_port_;
  std::unique_ptr<RadioMac> dl_mac_;
  std::unique_ptr<RadioMac> ul_mac_;
  std::vector<StreamGenerator> gens_;
  std::vector<EgressRecord> dl_trace_;
  std::vector<EgressRecord> ul_trace_;
  ScenarioStats stats_;
};

}  // namespace

RunOutput run_scenario(const ScenarioConfig& cfg, bool keep_port_traces) {
  ScenarioRun run(cfg, keep_port_traces);
  return run.run();
}

}  // namespace inftsn
