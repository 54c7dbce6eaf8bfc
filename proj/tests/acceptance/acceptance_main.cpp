// Acceptance gate. Each criterion prints one [PASS]/[FAIL] line plus
// indented detail notes; the process exits nonzero if any selected
// criterion fails. Run with no arguments for all criteria, or pass a
// subset of: c1 c2 c3 c4 c5 c6 c7 c8a c8b c8c c9.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "inftsn/channel/channel.hpp"
#include "inftsn/direction.hpp"
#include "inftsn/engine/engine.hpp"
#include "inftsn/engine/rng.hpp"
#include "inftsn/engine/time.hpp"
#include "inftsn/metrics/csv.hpp"
#include "inftsn/metrics/metrics.hpp"
#include "inftsn/radio/radio.hpp"
#include "inftsn/sim/config.hpp"
#include "inftsn/sim/scenario.hpp"
#include "inftsn/sim/sweep.hpp"
#include "inftsn/tsn/cbs.hpp"
#include "inftsn/tsn/egress.hpp"
#include "inftsn/tsn/frame.hpp"

using namespace inftsn;
namespace fs = std::filesystem;

namespace {

std::string strf(const char* fmt, ...) {
  char buf[768];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  return buf;
}

// Accumulates failures and informational notes for one criterion.
struct Check {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, std::string what) {
    if (!cond) {
      ok = false;
      notes.push_back("check failed: " + std::move(what));
    }
  }
  void info(std::string line) { notes.push_back(std::move(line)); }
};

struct Stopwatch {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double elapsed_s() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

// ---------------------------------------------------------------------------
// C1: path loss against an independent high-precision reference.

long double ref_los_db(long double d, long double f) {
  return 31.84L + 21.5L * std::log10(d) + 19.0L * std::log10(f);
}

long double ref_nlos_db(InFProfile p, long double d, long double f) {
  const long double los = ref_los_db(d, f);
  const long double sl =
      std::max(33.0L + 25.5L * std::log10(d) + 20.0L * std::log10(f), los);
  switch (p) {
    case InFProfile::SL:
      return sl;
    case InFProfile::DL:
      return std::max(
          {18.6L + 35.7L * std::log10(d) + 20.0L * std::log10(f), los, sl});
    case InFProfile::SH:
      return std::max(32.4L + 23.0L * std::log10(d) + 20.0L * std::log10(f),
                      los);
    case InFProfile::DH:
      return std::max(33.63L + 21.9L * std::log10(d) + 20.0L * std::log10(f),
                      los);
    default:
      throw std::logic_error("no NLOS reference for this profile");
  }
}

void c1(Check& c) {
  Stopwatch sw;
  const InFProfile profiles[] = {InFProfile::SL, InFProfile::DL,
                                 InFProfile::SH, InFProfile::DH,
                                 InFProfile::HH};
  RngStream rng(20260814, "acceptance.pathloss");
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const double d = rng.uniform(1.0, 600.0);
    const double f = rng.uniform(0.5, 100.0);
    const InFProfile p = profiles[i % 5];
    const double los_err = std::fabs(
        pathloss_los_db(d, f) - static_cast<double>(ref_los_db(d, f)));
    worst = std::max(worst, los_err);
    if (p != InFProfile::HH) {
      const double nlos_err =
          std::fabs(pathloss_nlos_db(p, d, f) -
                    static_cast<double>(ref_nlos_db(p, d, f)));
      worst = std::max(worst, nlos_err);
    }
  }
  c.require(worst <= 1e-9,
            strf("max |path loss - reference| = %.3g dB over 1000 tuples "
                 "(tol 1e-9)",
                 worst));
  c.info(strf("max deviation from long-double reference: %.3g dB", worst));

  const double pinned_los = pathloss_los_db(100.0, 5.9);
  c.require(std::fabs(pinned_los - 89.486188221200749) <= 1e-9,
            strf("LOS at 100 m / 5.9 GHz = %.17g, want 89.486188221200749",
                 pinned_los));
  const double pinned_dl = pathloss_nlos_db(InFProfile::DL, 100.0, 5.9);
  c.require(std::fabs(pinned_dl - 105.41704023284288) <= 1e-9,
            strf("dense-low NLOS at 100 m / 5.9 GHz = %.17g, want "
                 "105.41704023284288",
                 pinned_dl));

  const double t = sw.elapsed_s();
  c.require(t < 1.0, strf("took %.2f s, budget 1 s", t));
}

// ---------------------------------------------------------------------------
// C2: LOS probability pinned points and monotone decay.

void c2(Check& c) {
  Stopwatch sw;
  ChannelConfig base;  // d_clutter 10 m, clutter density 0.2

  const double k = 44.814201177245508;  // -d_clutter / ln(1 - r)
  const double at_k = los_probability(InFProfile::SL, k, base);
  c.require(std::fabs(at_k - std::exp(-1.0)) <= 1e-12,
            strf("Pr(LOS) at d2d = k is %.17g, want exp(-1) = %.17g", at_k,
                 std::exp(-1.0)));
  const double at_30 = los_probability(InFProfile::SL, 30.0, base);
  c.require(std::fabs(at_30 - 0.512) <= 1e-12,
            strf("Pr(LOS) at 30 m = %.17g, want 0.512 exactly", at_30));
  c.require(los_probability(InFProfile::SL, 0.0, base) == 1.0,
            "Pr(LOS) at 0 m must be exactly 1");

  ChannelConfig elevated = base;
  elevated.h_c_m = 6.0;
  elevated.h_bs_m = 8.0;
  elevated.h_ut_m = 1.5;
  const double sh_100 = los_probability(InFProfile::SH, 100.0, elevated);
  c.require(std::fabs(sh_100 - 0.21334601011736218) <= 1e-12,
            strf("elevated sparse profile at 100 m: %.17g, want "
                 "0.21334601011736218",
                 sh_100));

  RngStream rng(20260814, "acceptance.los");
  bool hh_all_one = true;
  for (int i = 0; i < 1000; ++i) {
    if (los_probability(InFProfile::HH, rng.uniform(0.0, 600.0), base) !=
        1.0) {
      hh_all_one = false;
      break;
    }
  }
  c.require(hh_all_one, "both-ends-elevated profile must give Pr(LOS) == 1");

  const InFProfile profiles[] = {InFProfile::SL, InFProfile::DL,
                                 InFProfile::SH, InFProfile::DH,
                                 InFProfile::HH};
  int violations = 0;
  for (int i = 0; i < 10000; ++i) {
    ChannelConfig cfg;
    cfg.d_clutter_m = rng.uniform(1.0, 20.0);
    cfg.clutter_density_r = rng.uniform(0.05, 0.95);
    cfg.h_ut_m = 1.5;
    cfg.h_c_m = rng.uniform(2.0, 10.0);
    cfg.h_bs_m = rng.uniform(2.0, 10.0);
    const InFProfile p = profiles[i % 5];
    const double d_near = rng.uniform(0.0, 600.0);
    const double d_far = d_near + rng.uniform(0.0, 600.0 - d_near);
    if (los_probability(p, d_far, cfg) >
        los_probability(p, d_near, cfg) + 1e-15) {
      ++violations;
    }
  }
  c.require(violations == 0,
            strf("%d monotonicity violations over 10000 random configs",
                 violations));

  const double t = sw.elapsed_s();
  c.require(t < 1.0, strf("took %.2f s, budget 1 s", t));
}

// ---------------------------------------------------------------------------
// C3: shadow-fading sample moments per (profile, LOS state).

void c3(Check& c) {
  Stopwatch sw;
  struct ShadowCase {
    InFProfile p;
    bool los;
    double sigma;
    const char* label;
  };
  const ShadowCase cases[] = {
      {InFProfile::SL, true, 4.0, "sparse-low LOS"},
      {InFProfile::SL, false, 5.7, "sparse-low NLOS"},
      {InFProfile::DL, false, 7.2, "dense-low NLOS"},
      {InFProfile::SH, false, 5.9, "sparse-high NLOS"},
      {InFProfile::DH, false, 4.0, "dense-high NLOS"},
  };
  const ChannelConfig cfg;  // geometry does not affect the draw
  const int n = 100000;
  for (const auto& sc : cases) {
    RngStream rng(20260814, strf("acceptance.shadow.%s", sc.label));
    double sum = 0;
    double sumsq = 0;
    for (int i = 0; i < n; ++i) {
      const LargeScaleState st = make_large_scale(sc.p, sc.los, 100.0, cfg,
                                                  rng);
      sum += st.shadow_db;
      sumsq += st.shadow_db * st.shadow_db;
    }
    const double mean = sum / n;
    const double stddev = std::sqrt(sumsq / n - mean * mean);
    c.require(std::fabs(mean) <= 0.05,
              strf("%s: sample mean %.4f dB, tolerance 0.05", sc.label,
                   mean));
    c.require(std::fabs(stddev / sc.sigma - 1.0) <= 0.02,
              strf("%s: sample std %.4f dB vs sigma %.2f (tol 2%%)",
                   sc.label, stddev, sc.sigma));
  }
  const double t = sw.elapsed_s();
  c.require(t < 5.0, strf("took %.2f s, budget 5 s", t));
}

// ---------------------------------------------------------------------------
// C4: encapsulation and reservation arithmetic, exact.

void c4(Check& c) {
  c.require(encapsulate(1453) == 1507u,
            strf("encapsulate(1453) = %u, want 1507", encapsulate(1453)));

  const double per_62_5ms = stream_data_rate_bps(1507, 0.0625);
  c.require(per_62_5ms == 194560.0,
            strf("per-stream rate for 1507 B every 62.5 ms = %.17g, want "
                 "exactly 194560",
                 per_62_5ms));

  struct SlopeCase {
    int n;
    double per;
    double rate;
  };
  const SlopeCase cases[] = {
      {1, stream_data_rate_bps(1507, 0.060), 1e9},
      {50, stream_data_rate_bps(1507, 0.060), 100e6},
      {50, stream_data_rate_bps(1507, 0.060), 1e9},
      {7, 194560.0, 25e6},
  };
  for (const auto& sc : cases) {
    const CbsSlopes s = compute_slopes(sc.n, sc.per, sc.rate);
    c.require(s.idle_bps == sc.n * sc.per,
              strf("idle slope for %d streams: %.17g, want exactly n*per = "
                   "%.17g",
                   sc.n, s.idle_bps, sc.n * sc.per));
    c.require(s.send_bps == s.idle_bps - sc.rate,
              strf("send slope %.17g != idle - port rate = %.17g", s.send_bps,
                   s.idle_bps - sc.rate));
  }

  const CbsSlopes s50 = compute_slopes(50, stream_data_rate_bps(1507, 0.060),
                                       100e6);
  c.require(s50.idle_bps == 10133333.333333334,
            strf("50-stream idle slope %.17g, want 10133333.333333334",
                 s50.idle_bps));
  c.require(s50.send_bps == -89866666.666666672,
            strf("50-stream send slope %.17g, want -89866666.666666672",
                 s50.send_bps));
}

// ---------------------------------------------------------------------------
// C5: saturated shaped video holds at the reserved rate.

Frame make_port_frame(TrafficClass cls, std::uint64_t seq,
                      std::uint32_t payload, int pcp) {
  Frame f;
  f.ue_id = static_cast<std::uint32_t>(seq % 50);
  f.cls = cls;
  f.direction = Direction::Downlink;
  f.seq = seq;
  f.payload_bytes = payload;
  f.wire_bytes = encapsulate(payload);
  f.pcp = pcp;
  return f;
}

bool records_equal(const EgressRecord& a, const EgressRecord& b) {
  return a.tx_start == b.tx_start && a.tx_end == b.tx_end &&
         a.ue_id == b.ue_id && a.cls == b.cls && a.seq == b.seq &&
         a.eligible_pcp_mask == b.eligible_pcp_mask &&
         a.credit_before == b.credit_before &&
         a.credit_after == b.credit_after && a.queue_wait_s == b.queue_wait_s;
}

void c5(Check& c) {
  Stopwatch sw;
  const CbsSlopes reservation =
      compute_slopes(50, stream_data_rate_bps(1507, 0.060), 100e6);

  auto run_saturated = [&](std::vector<EgressRecord>& trace) {
    Engine engine(5);
    EgressConfig cfg;
    cfg.port_rate_bps = 100e6;
    cfg.video_slopes = reservation;
    cfg.enable_cbs = true;
    EgressPort port(engine, cfg, [](Frame&&) {});
    port.set_trace(&trace);
    for (std::uint64_t i = 0; i < 12000; ++i) {
      port.submit(make_port_frame(TrafficClass::Video, i, 1453, 5));
    }
    for (std::uint64_t i = 0; i < 12000; ++i) {
      port.submit(make_port_frame(TrafficClass::BestEffort, i, 1429, 0));
    }
    engine.run_until(SimTime::from_seconds(10.0));
  };

  std::vector<EgressRecord> trace;
  run_saturated(trace);

  double video_bits = 0;
  std::uint64_t video_frames = 0;
  int negative_credit_starts = 0;
  for (const auto& r : trace) {
    if (r.cls != TrafficClass::Video) continue;
    ++video_frames;
    video_bits += static_cast<double>((r.tx_end - r.tx_start).ns()) * 1e-9 *
                  100e6;
    if (r.credit_before < 0) ++negative_credit_starts;
  }
  const double throughput = video_bits / 10.0;
  c.info(strf("video throughput %.1f bit/s vs idle slope %.1f bit/s "
              "(%llu frames)",
              throughput, reservation.idle_bps,
              static_cast<unsigned long long>(video_frames)));
  c.require(throughput <= reservation.idle_bps * 1.02,
            strf("video throughput %.1f exceeds 1.02 * idle slope %.1f",
                 throughput, reservation.idle_bps * 1.02));
  c.require(throughput >= reservation.idle_bps * 0.90,
            strf("video throughput %.1f below 0.90 * idle slope; shaper "
                 "over-throttles",
                 throughput));
  c.require(negative_credit_starts == 0,
            strf("%d video frames started with negative credit",
                 negative_credit_starts));

  std::vector<EgressRecord> trace2;
  run_saturated(trace2);
  const bool same = trace.size() == trace2.size() &&
                    std::equal(trace.begin(), trace.end(), trace2.begin(),
                               records_equal);
  c.require(same, "two identical saturated runs produced different traces");

  // Trace replay of the credit rules at a one-stream reservation: the gate
  // delay after a full drain and the reset of recovered credit to zero.
  const CbsSlopes one = compute_slopes(1, stream_data_rate_bps(1507, 0.060),
                                       100e6);
  Engine engine(7);
  EgressConfig cfg;
  cfg.port_rate_bps = 100e6;
  cfg.video_slopes = one;
  cfg.enable_cbs = true;
  std::vector<EgressRecord> replay;
  EgressPort port(engine, cfg, [](Frame&&) {});
  port.set_trace(&replay);
  port.submit(make_port_frame(TrafficClass::Video, 0, 1453, 5));
  port.submit(make_port_frame(TrafficClass::Video, 1, 1453, 5));
  engine.schedule(SimTime::from_seconds(4.0), [&port] {
    port.submit(make_port_frame(TrafficClass::Video, 2, 1453, 5));
  });
  engine.run_until_idle(SimTime::from_seconds(10.0));

  c.require(replay.size() == 3,
            strf("replay produced %zu records, want 3", replay.size()));
  if (replay.size() == 3) {
    c.require(replay[0].tx_start.ns() == 0 && replay[0].tx_end.ns() == 120560,
              strf("first frame on wire [%lld, %lld] ns, want [0, 120560]",
                   static_cast<long long>(replay[0].tx_start.ns()),
                   static_cast<long long>(replay[0].tx_end.ns())));
    c.require(std::fabs(replay[0].credit_after - (-12031.566506666668)) <=
                  1e-9,
              strf("credit after first frame %.17g, want -12031.566506666668",
                   replay[0].credit_after));
    const std::int64_t want_start = 120560 + 59366283;
    c.require(replay[1].tx_start.ns() == want_start,
              strf("gated frame started at %lld ns, want %lld (previous end "
                   "+ ceil(-credit/idle))",
                   static_cast<long long>(replay[1].tx_start.ns()),
                   static_cast<long long>(want_start)));
    c.require(replay[1].credit_before >= 0.0 &&
                  replay[1].credit_before < 0.01,
              strf("credit at gate opening %.17g, want tiny non-negative",
                   replay[1].credit_before));
    c.require(replay[2].credit_before == 0.0,
              strf("credit after a long idle gap %.17g, want exactly 0 "
                   "(reset rule)",
                   replay[2].credit_before));
    c.require(replay[2].tx_start.ns() == 4000000000LL &&
                  replay[2].queue_wait_s == 0.0,
              "frame arriving at an idle shaped queue must start "
              "immediately");
  }

  const double t = sw.elapsed_s();
  c.require(t < 10.0, strf("took %.2f s, budget 10 s", t));
}

// ---------------------------------------------------------------------------
// C6: strict priority with shaping orders the per-class delays.

void c6(Check& c) {
  Engine engine(11);
  EgressConfig cfg;
  cfg.port_rate_bps = 100e6;
  cfg.video_slopes = compute_slopes(50, stream_data_rate_bps(1507, 0.060),
                                    100e6);
  cfg.enable_cbs = true;
  std::vector<EgressRecord> trace;
  EgressPort port(engine, cfg, [](Frame&&) {});
  port.set_trace(&trace);

  RngStream arrivals(20260814, "acceptance.priority.arrivals");
  std::uint64_t scheduled = 0;
  auto schedule_class = [&](TrafficClass cls, int count, double mean_gap_s,
                            std::uint32_t payload, int pcp) {
    double t = 0;
    for (int i = 0; i < count; ++i) {
      t += arrivals.exponential(mean_gap_s);
      Frame f = make_port_frame(cls, static_cast<std::uint64_t>(i), payload,
                                pcp);
      f.generated_at = SimTime::from_seconds(t);
      engine.schedule(f.generated_at, [&port, f] { port.submit(f); });
      ++scheduled;
    }
  };
  // Control plane light, shaped video near its reservation, bulk class
  // saturating the port.
  schedule_class(TrafficClass::NetworkControl, 800, 1.2e-3, 498, 7);
  schedule_class(TrafficClass::Video, 700, 1.25e-3, 1453, 5);
  schedule_class(TrafficClass::BestEffort, 8500, 1.0e-4, 1429, 0);

  engine.run_until_idle(SimTime::from_seconds(120.0));
  c.require(engine.queue_empty(), "load did not drain");
  c.require(trace.size() == scheduled,
            strf("%zu trace records for %llu arrivals", trace.size(),
                 static_cast<unsigned long long>(scheduled)));

  std::uint64_t priority_violations = 0;
  std::map<TrafficClass, std::vector<double>> waits;
  for (const auto& r : trace) {
    const int pcp = cfg.pcp.pcp_for(r.cls);
    const unsigned mask = r.eligible_pcp_mask;
    if ((mask & (1u << pcp)) == 0) ++priority_violations;
    if ((mask >> (pcp + 1)) != 0) ++priority_violations;
    waits[r.cls].push_back(r.queue_wait_s);
  }
  c.require(priority_violations == 0,
            strf("%llu transmissions while a strictly higher-priority head "
                 "was eligible",
                 static_cast<unsigned long long>(priority_violations)));

  auto p99 = [&](TrafficClass cls) {
    auto& v = waits[cls];
    std::sort(v.begin(), v.end());
    return nearest_rank_percentile(v, 99.0);
  };
  const double nc = p99(TrafficClass::NetworkControl);
  const double video = p99(TrafficClass::Video);
  const double be = p99(TrafficClass::BestEffort);
  c.info(strf("p99 queueing delay: control %.6f s < video %.6f s < bulk "
              "%.6f s",
              nc, video, be));
  c.require(nc < video,
            strf("control p99 %.6f s not below video p99 %.6f s", nc, video));
  c.require(video < be,
            strf("video p99 %.6f s not below bulk p99 %.6f s", video, be));
}

// ---------------------------------------------------------------------------
// C7: retransmission chain under a forced per-attempt error rate.

void c7(Check& c) {
  RngStream rng(20260814, "acceptance.harq");
  const int blocks = 1000000;
  std::uint64_t attempts = 0;
  std::uint64_t failures = 0;
  std::uint64_t delivered = 0;
  std::uint64_t lost = 0;
  for (int b = 0; b < blocks; ++b) {
    HarqProcess proc;
    for (;;) {
      const HarqOutcome out = harq_attempt(proc, 0.1, rng);
      ++attempts;
      if (out == HarqOutcome::Delivered) {
        ++delivered;
        break;
      }
      ++failures;
      if (out == HarqOutcome::Lost) {
        ++lost;
        break;
      }
    }
  }
  c.require(delivered + lost == static_cast<std::uint64_t>(blocks),
            "every block must end delivered or lost");
  c.info(strf("lost %llu of 1e6 blocks; failure fraction %.6f",
              static_cast<unsigned long long>(lost),
              static_cast<double>(failures) / static_cast<double>(attempts)));
  c.require(lost >= 70 && lost <= 130,
            strf("residual loss count %llu outside 3-sigma band [70, 130] "
                 "around 100",
                 static_cast<unsigned long long>(lost)));
  const double rate =
      static_cast<double>(failures) / static_cast<double>(attempts);
  c.require(std::fabs(rate - 0.1) <= 0.004,
            strf("per-attempt failure fraction %.6f outside 0.1 +/- 0.004",
                 rate));
}

// ---------------------------------------------------------------------------
// C8: 4 profiles x {5, 10, 25, 50} users, 10 s cells, fixed seeds.

struct C8Grid {
  std::map<std::pair<InFProfile, int>, Summary> cells;
  double max_cell_s = 0;
  double total_s = 0;
};

const std::vector<int>& c8_counts() {
  static const std::vector<int> counts = {5, 10, 25, 50};
  return counts;
}

const std::vector<InFProfile>& c8_profiles() {
  static const std::vector<InFProfile> profiles = {
      InFProfile::SL, InFProfile::DL, InFProfile::SH, InFProfile::DH};
  return profiles;
}

const C8Grid& c8_grid() {
  static const C8Grid grid = [] {
    C8Grid g;
    const RegionSpec region = parse_region("d2");
    Stopwatch total;
    for (const InFProfile p : c8_profiles()) {
      for (const int ues : c8_counts()) {
        ScenarioConfig cfg = default_scenario_config(p);
        cfg.ues = ues;
        cfg.region = region;
        cfg.duration_s = 10.0;
        cfg.warmup_exclusion_s = 1.0;
        cfg.seed = cell_seed(8, p, ues, region, 0);
        Stopwatch cell;
        RunOutput out = run_scenario(cfg);
        g.max_cell_s = std::max(g.max_cell_s, cell.elapsed_s());
        g.cells.emplace(std::make_pair(p, ues), std::move(out.summary));
      }
    }
    g.total_s = total.elapsed_s();
    return g;
  }();
  return grid;
}

void require_grid_budget(Check& c, const C8Grid& grid) {
  c.info(strf("grid wall time %.1f s total, slowest cell %.1f s",
              grid.total_s, grid.max_cell_s));
  c.require(grid.max_cell_s < 60.0,
            strf("slowest cell took %.1f s, budget 60 s", grid.max_cell_s));
  c.require(grid.total_s < 900.0,
            strf("full grid took %.1f s, budget 900 s", grid.total_s));
}

void c8a(Check& c) {
  const C8Grid& grid = c8_grid();
  require_grid_budget(c, grid);
  for (const int ues : c8_counts()) {
    const Summary& sl = grid.cells.at({InFProfile::SL, ues});
    const Summary& dh = grid.cells.at({InFProfile::DH, ues});
    const bool have = sl.sinr.count(Direction::Downlink) &&
                      dh.sinr.count(Direction::Downlink);
    c.require(have, strf("%d users: missing downlink SINR summary", ues));
    if (!have) continue;
    const double m_sl = sl.sinr.at(Direction::Downlink).mean;
    const double m_dh = dh.sinr.at(Direction::Downlink).mean;
    c.info(strf("%2d users: mean DL SINR sparse-low %.2f dB, dense-high "
                "%.2f dB",
                ues, m_sl, m_dh));
    c.require(m_sl > m_dh,
              strf("%d users: sparse-low mean DL SINR %.2f dB not above "
                   "dense-high %.2f dB",
                   ues, m_sl, m_dh));
  }
}

void c8b(Check& c) {
  const C8Grid& grid = c8_grid();
  require_grid_budget(c, grid);
  for (const int ues : c8_counts()) {
    double err[4] = {0, 0, 0, 0};
    bool have = true;
    const InFProfile order[4] = {InFProfile::SL, InFProfile::DL,
                                 InFProfile::SH, InFProfile::DH};
    for (int i = 0; i < 4; ++i) {
      const Summary& s = grid.cells.at({order[i], ues});
      const auto it = s.harq.find(Direction::Downlink);
      if (it == s.harq.end() || !it->second.error_rate()) {
        have = false;
        break;
      }
      err[i] = *it->second.error_rate();
    }
    c.require(have, strf("%d users: missing downlink decode-error counters",
                         ues));
    if (!have) continue;
    c.info(strf("%2d users: DL error rate SL %.4f, DL %.4f, SH %.4f, DH "
                "%.4f",
                ues, err[0], err[1], err[2], err[3]));
    for (int hi = 2; hi < 4; ++hi) {
      for (int lo = 0; lo < 2; ++lo) {
        c.require(err[hi] >= err[lo],
                  strf("%d users: elevated profile %d error rate %.4f below "
                       "low profile %d rate %.4f",
                       ues, hi, err[hi], lo, err[lo]));
      }
    }
  }
}

void c8c(Check& c) {
  const C8Grid& grid = c8_grid();
  require_grid_budget(c, grid);
  const TrafficClass classes[] = {TrafficClass::NetworkControl,
                                  TrafficClass::Video,
                                  TrafficClass::BestEffort};
  const Direction dirs[] = {Direction::Downlink, Direction::Uplink};
  for (const InFProfile p : c8_profiles()) {
    for (const TrafficClass cls : classes) {
      for (const Direction dir : dirs) {
        double prev = -1.0;
        int prev_ues = 0;
        for (const int ues : c8_counts()) {
          const Summary& s = grid.cells.at({p, ues});
          const auto it = s.delay.find({cls, dir});
          c.require(it != s.delay.end(),
                    strf("%s %s %s: no delay samples at %d users",
                         profile_name(p), traffic_class_name(cls),
                         direction_name(dir), ues));
          if (it == s.delay.end()) break;
          const double p99 = it->second.p99;
          if (prev >= 0.0) {
            c.require(p99 >= prev,
                      strf("%s %s %s: p99 %.6f s at %d users dropped below "
                           "%.6f s at %d users",
                           profile_name(p), traffic_class_name(cls),
                           direction_name(dir), p99, ues, prev, prev_ues));
          }
          prev = p99;
          prev_ues = ues;
        }
      }
    }
  }
  // One representative chain for the record.
  const auto key = std::make_pair(TrafficClass::Video, Direction::Downlink);
  std::string line = "video DL p99 chain (sparse-low):";
  for (const int ues : c8_counts()) {
    const Summary& s = grid.cells.at({InFProfile::SL, ues});
    const auto it = s.delay.find(key);
    if (it != s.delay.end()) {
      line += strf(" %d:%.6fs", ues, it->second.p99);
    }
  }
  c.info(line);
}

// ---------------------------------------------------------------------------
// C9: byte-identical reruns and sweep cell independence.

std::string all_csvs(const RunOutput& out) {
  std::ostringstream os;
  write_delay_csv(os, out.metrics);
  write_sinr_csv(os, out.metrics);
  write_harq_csv(os, out.metrics);
  write_summary_csv(os, out.summary);
  return os.str();
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void c9(Check& c) {
  ScenarioConfig cfg = default_scenario_config(InFProfile::SL);
  cfg.ues = 3;
  cfg.duration_s = 1.0;
  cfg.warmup_exclusion_s = 0.2;
  cfg.seed = 99;
  const RunOutput a = run_scenario(cfg);
  const RunOutput b = run_scenario(cfg);
  const std::string csv_a = all_csvs(a);
  const std::string csv_b = all_csvs(b);
  c.require(csv_a.size() > 200, "rerun comparison covers a trivial run");
  c.require(csv_a == csv_b,
            "identical config and seed produced different CSV bytes");

  SweepConfig sweep;
  sweep.profiles = {InFProfile::SL};
  sweep.ue_counts = {2, 3};
  sweep.regions = {parse_region("d1")};
  sweep.repetitions = 1;
  sweep.master_seed = 424242;
  sweep.duration_s = 0.8;
  sweep.warmup_exclusion_s = 0.0;
  validate(sweep);

  const SweepResult r1 = run_sweep(sweep, 1);
  const SweepResult r2 = run_sweep(sweep, 2);
  c.require(r1.all_ok && r2.all_ok, "sweep cells failed");
  c.require(grid_csv(r1) == grid_csv(r2),
            "grid depends on the parallel job count");

  const fs::path out = fs::temp_directory_path() / "inftsn_acceptance_c9";
  fs::remove_all(out);
  const SweepResult r3 = run_sweep(sweep, 1, out);
  c.require(r3.all_ok, "sweep with an output directory failed");
  c.require(grid_csv(r3) == grid_csv(r1),
            "writing CSVs changed the sweep results");

  const std::string cell = "InF-SL_3_d1_0";
  const std::string summary_before = read_file(out / cell / "summary.csv");
  const std::string delay_before = read_file(out / cell / "delay.csv");
  c.require(!summary_before.empty() && !delay_before.empty(),
            "sweep did not write the per-cell CSVs");

  fs::remove_all(out / cell);
  c.require(!fs::exists(out / cell), "cell directory still present");

  // Rebuild just that cell from its grid coordinates and compare bytes.
  const ScenarioConfig cc =
      cell_config(sweep, InFProfile::SL, 3, sweep.regions[0], 0);
  const RunOutput rerun = run_scenario(cc);
  export_csvs(out / cell, rerun.metrics, rerun.summary);
  c.require(read_file(out / cell / "summary.csv") == summary_before,
            "re-run of a deleted cell changed summary.csv");
  c.require(read_file(out / cell / "delay.csv") == delay_before,
            "re-run of a deleted cell changed delay.csv");
  fs::remove_all(out);
}

// ---------------------------------------------------------------------------

struct Criterion {
  const char* key;
  const char* label;
  const char* title;
  void (*fn)(Check&);
};

const Criterion kCriteria[] = {
    {"c1", "C1", "path loss matches an independent high-precision reference",
     c1},
    {"c2", "C2", "line-of-sight probability: pinned points and monotone "
                 "decay",
     c2},
    {"c3", "C3", "shadow-fading draws reproduce the per-profile sigmas", c3},
    {"c4", "C4", "encapsulation and reservation arithmetic are exact", c4},
    {"c5", "C5", "saturated shaped video holds at the reserved rate", c5},
    {"c6", "C6", "strict priority and shaping order the per-class delays",
     c6},
    {"c7", "C7", "retransmission chain reproduces forced error statistics",
     c7},
    {"c8a", "C8a", "sparse-low beats dense-high on mean downlink SINR", c8a},
    {"c8b", "C8b", "elevated-antenna error rates dominate low-antenna ones",
     c8b},
    {"c8c", "C8c", "per-class p99 delay is non-decreasing in user count",
     c8c},
    {"c9", "C9", "byte-identical reruns and sweep cell independence", c9},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<const Criterion*> selected;
  if (argc <= 1) {
    for (const auto& cr : kCriteria) selected.push_back(&cr);
  } else {
    for (int i = 1; i < argc; ++i) {
      const Criterion* found = nullptr;
      for (const auto& cr : kCriteria) {
        if (std::string(argv[i]) == cr.key) {
          found = &cr;
          break;
        }
      }
      if (!found) {
        std::fprintf(stderr, "unknown criterion '%s'; known:", argv[i]);
        for (const auto& cr : kCriteria) std::fprintf(stderr, " %s", cr.key);
        std::fprintf(stderr, "\n");
        return 2;
      }
      selected.push_back(found);
    }
  }

  bool any_fail = false;
  for (const Criterion* cr : selected) {
    Check check;
    try {
      cr->fn(check);
    } catch (const std::exception& e) {
      check.require(false, strf("unhandled exception: %s", e.what()));
    }
    std::printf("[%s] %s %s\n", check.ok ? "PASS" : "FAIL", cr->label,
                cr->title);
    for (const std::string& note : check.notes) {
      std::printf("       %s\n", note.c_str());
    }
    std::fflush(stdout);
    if (!check.ok) any_fail = true;
  }
  return any_fail ? 1 : 0;
}
