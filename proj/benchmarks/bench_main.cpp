// Microbenchmarks for the hot paths: event queue, channel math, shaped
// egress, and a small end-to-end cell.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "inftsn/channel/channel.hpp"
#include "inftsn/engine/engine.hpp"
#include "inftsn/engine/rng.hpp"
#include "inftsn/sim/config.hpp"
#include "inftsn/sim/scenario.hpp"
#include "inftsn/tsn/cbs.hpp"
#include "inftsn/tsn/egress.hpp"

namespace {

using namespace inftsn;

void BM_EngineScheduleRun(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Engine engine(1);
    std::uint64_t sum = 0;
    for (int i = 0; i < n; ++i) {
      engine.schedule(SimTime::from_ns(static_cast<std::int64_t>(i) * 1000),
                      [&sum, i] { sum += static_cast<std::uint64_t>(i); });
    }
    engine.run_until_idle(SimTime::from_seconds(1.0));
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_EngineScheduleRun)->Arg(1000)->Arg(10000);

void BM_RngNormal(benchmark::State& state) {
  RngStream rng(1, "bench.normal");
  double acc = 0;
  for (auto _ : state) {
    acc += rng.normal(0.0, 1.0);
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_RngNormal);

void BM_PathlossNlos(benchmark::State& state) {
  double d = 1.0;
  double acc = 0;
  for (auto _ : state) {
    acc += pathloss_nlos_db(InFProfile::DL, d, 5.9);
    d += 0.37;
    if (d > 600.0) d = 1.0;
  }
  benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_PathlossNlos);

void BM_ShapedEgress(benchmark::State& state) {
  const int frames = static_cast<int>(state.range(0));
  const CbsSlopes slopes =
      compute_slopes(50, stream_data_rate_bps(1507, 0.060), 100e6);
  for (auto _ : state) {
    Engine engine(1);
    EgressConfig cfg;
    cfg.port_rate_bps = 100e6;
    cfg.video_slopes = slopes;
    cfg.enable_cbs = true;
    std::uint64_t delivered = 0;
    EgressPort port(engine, cfg, [&delivered](Frame&&) { ++delivered; });
    for (int i = 0; i < frames; ++i) {
      Frame f;
      f.cls = (i % 2) ? TrafficClass::Video : TrafficClass::BestEffort;
      f.pcp = (i % 2) ? 5 : 0;
      f.seq = static_cast<std::uint64_t>(i);
      f.payload_bytes = 1453;
      f.wire_bytes = encapsulate(1453);
      port.submit(std::move(f));
    }
    engine.run_until_idle(SimTime::from_seconds(60.0));
    benchmark::DoNotOptimize(delivered);
  }
  state.SetItemsProcessed(state.iterations() * frames);
}
BENCHMARK(BM_ShapedEgress)->Arg(1000);

void BM_SmallCell(benchmark::State& state) {
  ScenarioConfig cfg = default_scenario_config(InFProfile::SL);
  cfg.ues = 2;
  cfg.duration_s = 0.5;
  cfg.warmup_exclusion_s = 0.0;
  cfg.seed = 1;
  for (auto _ : state) {
    RunOutput out = run_scenario(cfg);
    benchmark::DoNotOptimize(out.stats.events_fired);
  }
}
BENCHMARK(BM_SmallCell)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
