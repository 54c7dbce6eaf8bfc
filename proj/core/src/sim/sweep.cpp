#include "inftsn/sim/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "inftsn/metrics/csv.hpp"

namespace inftsn {

SweepResult run_sweep(const SweepConfig& cfg, int jobs,
                      const std::optional<std::filesystem::path>& out_dir) {
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  validate(cfg);

  struct Coord {
    InFProfile profile;
    int ues;
    RegionSpec region;
    int rep;
  };
  std::vector<Coord> coords;
  for (InFProfile p : cfg.profiles) {
    for (int u : cfg.ue_counts) {
      for (const RegionSpec& r : cfg.regions) {
        for (int rep = 0; rep < cfg.repetitions; ++rep) {
          coords.push_back({p, u, r, rep});
        }
      }
    }
  }

  SweepResult result;
  result.cells.resize(coords.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= coords.size()) return;
      const Coord& co = coords[i];
      CellResult& cell = result.cells[i];
      cell.name = cell_name(co.profile, co.ues, co.region, co.rep);
      cell.profile = co.profile;
      cell.ues = co.ues;
      cell.region = co.region;
      cell.rep = co.rep;
      cell.seed = cell_seed(cfg.master_seed, co.profile, co.ues, co.region,
                            co.rep);
      try {
        const ScenarioConfig sc =
            cell_config(cfg, co.profile, co.ues, co.region, co.rep);
        RunOutput out = run_scenario(sc);
        cell.summary = std::move(out.summary);
        cell.stats = out.stats;
        if (out_dir) {
          export_csvs(*out_dir / cell.name, out.metrics, cell.summary);
        }
        cell.ok = true;
      } catch (const std::exception& e) {
        cell.ok = false;
        cell.error = e.what();
      }
    }
  };

  const int nthreads =
      std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(
                              1, coords.size())));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  result.all_ok = std::all_of(result.cells.begin(), result.cells.end(),
                              [](const CellResult& c) { return c.ok; });

  if (out_dir) {
    std::filesystem::create_directories(*out_dir);
    std::ofstream f(*out_dir / "grid.csv", std::ios::binary);
    if (!f) {
      throw std::runtime_error("cannot open output file: " +
                               (*out_dir / "grid.csv").string());
    }
    f << grid_csv(result);
  }
  return result;
}

namespace {

std::string dist_p99_cell(const Summary& s, TrafficClass cls, Direction dir) {
  auto it = s.delay.find({cls, dir});
  return it == s.delay.end() ? std::string() : format_g9(it->second.p99);
}

std::string sinr_mean_cell(const Summary& s, Direction dir) {
  auto it = s.sinr.find(dir);
  return it == s.sinr.end() ? std::string() : format_g9(it->second.mean);
}

std::string harq_rate_cell(const Summary& s, Direction dir) {
  auto it = s.harq.find(dir);
  if (it == s.harq.end()) return {};
  auto rate = it->second.error_rate();
  return rate ? format_g9(*rate) : std::string();
}

}  // namespace

std::string grid_csv(const SweepResult& result) {
  std::vector<const CellResult*> rows;
  rows.reserve(result.cells.size());
  for (const auto& c : result.cells) rows.push_back(&c);
  std::sort(rows.begin(), rows.end(),
            [](const CellResult* a, const CellResult* b) {
              return a->name < b->name;
            });

  std::ostringstream os;
  os << "cell,profile,ues,region,rep,seed,status,"
        "sinr_dl_mean,sinr_ul_mean,harq_dl_error_rate,harq_ul_error_rate,"
        "delay_nc_dl_p99,delay_video_dl_p99,delay_be_dl_p99,"
        "delay_nc_ul_p99,delay_video_ul_p99,delay_be_ul_p99,"
        "generated,delivered,dropped\n";
  for (const CellResult* c : rows) {
    os << c->name << ',' << profile_name(c->profile) << ',' << c->ues << ','
       << c->region.label() << ',' << c->rep << ',' << c->seed << ','
       << (c->ok ? "ok" : "error") << ',';
    if (c->ok) {
      const Summary& s = c->summary;
      std::uint64_t gen = 0, del = 0, drop = 0;
      for (const auto& [key, fc] : s.frames) {
        gen += fc.generated;
        del += fc.delivered;
        drop += fc.dropped;
      }
      os << sinr_mean_cell(s, Direction::Downlink) << ','
         << sinr_mean_cell(s, Direction::Uplink) << ','
         << harq_rate_cell(s, Direction::Downlink) << ','
         << harq_rate_cell(s, Direction::Uplink) << ','
         << dist_p99_cell(s, TrafficClass::NetworkControl, Direction::Downlink)
         << ','
         << dist_p99_cell(s, TrafficClass::Video, Direction::Downlink) << ','
         << dist_p99_cell(s, TrafficClass::BestEffort, Direction::Downlink)
         << ','
         << dist_p99_cell(s, TrafficClass::NetworkControl, Direction::Uplink)
         << ','
         << dist_p99_cell(s, TrafficClass::Video, Direction::Uplink) << ','
         << dist_p99_cell(s, TrafficClass::BestEffort, Direction::Uplink)
         << ',' << gen << ',' << del << ',' << drop << '\n';
    } else {
      os << ",,,,,,,,,,,,\n";
    }
  }
  return os.str();
}

}  // namespace inftsn
