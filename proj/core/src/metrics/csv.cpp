#include "inftsn/metrics/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace inftsn {

std::string format_g9(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

void write_delay_csv(std::ostream& os, const MetricsStore& store) {
  os << "time_s,ue_id,class,direction,delay_s\n";
  std::vector<DelaySample> rows = store.delay_samples();
  std::stable_sort(rows.begin(), rows.end(),
                   [](const DelaySample& a, const DelaySample& b) {
                     if (a.time_s != b.time_s) return a.time_s < b.time_s;
                     return a.ue_id < b.ue_id;
                   });
  for (const auto& r : rows) {
    os << format_g9(r.time_s) << ',' << r.ue_id << ','
       << traffic_class_name(r.cls) << ',' << direction_name(r.direction)
       << ',' << format_g9(r.delay_s) << '\n';
  }
}

void write_sinr_csv(std::ostream& os, const MetricsStore& store) {
  os << "time_s,ue_id,direction,sinr_db\n";
  std::vector<SinrSample> rows = store.sinr_samples();
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SinrSample& a, const SinrSample& b) {
                     if (a.time_s != b.time_s) return a.time_s < b.time_s;
                     return a.ue_id < b.ue_id;
                   });
  for (const auto& r : rows) {
    os << format_g9(r.time_s) << ',' << r.ue_id << ','
       << direction_name(r.direction) << ',' << format_g9(r.sinr_db) << '\n';
  }
}

void write_harq_csv(std::ostream& os, const MetricsStore& store) {
  os << "direction,transmissions,failures,error_rate\n";
  for (const auto& [dir, c] : store.harq_counters()) {
    os << direction_name(dir) << ',' << c.transmissions << ',' << c.failures
       << ',';
    if (auto rate = c.error_rate()) os << format_g9(*rate);
    os << '\n';
  }
}

void write_summary_csv(std::ostream& os, const Summary& summary) {
  os << "family,class,direction,count,mean,p50,p95,p99,max,q1,q3,"
        "transmissions,failures,error_rate,generated,delivered,dropped\n";

  auto dist_cells = [](const DistSummary& d) {
    std::string s;
    s += std::to_string(d.count);
    s += ',' + format_g9(d.mean) + ',' + format_g9(d.p50) + ',' +
         format_g9(d.p95) + ',' + format_g9(d.p99) + ',' + format_g9(d.max) +
         ',' + format_g9(d.q1) + ',' + format_g9(d.q3);
    return s;
  };

  for (const auto& [key, d] : summary.delay) {
    os << "delay," << traffic_class_name(key.first) << ','
       << direction_name(key.second) << ',' << dist_cells(d) << ",,,,,,\n";
  }
  for (const auto& [dir, d] : summary.sinr) {
    os << "sinr,," << direction_name(dir) << ',' << dist_cells(d)
       << ",,,,,,\n";
  }
  for (const auto& [dir, c] : summary.harq) {
    os << "harq,," << direction_name(dir) << ",,,,,,,,," << c.transmissions
       << ',' << c.failures << ',';
    if (auto rate = c.error_rate()) os << format_g9(*rate);
    os << ",,,\n";
  }
  for (const auto& [key, c] : summary.frames) {
    os << "frames," << traffic_class_name(key.first) << ','
       << direction_name(key.second) << ",,,,,,,,,,,," << c.generated << ','
       << c.delivered << ',' << c.dropped << '\n';
  }
}

void export_csvs(const std::filesystem::path& dir, const MetricsStore& store,
                 const Summary& summary) {
  std::filesystem::create_directories(dir);
  auto open = [&](const char* name) {
    std::ofstream f(dir / name, std::ios::binary);
    if (!f) {
      throw std::runtime_error("cannot open output file: " +
                               (dir / name).string());
    }
    return f;
  };
  {
    auto f = open("delay.csv");
    write_delay_csv(f, store);
  }
  {
    auto f = open("sinr.csv");
    write_sinr_csv(f, store);
  }
  {
    auto f = open("harq.csv");
    write_harq_csv(f, store);
  }
  {
    auto f = open("summary.csv");
    write_summary_csv(f, summary);
  }
}

}  // namespace inftsn
