#pragma once

#include <filesystem>
#include <ostream>
#include <string>

#include "inftsn/metrics/metrics.hpp"

namespace inftsn {

// Shortest round-trippable-ish decimal: printf %.9g.
std::string format_g9(double v);

// Sample rows sorted by (time, ue id), ties in insertion order; headers
// first; every row newline-terminated.
void write_delay_csv(std::ostream& os, const MetricsStore& store);
void write_sinr_csv(std::ostream& os, const MetricsStore& store);
void write_harq_csv(std::ostream& os, const MetricsStore& store);

// Wide per-run rollup: one row per populated (family, class, direction)
// with the columns that family fills, the rest left empty.
void write_summary_csv(std::ostream& os, const Summary& summary);

// Writes delay.csv, sinr.csv, harq.csv, summary.csv into dir (created if
// missing).
void export_csvs(const std::filesystem::path& dir, const MetricsStore& store,
                 const Summary& summary);

}  // namespace inftsn
