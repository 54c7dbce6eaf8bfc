#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "inftsn/sim/config.hpp"
#include "inftsn/sim/scenario.hpp"

namespace inftsn {

struct CellResult {
  std::string name;
  InFProfile profile = InFProfile::SL;
  int ues = 0;
  RegionSpec region{};
  int rep = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;  // set when !ok
  Summary summary;
  ScenarioStats stats;
};

struct SweepResult {
  std::vector<CellResult> cells;  // profiles x ues x regions x reps order
  bool all_ok = false;
};

// Runs every cell of the grid, up to `jobs` cells in parallel. Cells are
// seeded independently, so results do not depend on the job count. With an
// output directory set, each cell's CSVs land in <out>/<cell name>/ and the
// grid rollup in <out>/grid.csv. A failed cell is recorded, not thrown.
SweepResult run_sweep(
    const SweepConfig& cfg, int jobs = 1,
    const std::optional<std::filesystem::path>& out_dir = std::nullopt);

// One row per cell, sorted by cell name.
std::string grid_csv(const SweepResult& result);

}  // namespace inftsn
