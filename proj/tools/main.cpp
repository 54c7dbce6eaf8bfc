// Command-line front end: run one scenario, run a sweep grid, or print the
// fully resolved configuration.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "inftsn/metrics/csv.hpp"
#include "inftsn/sim/config.hpp"
#include "inftsn/sim/scenario.hpp"
#include "inftsn/sim/sweep.hpp"

namespace {

using namespace inftsn;

RegionSpec region_from_arg(const std::string& arg) {
  char* end = nullptr;
  const double radius = std::strtod(arg.c_str(), &end);
  if (end && *end == '\0' && end != arg.c_str()) {
    return region_from_radius(radius);
  }
  return parse_region(arg);
}

struct ScenarioFlags {
  std::string config_path;
  std::string profile = "InF-SL";
  std::optional<int> ues;
  std::optional<std::string> region;
  std::optional<std::uint64_t> seed;
  std::optional<double> duration_s;
  std::optional<double> warmup_s;
};

ScenarioConfig resolve_scenario(const ScenarioFlags& f, bool profile_given) {
  ScenarioConfig cfg;
  if (!f.config_path.empty()) {
    if (profile_given) {
      throw ConfigError(
          "--profile conflicts with --config; set the profile in the file");
    }
    ParsedConfig parsed = parse_config_file(f.config_path);
    if (auto* sweep = std::get_if<SweepConfig>(&parsed)) {
      (void)sweep;
      throw ConfigError("config file defines a sweep; use the sweep command");
    }
    cfg = std::get<ScenarioConfig>(parsed);
  } else {
    cfg = default_scenario_config(parse_profile(f.profile));
  }
  if (f.ues) cfg.ues = *f.ues;
  if (f.region) cfg.region = region_from_arg(*f.region);
  if (f.seed) cfg.seed = *f.seed;
  if (f.duration_s) cfg.duration_s = *f.duration_s;
  if (f.warmup_s) cfg.warmup_exclusion_s = *f.warmup_s;
  validate(cfg);
  return cfg;
}

void print_summary(const ScenarioConfig& cfg, const RunOutput& out) {
  std::printf("profile %s, %d users, region %s, seed %llu\n",
              profile_name(cfg.profile), cfg.ues, cfg.region.label().c_str(),
              static_cast<unsigned long long>(cfg.seed));
  std::printf("duration %s s, warmup exclusion %s s\n",
              format_g9(cfg.duration_s).c_str(),
              format_g9(cfg.warmup_exclusion_s).c_str());

  std::printf("\n%-6s %-3s %9s %12s %12s %12s %12s\n", "class", "dir",
              "count", "mean_s", "p50_s", "p99_s", "max_s");
  for (const auto& [key, d] : out.summary.delay) {
    std::printf("%-6s %-3s %9zu %12s %12s %12s %12s\n",
                traffic_class_name(key.first), direction_name(key.second),
                d.count, format_g9(d.mean).c_str(), format_g9(d.p50).c_str(),
                format_g9(d.p99).c_str(), format_g9(d.max).c_str());
  }

  for (const auto& [dir, d] : out.summary.sinr) {
    std::printf("\nsinr   %-3s %9zu mean %s dB, p50 %s dB", direction_name(dir),
                d.count, format_g9(d.mean).c_str(), format_g9(d.p50).c_str());
  }
  std::printf("\n");
  for (const auto& [dir, h] : out.summary.harq) {
    std::printf("harq   %-3s %9llu transmissions, %llu failed",
                direction_name(dir),
                static_cast<unsigned long long>(h.transmissions),
                static_cast<unsigned long long>(h.failures));
    if (h.error_rate()) {
      std::printf(", error rate %s", format_g9(*h.error_rate()).c_str());
    }
    std::printf("\n");
  }
  for (const auto& [key, fc] : out.summary.frames) {
    std::printf("frames %-5s %-3s generated %llu, delivered %llu, dropped "
                "%llu\n",
                traffic_class_name(key.first), direction_name(key.second),
                static_cast<unsigned long long>(fc.generated),
                static_cast<unsigned long long>(fc.delivered),
                static_cast<unsigned long long>(fc.dropped));
  }
  std::printf("\nevents fired %llu, mobility legs %llu, teardown drops "
              "%llu radio + %llu port\n",
              static_cast<unsigned long long>(out.stats.events_fired),
              static_cast<unsigned long long>(out.stats.legs_completed),
              static_cast<unsigned long long>(out.stats.radio_flushed),
              static_cast<unsigned long long>(out.stats.port_flushed));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Indoor-factory 5G-TSN bridge simulator"};
  app.require_subcommand(1);

  ScenarioFlags flags;
  std::string out_dir;
  std::string sweep_config;
  std::string sweep_out;
  int jobs = 1;

  CLI::App* run = app.add_subcommand("run", "Run one scenario");
  run->add_option("-c,--config", flags.config_path,
                  "Scenario config file (JSON)")
      ->check(CLI::ExistingFile);
  CLI::Option* profile_opt = run->add_option(
      "-p,--profile", flags.profile,
      "Deployment profile: InF-SL, InF-DL, InF-SH, InF-DH, InF-HH");
  run->add_option("-n,--ues", flags.ues, "Number of user terminals");
  run->add_option("-r,--region", flags.region,
                  "Deployment disc: d1, d2, d3, or a radius in meters");
  run->add_option("-s,--seed", flags.seed, "Master seed");
  run->add_option("-d,--duration", flags.duration_s, "Traffic horizon, s");
  run->add_option("-w,--warmup", flags.warmup_s,
                  "Warmup exclusion window, s");
  run->add_option("-o,--out", out_dir, "Directory for the CSV reports");

  CLI::App* sweep = app.add_subcommand("sweep", "Run a sweep grid");
  sweep->add_option("-c,--config", sweep_config, "Sweep config file (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  sweep->add_option("-j,--jobs", jobs, "Cells to run in parallel")
      ->check(CLI::PositiveNumber);
  sweep->add_option("-o,--out", sweep_out,
                    "Directory for per-cell CSVs and grid.csv");

  CLI::App* print = app.add_subcommand(
      "print-config", "Print the fully resolved configuration as JSON");
  print->add_option("-c,--config", flags.config_path, "Config file (JSON)")
      ->check(CLI::ExistingFile);
  CLI::Option* print_profile_opt = print->add_option(
      "-p,--profile", flags.profile, "Profile for the built-in defaults");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(run)) {
      const ScenarioConfig cfg =
          resolve_scenario(flags, profile_opt->count() > 0);
      const RunOutput out = run_scenario(cfg);
      print_summary(cfg, out);
      if (!out_dir.empty()) {
        export_csvs(out_dir, out.metrics, out.summary);
        std::printf("wrote %s/{delay,sinr,harq,summary}.csv\n",
                    out_dir.c_str());
      }
      return 0;
    }
    if (app.got_subcommand(sweep)) {
      ParsedConfig parsed = parse_config_file(sweep_config);
      if (!std::holds_alternative<SweepConfig>(parsed)) {
        throw ConfigError(
            "config file defines a single scenario; use the run command");
      }
      const SweepConfig& cfg = std::get<SweepConfig>(parsed);
      std::optional<std::filesystem::path> out;
      if (!sweep_out.empty()) out = sweep_out;
      const SweepResult result = run_sweep(cfg, jobs, out);
      for (const CellResult& cell : result.cells) {
        if (cell.ok) {
          std::printf("cell %-20s ok\n", cell.name.c_str());
        } else {
          std::printf("cell %-20s error: %s\n", cell.name.c_str(),
                      cell.error.c_str());
        }
      }
      if (out) {
        std::printf("wrote %s/grid.csv\n", out->string().c_str());
      } else {
        std::fputs(grid_csv(result).c_str(), stdout);
      }
      return result.all_ok ? 0 : 1;
    }
    // print-config
    if (!flags.config_path.empty()) {
      if (print_profile_opt->count() > 0) {
        throw ConfigError(
            "--profile conflicts with --config; set the profile in the file");
      }
      ParsedConfig parsed = parse_config_file(flags.config_path);
      if (auto* s = std::get_if<ScenarioConfig>(&parsed)) {
        validate(*s);
        std::fputs(serialize(*s).c_str(), stdout);
      } else {
        const SweepConfig& sw = std::get<SweepConfig>(parsed);
        validate(sw);
        std::fputs(serialize(sw).c_str(), stdout);
      }
    } else {
      std::fputs(
          serialize(default_scenario_config(parse_profile(flags.profile)))
              .c_str(),
          stdout);
    }
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
