#pragma once

// The `sweep` and `compare` commands, independent of argument parsing.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>
#include <system_error>
#include <vector>

#include "secrecy/io.hpp"

namespace secrecy {

/// --threads, else SECRECY_SIM_THREADS, else hardware concurrency.
inline unsigned resolve_threads(std::optional<unsigned> flag) {
  if (flag && *flag > 0) return *flag;
  if (const char* env = std::getenv("SECRECY_SIM_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    throw ValidationError("SECRECY_SIM_THREADS must be a positive integer");
  }
  return default_thread_count();
}

struct SweepCommandOptions {
  std::filesystem::path scenario_path;
  std::optional<std::string> policy;  // normal|smart|smart_fj|all; default: the file's policy
  std::filesystem::path out_dir;
  std::optional<std::uint64_t> monte_carlo_n;
  std::optional<std::uint64_t> seed;
  std::optional<bool> lattice;
  unsigned threads = 1;
};

/// Tracks files written by a command and deletes them unless committed.
class OutputSet {
 public:
  explicit OutputSet(std::filesystem::path dir) : dir_(std::move(dir)) {}
  OutputSet(const OutputSet&) = delete;
  OutputSet& operator=(const OutputSet&) = delete;
  ~OutputSet() {
    if (committed_) return;
    std::error_code ec;
    for (const auto& p : written_) std::filesystem::remove(p, ec);
  }

  void write(const std::string& name, std::string_view content) {
    const auto path = dir_ / name;
    try {
      write_text_file(path, content);
    } catch (...) {
      if (std::filesystem::is_regular_file(path)) written_.push_back(path);
      throw;
    }
    written_.push_back(path);
  }
  void commit() { committed_ = true; }
  const std::vector<std::filesystem::path>& written() const { return written_; }

 private:
  std::filesystem::path dir_;
  std::vector<std::filesystem::path> written_;
  bool committed_ = false;
};

inline std::vector<PolicyKind> requested_policies(const std::optional<std::string>& flag, PolicyKind fallback) {
  if (!flag) return {fallback};
  if (*flag == "all") return {kAllPolicies.begin(), kAllPolicies.end()};
  return {parse_policy(*flag)};
}

/// Resolves Monte Carlo settings from the file and the command line; flags win.
inline std::optional<MonteCarloSettings> resolve_monte_carlo(const std::optional<MonteCarloSettings>& file,
                                                             std::optional<std::uint64_t> n,
                                                             std::optional<std::uint64_t> seed,
                                                             std::optional<bool> lattice) {
  MonteCarloSettings mc = file.value_or(MonteCarloSettings{});
  if (n) {
    if (*n < 1) throw ValidationError("--monte-carlo-n must be >= 1");
    mc.enabled = true;
    mc.n = *n;
  }
  if (seed) mc.seed = *seed;
  if (lattice) mc.lattice = *lattice;
  if (!mc.enabled) return std::nullopt;
  return mc;
}

/// Writes four heatmaps and a summary per policy, plus a Monte Carlo summary
/// when enabled. On any failure every file written so far is removed.
inline std::vector<std::filesystem::path> run_sweep_command(const SweepCommandOptions& opts) {
  ScenarioConfig cfg = load_scenario(opts.scenario_path);
  const auto policies = requested_policies(opts.policy, cfg.sweep.policy);
  const auto mc = resolve_monte_carlo(cfg.monte_carlo, opts.monte_carlo_n, opts.seed, opts.lattice);

  std::error_code ec;
  std::filesystem::create_directories(opts.out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + opts.out_dir.string() + ": " + ec.message());

  OutputSet out(opts.out_dir);
  for (PolicyKind policy : policies) {
    SweepConfig sc = cfg.sweep;
    sc.policy = policy;
    const SweepSummary sweep = sweep_eavesdropper(cfg.scenario, sc, opts.threads);
    const std::string prefix(to_string(policy));
    for (HeatmapKind kind : {HeatmapKind::Secrecy, HeatmapKind::EveCapacity, HeatmapKind::Association,
                             HeatmapKind::FjPowerDbm}) {
      out.write(prefix + "_" + std::string(to_string(kind)) + ".csv",
                format_heatmap(make_heatmap(sweep, kind, cfg.scenario.params)));
    }
    ScenarioConfig echo = cfg;
    echo.sweep.policy = policy;
    out.write(prefix + "_summary.json", dump_json(sweep_summary_json(sweep, echo)));
  }
  if (mc) {
    cfg.monte_carlo = mc;
    const MonteCarloSummary summary =
        monte_carlo(cfg.scenario, cfg.sweep, mc->n, mc->seed, {opts.threads, mc->lattice, false});
    out.write("monte_carlo_summary.json", dump_json(monte_carlo_summary_json(summary, cfg)));
  }
  out.commit();
  return out.written();
}

struct CompareCommandOptions {
  std::vector<std::filesystem::path> scenario_paths;
  std::optional<std::uint64_t> monte_carlo_n;
  std::uint64_t seed = 0;
  bool lattice = false;
  unsigned threads = 1;
};

/// Three-policy comparison table: one row per scenario file, plus an
/// averaged Monte Carlo entry when a sample count is given. Monte Carlo uses
/// the first scenario as its template, or the reference layout if none.
inline Json run_compare_command(const CompareCommandOptions& opts) {
  if (opts.scenario_paths.empty() && !opts.monte_carlo_n) {
    throw ValidationError("compare needs --scenario or --monte-carlo-n");
  }
  std::vector<ScenarioConfig> configs;
  for (const auto& path : opts.scenario_paths) configs.push_back(load_scenario(path));

  Json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  Json rows = Json::array();
  for (std::size_t r = 0; r < configs.size(); ++r) {
    const ScenarioConfig& cfg = configs[r];
    std::array<PolicyMeans, 3> per_policy{};
    for (std::size_t p = 0; p < kAllPolicies.size(); ++p) {
      SweepConfig sc = cfg.sweep;
      sc.policy = kAllPolicies[p];
      per_policy[p] = means_of(sweep_eavesdropper(cfg.scenario, sc, opts.threads));
    }
    Json row;
    row["label"] = opts.scenario_paths[r].stem().string();
    row["sta_m"] = {{"x", cfg.scenario.sta_m.x}, {"y", cfg.scenario.sta_m.y}};
    row["policies"] = policy_table_json(per_policy);
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);

  if (opts.monte_carlo_n) {
    if (*opts.monte_carlo_n < 1) throw ValidationError("--monte-carlo-n must be >= 1");
    ScenarioConfig tmpl;
    if (!configs.empty()) {
      tmpl = configs.front();
    } else {
      tmpl.scenario = reference_scenario({0.0, 0.0});
    }
    const MonteCarloSummary mc = monte_carlo(tmpl.scenario, tmpl.sweep, *opts.monte_carlo_n, opts.seed,
                                             {opts.threads, opts.lattice, false});
    doc["monte_carlo"] = monte_carlo_json(mc);
  }
  return doc;
}

}  // namespace secrecy
