// secrecy_sim: eavesdropper grid sweeps and policy comparisons.
//
//   secrecy_sim sweep   --scenario FILE --out-dir DIR [--policy P|all] [--monte-carlo-n N] [--seed S]
//   secrecy_sim compare --scenario FILE... [--monte-carlo-n N --seed S] [--out FILE]

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "secrecy/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Physical-layer secrecy simulator: AP selection with friendly jamming"};
  app.set_version_flag("--version", std::string(secrecy::kToolVersion));
  app.require_subcommand(1);

  std::optional<unsigned> threads;
  bool lattice = false;

  secrecy::SweepCommandOptions sweep;
  std::string sweep_policy;
  std::optional<std::uint64_t> sweep_n;
  std::optional<std::uint64_t> sweep_seed;
  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep the eavesdropper over the grid and write heatmaps");
  sweep_cmd->add_option("--scenario", sweep.scenario_path, "Scenario JSON file")->required();
  sweep_cmd->add_option("--policy", sweep_policy, "normal|smart|smart_fj|all (default: scenario's policy)")
      ->check(CLI::IsMember({"normal", "smart", "smart_fj", "all"}));
  sweep_cmd->add_option("--out-dir", sweep.out_dir, "Output directory")->required();
  sweep_cmd->add_option("--monte-carlo-n", sweep_n, "Also run Monte Carlo over N station placements");
  sweep_cmd->add_option("--seed", sweep_seed, "Monte Carlo seed");
  sweep_cmd->add_flag("--lattice", lattice, "Draw Monte Carlo stations on grid cells");
  sweep_cmd->add_option("--threads", threads, "Worker threads (env SECRECY_SIM_THREADS)");

  secrecy::CompareCommandOptions compare;
  std::string compare_out;
  auto* compare_cmd = app.add_subcommand("compare", "Tabulate the three policies side by side");
  compare_cmd->add_option("--scenario", compare.scenario_paths, "Scenario JSON file (repeatable)");
  compare_cmd->add_option("--monte-carlo-n", compare.monte_carlo_n, "Monte Carlo station placements");
  compare_cmd->add_option("--seed", compare.seed, "Monte Carlo seed");
  compare_cmd->add_flag("--lattice", lattice, "Draw Monte Carlo stations on grid cells");
  compare_cmd->add_option("--out", compare_out, "Write the table here instead of stdout");
  compare_cmd->add_option("--threads", threads, "Worker threads (env SECRECY_SIM_THREADS)");

  CLI11_PARSE(app, argc, argv);

  try {
    const unsigned workers = secrecy::resolve_threads(threads);
    if (*sweep_cmd) {
      if (!sweep_policy.empty()) sweep.policy = sweep_policy;
      sweep.monte_carlo_n = sweep_n;
      sweep.seed = sweep_seed;
      if (lattice) sweep.lattice = true;
      sweep.threads = workers;
      for (const auto& path : secrecy::run_sweep_command(sweep)) std::cerr << "wrote " << path.string() << '\n';
    } else if (*compare_cmd) {
      compare.lattice = lattice;
      compare.threads = workers;
      const std::string text = secrecy::dump_json(secrecy::run_compare_command(compare));
      if (compare_out.empty()) {
        std::cout << text;
      } else {
        secrecy::OutputSet out(std::filesystem::path(compare_out).parent_path());
        out.write(std::filesystem::path(compare_out).filename().string(), text);
        out.commit();
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
