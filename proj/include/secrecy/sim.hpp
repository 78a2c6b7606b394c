#pragma once

// Eavesdropper grid sweeps and Monte Carlo over legitimate-station placement.
//
// Every cell is a pure function of its inputs and aggregates are summed in
// cell/sample index order, so results are bit-identical for any thread count.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "secrecy/policy.hpp"

namespace secrecy {

/// Runs fn(i) for i in [0, n) on up to `threads` workers. Each index is
/// handled by exactly one worker; fn must only write to per-index state.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::size_t>(n, 1u << 16))));
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += threads) fn(i);
    });
  }
}

inline unsigned default_thread_count() { return std::max(1u, std::thread::hardware_concurrency()); }

struct SweepConfig {
  int grid_k = 120;
  Point2D cell_origin{1.0, 1.0};
  double cell_step = 1.0;
  PolicyKind policy = PolicyKind::SmartApFj;

  /// Cell (ix, iy) sits at origin + step * (ix, iy).
  Point2D cell(int ix, int iy) const {
    return {cell_origin.x + cell_step * ix, cell_origin.y + cell_step * iy};
  }
  std::size_t cell_count() const { return static_cast<std::size_t>(grid_k) * static_cast<std::size_t>(grid_k); }
};

inline void validate(const SweepConfig& cfg) {
  if (cfg.grid_k < 1) throw ValidationError("grid k must be >= 1");
  if (!(cfg.cell_step > 0.0)) throw ValidationError("grid step must be positive");
  validate(cfg.cell_origin);
}

struct CellResult {
  Point2D eve_pos;
  SelectionResult selection;
};

struct SweepSummary {
  PolicyKind policy = PolicyKind::SmartApFj;
  int grid_k = 0;
  double avg_secrecy = 0.0;            // mean of raw differences
  double avg_secrecy_truncated = 0.0;  // mean of max(secrecy, 0)
  double avg_eve_capacity = 0.0;
  double coverage_ratio = 0.0;
  std::vector<CellResult> cells;  // y outer, x inner
};

/// Fraction of cells with strictly positive secrecy.
inline double coverage_ratio(std::span<const CellResult> cells) {
  if (cells.empty()) throw std::invalid_argument("coverage_ratio of an empty grid");
  std::size_t positive = 0;
  for (const CellResult& c : cells) {
    if (c.selection.secrecy > 0.0) ++positive;
  }
  return static_cast<double>(positive) / static_cast<double>(cells.size());
}

namespace detail {

inline void summarize(SweepSummary& out) {
  double sum_sec = 0.0;
  double sum_trunc = 0.0;
  double sum_eve = 0.0;
  for (const CellResult& c : out.cells) {
    sum_sec += c.selection.secrecy;
    sum_trunc += std::max(c.selection.secrecy, 0.0);
    sum_eve += c.selection.cap_eve;
  }
  const auto n = static_cast<double>(out.cells.size());
  out.avg_secrecy = sum_sec / n;
  out.avg_secrecy_truncated = sum_trunc / n;
  out.avg_eve_capacity = sum_eve / n;
  out.coverage_ratio = coverage_ratio(out.cells);
}

}  // namespace detail

inline SweepSummary sweep_eavesdropper(const Scenario& scenario, const SweepConfig& cfg, unsigned threads = 1) {
  validate(scenario);
  validate(cfg);
  SweepSummary out;
  out.policy = cfg.policy;
  out.grid_k = cfg.grid_k;
  out.cells.resize(cfg.cell_count());
  const auto k = static_cast<std::size_t>(cfg.grid_k);
  parallel_for(k, threads, [&](std::size_t iy) {
    for (std::size_t ix = 0; ix < k; ++ix) {
      CellResult& cell = out.cells[iy * k + ix];
      cell.eve_pos = cfg.cell(static_cast<int>(ix), static_cast<int>(iy));
      cell.selection = select(cfg.policy, scenario, cell.eve_pos);
    }
  });
  detail::summarize(out);
  return out;
}

struct PolicyMeans {
  double avg_secrecy = 0.0;
  double avg_secrecy_truncated = 0.0;
  double avg_eve_capacity = 0.0;
  double coverage_ratio = 0.0;

  friend bool operator==(const PolicyMeans&, const PolicyMeans&) = default;
};

inline PolicyMeans means_of(const SweepSummary& s) {
  return {s.avg_secrecy, s.avg_secrecy_truncated, s.avg_eve_capacity, s.coverage_ratio};
}

struct MonteCarloSample {
  Point2D sta_m;
  std::array<PolicyMeans, 3> per_policy{};  // indexed like kAllPolicies

  friend bool operator==(const MonteCarloSample&, const MonteCarloSample&) = default;
};

struct MonteCarloOptions {
  unsigned threads = 1;
  bool lattice = false;  // draw sta_m on grid cells instead of the continuous square
  bool keep_samples = false;
};

struct MonteCarloSummary {
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  bool lattice = false;
  std::array<PolicyMeans, 3> per_policy{};  // indexed like kAllPolicies
  std::vector<MonteCarloSample> samples;

  const PolicyMeans& means(PolicyKind kind) const { return per_policy[static_cast<std::size_t>(kind)]; }

  friend bool operator==(const MonteCarloSummary&, const MonteCarloSummary&) = default;
};

/// Station position for sample `index`. The generator is seeded from
/// (seed, index) alone, so draws do not depend on evaluation order.
inline Point2D draw_sta_position(const Scenario& tmpl, const SweepConfig& cfg, std::uint64_t seed,
                                 std::uint64_t index, bool lattice) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 gen(seq);
  // 53-bit uniform in [0, 1); avoids the library-specific distribution classes.
  auto unit = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  const double u = unit();
  const double v = unit();
  if (lattice) {
    const auto k = static_cast<double>(cfg.grid_k);
    const int ix = std::min(cfg.grid_k - 1, static_cast<int>(u * k));
    const int iy = std::min(cfg.grid_k - 1, static_cast<int>(v * k));
    return cfg.cell(ix, iy);
  }
  return {u * tmpl.map_extent, v * tmpl.map_extent};
}

/// Averages every policy's sweep metrics over n random station placements.
/// cfg.policy is ignored; all three policies are evaluated per sample.
inline MonteCarloSummary monte_carlo(const Scenario& tmpl, const SweepConfig& cfg, std::size_t n,
                                     std::uint64_t seed, const MonteCarloOptions& opts = {}) {
  if (n < 1) throw ValidationError("monte carlo sample count must be >= 1");
  validate(tmpl);
  validate(cfg);

  std::vector<MonteCarloSample> samples(n);
  parallel_for(n, opts.threads, [&](std::size_t i) {
    Scenario s = tmpl;
    s.sta_m = draw_sta_position(tmpl, cfg, seed, i, opts.lattice);
    samples[i].sta_m = s.sta_m;
    for (std::size_t p = 0; p < kAllPolicies.size(); ++p) {
      SweepConfig c = cfg;
      c.policy = kAllPolicies[p];
      samples[i].per_policy[p] = means_of(sweep_eavesdropper(s, c));
    }
  });

  MonteCarloSummary out;
  out.n_samples = n;
  out.seed = seed;
  out.lattice = opts.lattice;
  for (std::size_t p = 0; p < kAllPolicies.size(); ++p) {
    PolicyMeans sum;
    for (const MonteCarloSample& s : samples) {
      sum.avg_secrecy += s.per_policy[p].avg_secrecy;
      sum.avg_secrecy_truncated += s.per_policy[p].avg_secrecy_truncated;
      sum.avg_eve_capacity += s.per_policy[p].avg_eve_capacity;
      sum.coverage_ratio += s.per_policy[p].coverage_ratio;
    }
    const auto count = static_cast<double>(n);
    out.per_policy[p] = {sum.avg_secrecy / count, sum.avg_secrecy_truncated / count,
                         sum.avg_eve_capacity / count, sum.coverage_ratio / count};
  }
  if (opts.keep_samples) out.samples = std::move(samples);
  return out;
}

}  // namespace secrecy
