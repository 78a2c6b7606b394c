#pragma once

// Scenario files (JSON), heatmaps (CSV) and run summaries (JSON).

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "secrecy/sim.hpp"
#include "secrecy/version.hpp"

namespace secrecy {

using Json = nlohmann::ordered_json;

struct MonteCarloSettings {
  bool enabled = false;
  std::uint64_t n = 1;
  std::uint64_t seed = 0;
  bool lattice = false;

  friend bool operator==(const MonteCarloSettings&, const MonteCarloSettings&) = default;
};

/// Everything a scenario file describes.
struct ScenarioConfig {
  Scenario scenario;
  SweepConfig sweep;
  std::optional<MonteCarloSettings> monte_carlo;
};

namespace detail {

inline void check_keys(const Json& obj, std::string_view where, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw ValidationError(std::string(where) + " must be an object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (std::string_view k : allowed) known = known || item.key() == k;
    if (!known) {
      throw ValidationError("unknown key '" + item.key() + "' in " + std::string(where));
    }
  }
}

inline const Json& require(const Json& obj, std::string_view where, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError("missing key '" + std::string(where) + "." + key + "'");
  return *it;
}

inline double as_number(const Json& v, std::string_view where, const std::string& key) {
  if (!v.is_number()) throw ValidationError(std::string(where) + "." + key + " must be a number");
  return v.get<double>();
}

inline double number(const Json& obj, std::string_view where, const std::string& key) {
  return as_number(require(obj, where, key), where, key);
}

inline double number_or(const Json& obj, std::string_view where, const std::string& key, double fallback) {
  auto it = obj.find(key);
  return it == obj.end() ? fallback : as_number(*it, where, key);
}

inline std::uint64_t unsigned_integer(const Json& v, std::string_view where, const std::string& key) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(v.get<std::int64_t>());
  throw ValidationError(std::string(where) + "." + key + " must be a non-negative integer");
}

inline bool boolean(const Json& v, std::string_view where, const std::string& key) {
  if (!v.is_boolean()) throw ValidationError(std::string(where) + "." + key + " must be a boolean");
  return v.get<bool>();
}

inline Point2D parse_point(const Json& obj, const std::string& where) {
  check_keys(obj, where, {"x", "y"});
  return {number(obj, where, "x"), number(obj, where, "y")};
}

template <typename Fn>
void with_context(const std::string& where, Fn&& fn) {
  try {
    fn();
  } catch (const ValidationError& e) {
    throw ValidationError(where + ": " + e.what());
  }
}

}  // namespace detail

/// Parses and validates a scenario document. Unknown keys are rejected;
/// only channel.bandwidth_hz and the grid section have defaults.
inline ScenarioConfig parse_scenario(const Json& doc) {
  using namespace detail;
  check_keys(doc, "scenario", {"channel", "aps", "sta_m", "grid", "policy", "monte_carlo"});
  ScenarioConfig cfg;
  Scenario& s = cfg.scenario;

  const Json& ch = require(doc, "scenario", "channel");
  check_keys(ch, "channel",
             {"bandwidth_hz", "center_freq_hz", "ref_distance_m", "alpha", "noise_m_watt", "noise_e_watt"});
  s.params.bandwidth_w = number_or(ch, "channel", "bandwidth_hz", 1.0);
  s.params.center_freq_f0 = number(ch, "channel", "center_freq_hz");
  s.params.ref_distance_d0 = number(ch, "channel", "ref_distance_m");
  s.params.pathloss_alpha = number(ch, "channel", "alpha");
  s.params.noise_m = number(ch, "channel", "noise_m_watt");
  s.params.noise_e = number(ch, "channel", "noise_e_watt");
  with_context("channel", [&] { validate(s.params); });

  const Json& aps = require(doc, "scenario", "aps");
  if (!aps.is_array() || aps.size() != 2) throw ValidationError("aps must be an array of exactly 2 entries");
  for (std::size_t n = 0; n < 2; ++n) {
    const std::string where = "aps[" + std::to_string(n) + "]";
    const Json& a = aps[n];
    check_keys(a, where, {"x", "y", "tx_power_watt", "tx_power_max_watt"});
    ApConfig& ap = n == 0 ? s.ap1 : s.ap2;
    ap.position = {number(a, where, "x"), number(a, where, "y")};
    ap.tx_power = number(a, where, "tx_power_watt");
    ap.tx_power_max = number(a, where, "tx_power_max_watt");
    with_context(where, [&] { validate(ap); });
  }

  s.sta_m = parse_point(require(doc, "scenario", "sta_m"), "sta_m");
  with_context("sta_m", [&] { validate(s.sta_m); });

  if (auto it = doc.find("grid"); it != doc.end()) {
    check_keys(*it, "grid", {"k", "step_m"});
    if (auto k = it->find("k"); k != it->end()) {
      const std::uint64_t value = unsigned_integer(*k, "grid", "k");
      if (value < 1 || value > 100000) throw ValidationError("grid: k must be in [1, 100000]");
      cfg.sweep.grid_k = static_cast<int>(value);
    }
    cfg.sweep.cell_step = number_or(*it, "grid", "step_m", 1.0);
  }
  with_context("grid", [&] { validate(cfg.sweep); });
  cfg.sweep.cell_origin = {cfg.sweep.cell_step, cfg.sweep.cell_step};
  s.map_extent = cfg.sweep.grid_k * cfg.sweep.cell_step;

  const Json& pol = require(doc, "scenario", "policy");
  if (!pol.is_string()) throw ValidationError("policy must be a string");
  cfg.sweep.policy = parse_policy(pol.get<std::string>());

  if (auto it = doc.find("monte_carlo"); it != doc.end()) {
    check_keys(*it, "monte_carlo", {"enabled", "n", "seed", "lattice"});
    MonteCarloSettings mc;
    mc.enabled = boolean(require(*it, "monte_carlo", "enabled"), "monte_carlo", "enabled");
    mc.n = unsigned_integer(require(*it, "monte_carlo", "n"), "monte_carlo", "n");
    mc.seed = unsigned_integer(require(*it, "monte_carlo", "seed"), "monte_carlo", "seed");
    if (auto l = it->find("lattice"); l != it->end()) mc.lattice = boolean(*l, "monte_carlo", "lattice");
    if (mc.n < 1) throw ValidationError("monte_carlo: n must be >= 1");
    cfg.monte_carlo = mc;
  }

  with_context("scenario", [&] { validate(s); });
  return cfg;
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return ss.str();
}

inline void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw IoError("error writing " + path.string());
}

inline ScenarioConfig parse_scenario_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed scenario JSON: ") + e.what());
  }
  return parse_scenario(doc);
}

inline ScenarioConfig load_scenario(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_scenario_text(text);
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

/// The scenario in file schema; parse_scenario(scenario_to_json(c)) == c.
inline Json scenario_to_json(const ScenarioConfig& cfg) {
  const Scenario& s = cfg.scenario;
  Json doc;
  doc["channel"] = {{"bandwidth_hz", s.params.bandwidth_w},       {"center_freq_hz", s.params.center_freq_f0},
                    {"ref_distance_m", s.params.ref_distance_d0}, {"alpha", s.params.pathloss_alpha},
                    {"noise_m_watt", s.params.noise_m},           {"noise_e_watt", s.params.noise_e}};
  Json aps = Json::array();
  for (const ApConfig* ap : {&s.ap1, &s.ap2}) {
    aps.push_back({{"x", ap->position.x},
                   {"y", ap->position.y},
                   {"tx_power_watt", ap->tx_power},
                   {"tx_power_max_watt", ap->tx_power_max}});
  }
  doc["aps"] = std::move(aps);
  doc["sta_m"] = {{"x", s.sta_m.x}, {"y", s.sta_m.y}};
  doc["grid"] = {{"k", static_cast<std::uint64_t>(cfg.sweep.grid_k)}, {"step_m", cfg.sweep.cell_step}};
  doc["policy"] = std::string(to_string(cfg.sweep.policy));
  if (cfg.monte_carlo) {
    doc["monte_carlo"] = {{"enabled", cfg.monte_carlo->enabled},
                          {"n", cfg.monte_carlo->n},
                          {"seed", cfg.monte_carlo->seed},
                          {"lattice", cfg.monte_carlo->lattice}};
  }
  return doc;
}

// ---------------------------------------------------------------------------
// Heatmaps

struct HeatmapRow {
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;
};

using Heatmap = std::vector<HeatmapRow>;

enum class HeatmapKind { Secrecy, EveCapacity, Association, FjPowerDbm };

inline std::string_view to_string(HeatmapKind kind) {
  switch (kind) {
    case HeatmapKind::Secrecy: return "secrecy";
    case HeatmapKind::EveCapacity: return "eve_capacity";
    case HeatmapKind::Association: return "association";
    case HeatmapKind::FjPowerDbm: return "fj_power_dbm";
  }
  return "unknown";
}

inline constexpr std::string_view kHeatmapHeader = "x,y,value";

/// Secrecy is floored at zero for display; jamming power is the idle AP's
/// transmit power in dBm, -inf where it stays silent.
inline Heatmap make_heatmap(const SweepSummary& sweep, HeatmapKind kind, const ChannelParams& params) {
  Heatmap out;
  out.reserve(sweep.cells.size());
  for (const CellResult& c : sweep.cells) {
    const SelectionResult& r = c.selection;
    double v = 0.0;
    switch (kind) {
      case HeatmapKind::Secrecy: v = std::max(r.secrecy, 0.0); break;
      case HeatmapKind::EveCapacity: v = r.cap_eve; break;
      case HeatmapKind::Association: v = static_cast<double>(static_cast<int>(r.chosen_ap)); break;
      case HeatmapKind::FjPowerDbm: v = watts_to_dbm(transmit_power(r.fj_power, params)); break;
    }
    out.push_back({c.eve_pos.x, c.eve_pos.y, v});
  }
  return out;
}

inline std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

inline std::string format_heatmap(const Heatmap& rows) {
  std::string out(kHeatmapHeader);
  out += '\n';
  for (const HeatmapRow& r : rows) {
    out += format_number(r.x);
    out += ',';
    out += format_number(r.y);
    out += ',';
    out += format_number(r.value);
    out += '\n';
  }
  return out;
}

inline Heatmap parse_heatmap(std::string_view text) {
  auto next_line = [&text]() -> std::optional<std::string_view> {
    if (text.empty()) return std::nullopt;
    const std::size_t nl = text.find('\n');
    if (nl == std::string_view::npos) throw ValidationError("heatmap: missing final newline");
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl + 1);
    return line;
  };
  auto field = [](std::string_view s, std::size_t line_no) {
    const std::string tmp(s);
    char* end = nullptr;
    const double v = std::strtod(tmp.c_str(), &end);
    if (tmp.empty() || end != tmp.c_str() + tmp.size()) {
      throw ValidationError("heatmap line " + std::to_string(line_no) + ": bad number '" + tmp + "'");
    }
    return v;
  };

  const auto header = next_line();
  if (!header || *header != kHeatmapHeader) throw ValidationError("heatmap: expected header 'x,y,value'");
  Heatmap rows;
  std::size_t line_no = 1;
  while (auto line = next_line()) {
    ++line_no;
    const std::size_t c1 = line->find(',');
    const std::size_t c2 = c1 == std::string_view::npos ? c1 : line->find(',', c1 + 1);
    if (c2 == std::string_view::npos || line->find(',', c2 + 1) != std::string_view::npos) {
      throw ValidationError("heatmap line " + std::to_string(line_no) + ": expected 3 fields");
    }
    rows.push_back({field(line->substr(0, c1), line_no), field(line->substr(c1 + 1, c2 - c1 - 1), line_no),
                    field(line->substr(c2 + 1), line_no)});
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Summaries

inline Json means_to_json(const PolicyMeans& m) {
  return {{"avg_secrecy", m.avg_secrecy},
          {"avg_secrecy_truncated", m.avg_secrecy_truncated},
          {"avg_eve_capacity", m.avg_eve_capacity},
          {"coverage_ratio", m.coverage_ratio}};
}

inline Json sweep_summary_json(const SweepSummary& sweep, const ScenarioConfig& cfg) {
  Json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["policy"] = std::string(to_string(sweep.policy));
  doc["avg_secrecy"] = sweep.avg_secrecy;
  doc["avg_secrecy_truncated"] = sweep.avg_secrecy_truncated;
  doc["avg_eve_capacity"] = sweep.avg_eve_capacity;
  doc["coverage_ratio"] = sweep.coverage_ratio;
  doc["scenario"] = scenario_to_json(cfg);
  return doc;
}

inline Json policy_table_json(const std::array<PolicyMeans, 3>& per_policy) {
  Json table;
  for (std::size_t p = 0; p < kAllPolicies.size(); ++p) {
    table[std::string(to_string(kAllPolicies[p]))] = means_to_json(per_policy[p]);
  }
  return table;
}

inline Json monte_carlo_json(const MonteCarloSummary& mc) {
  Json doc;
  doc["n"] = static_cast<std::uint64_t>(mc.n_samples);
  doc["seed"] = mc.seed;
  doc["lattice"] = mc.lattice;
  doc["policies"] = policy_table_json(mc.per_policy);
  return doc;
}

inline Json monte_carlo_summary_json(const MonteCarloSummary& mc, const ScenarioConfig& cfg) {
  Json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["monte_carlo"] = monte_carlo_json(mc);
  doc["scenario"] = scenario_to_json(cfg);
  return doc;
}

/// Canonical text form: two-space indent, insertion key order, trailing LF.
inline std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

inline std::string reserialize_json(std::string_view text) { return dump_json(Json::parse(text)); }

}  // namespace secrecy
