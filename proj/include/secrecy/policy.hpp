#pragma once

// Association policies for a two-AP downlink with one legitimate station and
// one passive eavesdropper.

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "secrecy/fj_opt.hpp"
#include "secrecy/geometry_channel.hpp"

namespace secrecy {

enum class PolicyKind {
  NormalWifi,  // strongest received signal at the station
  SmartAp,     // maximum secrecy capacity
  SmartApFj,   // maximum secrecy, idle AP jams at the optimal power
};

inline constexpr std::array<PolicyKind, 3> kAllPolicies = {PolicyKind::NormalWifi, PolicyKind::SmartAp,
                                                           PolicyKind::SmartApFj};

inline std::string_view to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::NormalWifi: return "normal";
    case PolicyKind::SmartAp: return "smart";
    case PolicyKind::SmartApFj: return "smart_fj";
  }
  return "unknown";
}

inline PolicyKind parse_policy(std::string_view name) {
  if (name == "normal") return PolicyKind::NormalWifi;
  if (name == "smart") return PolicyKind::SmartAp;
  if (name == "smart_fj") return PolicyKind::SmartApFj;
  throw ValidationError("unknown policy '" + std::string(name) + "' (expected normal|smart|smart_fj)");
}

/// 1-based AP index, matching AP_1 / AP_2.
enum class ApIndex : int { First = 1, Second = 2 };

inline ApIndex other(ApIndex i) { return i == ApIndex::First ? ApIndex::Second : ApIndex::First; }

struct Scenario {
  ApConfig ap1;
  ApConfig ap2;
  Point2D sta_m;
  ChannelParams params;
  double map_extent = 120.0;  // side of the square map, m

  const ApConfig& ap(ApIndex i) const { return i == ApIndex::First ? ap1 : ap2; }

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

inline void validate(const Scenario& s) {
  validate(s.params);
  validate(s.ap1);
  validate(s.ap2);
  validate(s.sta_m);
  if (s.ap1.position == s.ap2.position) throw ValidationError("AP positions must differ");
  if (!(s.map_extent > 0.0)) throw ValidationError("map extent must be positive");
}

/// The 120 m x 120 m layout with APs at (40,60) and (80,60), 50 mW, 2.4 GHz,
/// -70 dBm noise and free-space path loss.
inline Scenario reference_scenario(Point2D sta_m) {
  Scenario s;
  s.ap1 = {{40.0, 60.0}, 0.05, 0.05};
  s.ap2 = {{80.0, 60.0}, 0.05, 0.05};
  s.sta_m = sta_m;
  return s;
}

struct SelectionResult {
  ApIndex chosen_ap = ApIndex::First;
  ApIndex idle_ap = ApIndex::Second;
  double cap_legit = 0.0;
  double cap_eve = 0.0;
  double secrecy = 0.0;   // raw difference, may be negative
  double fj_power = 0.0;  // distance-corrected, W*m^alpha

  friend bool operator==(const SelectionResult&, const SelectionResult&) = default;
};

namespace detail {

inline SelectionResult no_jam_link(const Scenario& s, ApIndex n, const Point2D& sta_e) {
  const ChannelParams& p = s.params;
  const double power = distance_corrected_power(s.ap(n).tx_power, p);
  const double d_m = effective_distance(s.ap(n).position, s.sta_m, p);
  const double d_e = effective_distance(s.ap(n).position, sta_e, p);
  SelectionResult r;
  r.chosen_ap = n;
  r.idle_ap = other(n);
  r.cap_legit = shannon_capacity(received_power(power, d_m, p.pathloss_alpha), 0.0, p.noise_m, p.bandwidth_w);
  r.cap_eve = shannon_capacity(received_power(power, d_e, p.pathloss_alpha), 0.0, p.noise_e, p.bandwidth_w);
  r.secrecy = r.cap_legit - r.cap_eve;
  return r;
}

}  // namespace detail

/// Associates with the AP that has the higher received power at the station.
/// Without ambient interference this is the max-SINR choice. Ties go to AP 1.
inline SelectionResult select_max_sinr(const Scenario& s, const Point2D& sta_e) {
  const ChannelParams& p = s.params;
  auto rx = [&](const ApConfig& ap) {
    return received_power(distance_corrected_power(ap.tx_power, p),
                          effective_distance(ap.position, s.sta_m, p), p.pathloss_alpha);
  };
  const ApIndex n = rx(s.ap2) > rx(s.ap1) ? ApIndex::Second : ApIndex::First;
  return detail::no_jam_link(s, n, sta_e);
}

/// Maximizes C_{n,m} - C_{n,e} over both APs. Ties go to AP 1.
inline SelectionResult select_max_secrecy(const Scenario& s, const Point2D& sta_e) {
  SelectionResult first = detail::no_jam_link(s, ApIndex::First, sta_e);
  SelectionResult second = detail::no_jam_link(s, ApIndex::Second, sta_e);
  return second.secrecy > first.secrecy ? second : first;
}

inline FjGeometry jamming_geometry(const Scenario& s, ApIndex data_ap, const Point2D& sta_e) {
  const ChannelParams& p = s.params;
  const ApConfig& ap_i = s.ap(data_ap);
  const ApConfig& ap_j = s.ap(other(data_ap));
  FjGeometry g;
  g.d_im = effective_distance(ap_i.position, s.sta_m, p);
  g.d_ie = effective_distance(ap_i.position, sta_e, p);
  g.d_jm = effective_distance(ap_j.position, s.sta_m, p);
  g.d_je = effective_distance(ap_j.position, sta_e, p);
  g.alpha = p.pathloss_alpha;
  g.noise_m = p.noise_m;
  g.noise_e = p.noise_e;
  g.p_i = distance_corrected_power(ap_i.tx_power, p);
  g.p_max = distance_corrected_power(ap_j.tx_power_max, p);
  return g;
}

/// Max-secrecy selection first, then the idle AP jams at the optimal power.
/// The AP choice is not revisited after jamming is added.
inline SelectionResult select_with_fj(const Scenario& s, const Point2D& sta_e) {
  const SelectionResult base = select_max_secrecy(s, sta_e);
  const FjGeometry g = jamming_geometry(s, base.chosen_ap, sta_e);
  const FjSolution sol = optimize_fj_power(g, s.params.bandwidth_w);
  if (sol.p_opt == 0.0) return base;

  const LinkCapacities caps = jammed_capacities(g, sol.p_opt, s.params.bandwidth_w);
  // The ratio form and the capacity form can disagree in the last few ulps;
  // never report less than the no-jamming candidate.
  if (caps.secrecy() < base.secrecy) return base;

  SelectionResult r = base;
  r.cap_legit = caps.legit;
  r.cap_eve = caps.eve;
  r.secrecy = caps.secrecy();
  r.fj_power = sol.p_opt;
  return r;
}

inline SelectionResult select(PolicyKind kind, const Scenario& s, const Point2D& sta_e) {
  switch (kind) {
    case PolicyKind::NormalWifi: return select_max_sinr(s, sta_e);
    case PolicyKind::SmartAp: return select_max_secrecy(s, sta_e);
    case PolicyKind::SmartApFj: return select_with_fj(s, sta_e);
  }
  throw std::logic_error("unhandled policy");
}

}  // namespace secrecy
