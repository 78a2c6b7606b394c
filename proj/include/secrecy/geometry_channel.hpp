#pragma once

// Positions, radio constants and the single-slope path-loss link budget.
//
// Transmit powers are folded with the free-space gain at the reference
// distance into a "distance-corrected" power P (units W*m^alpha), so that the
// received power at distance d >= d0 is simply P * d^-alpha.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "secrecy/error.hpp"

namespace secrecy {

inline constexpr double kSpeedOfLight = 2.998e8;  // m/s

struct Point2D {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2D&, const Point2D&) = default;
};

struct ChannelParams {
  double bandwidth_w = 1.0;        // Hz; 1 Hz reports capacities in bits/s/Hz
  double center_freq_f0 = 2.4e9;   // Hz
  double ref_distance_d0 = 1.0;    // m
  double pathloss_alpha = 2.0;
  double noise_m = 1e-10;          // W, legitimate receiver
  double noise_e = 1e-10;          // W, eavesdropper
  double speed_of_light = kSpeedOfLight;

  friend bool operator==(const ChannelParams&, const ChannelParams&) = default;
};

struct ApConfig {
  Point2D position;
  double tx_power = 0.05;      // W
  double tx_power_max = 0.05;  // W

  friend bool operator==(const ApConfig&, const ApConfig&) = default;
};

inline void validate(const Point2D& p) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
    throw ValidationError("coordinates must be finite");
  }
}

inline void validate(const ChannelParams& params) {
  if (!(params.bandwidth_w > 0.0)) throw ValidationError("bandwidth must be positive");
  if (!(params.center_freq_f0 > 0.0)) throw ValidationError("center_freq must be positive");
  if (!(params.ref_distance_d0 > 0.0)) throw ValidationError("ref_distance must be positive");
  if (!(params.pathloss_alpha >= 1.0)) throw ValidationError("alpha must be >= 1");
  if (!(params.noise_m > 0.0)) throw ValidationError("noise_m must be positive");
  if (!(params.noise_e > 0.0)) throw ValidationError("noise_e must be positive");
  if (!(params.speed_of_light > 0.0)) throw ValidationError("speed_of_light must be positive");
}

inline void validate(const ApConfig& ap) {
  validate(ap.position);
  if (!(ap.tx_power > 0.0)) throw ValidationError("tx_power must be positive");
  if (!(ap.tx_power <= ap.tx_power_max)) {
    throw ValidationError("tx_power must not exceed tx_power_max");
  }
}

inline double distance(const Point2D& a, const Point2D& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

/// Distances inside the reference distance are clamped to it; the path-loss
/// model is not valid there.
inline double effective_distance(double d, const ChannelParams& params) {
  return std::max(d, params.ref_distance_d0);
}

inline double effective_distance(const Point2D& a, const Point2D& b, const ChannelParams& params) {
  return effective_distance(distance(a, b), params);
}

/// (C / (4 pi f0 d0))^2 * d0^alpha: converts a transmit power in W into the
/// distance-corrected power used by every capacity formula.
inline double link_gain(const ChannelParams& params) {
  const double ratio = params.speed_of_light /
                       (4.0 * std::numbers::pi * params.center_freq_f0 * params.ref_distance_d0);
  return ratio * ratio * std::pow(params.ref_distance_d0, params.pathloss_alpha);
}

inline double distance_corrected_power(double tx_power, const ChannelParams& params) {
  return tx_power * link_gain(params);
}

/// Inverse of distance_corrected_power.
inline double transmit_power(double corrected_power, const ChannelParams& params) {
  return corrected_power / link_gain(params);
}

inline double received_power(double corrected_power, double d, double alpha) {
  return corrected_power * std::pow(d, -alpha);
}

/// W * log2(1 + S / (I + N)).
inline double shannon_capacity(double signal, double interference, double noise, double bandwidth) {
  return bandwidth * std::log2(1.0 + signal / (interference + noise));
}

inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts * 1000.0); }

inline double dbm_to_watts(double dbm) { return std::pow(10.0, dbm / 10.0) / 1000.0; }

}  // namespace secrecy
