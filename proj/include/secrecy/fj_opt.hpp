#pragma once

// Closed-form optimal friendly-jamming power for the idle access point.
//
// With AP i carrying data at fixed power P_i and AP j jamming at P_j, the
// secrecy capacity is W*log2(f(P_j)) where
//
//   f = (A P_j^2 + B P_j + C P_i P_j + D P_i + K)
//     / (A P_j^2 + B P_j + E P_i P_j + F P_i + K).
//
// df/dP_j has the sign of a P_j^2 + b P_j + c (the denominator is a square),
// so the optimum over [0, P_max] is at a clamped real root of that quadratic
// or at one of the two bounds.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <span>

#include "secrecy/geometry_channel.hpp"

namespace secrecy {

/// Path-loss powers d^alpha of the four links plus the receiver noises and
/// the data AP's corrected power. Kept generic so the coefficient algebra can
/// be checked in exact rational arithmetic.
template <typename Real>
struct FjTerms {
  Real dim_a;  // d_{i,m}^alpha
  Real die_a;  // d_{i,e}^alpha
  Real djm_a;  // d_{j,m}^alpha
  Real dje_a;  // d_{j,e}^alpha
  Real noise_m;
  Real noise_e;
  Real p_i;
};

template <typename Real>
struct FjCoefficients {
  Real cap_a, cap_b, cap_c, cap_d, cap_e, cap_f, cap_k;
  // Numerator of df/dP_j: quad_a P_j^2 + quad_b P_j + quad_c.
  Real quad_a, quad_b, quad_c;
};

/// Builds A..K and the derivative-numerator coefficients. With unequal
/// receiver noises the m-side terms carry noise_m and the e-side terms
/// noise_e; for equal noises this is exactly the single-noise form.
template <typename Real>
FjCoefficients<Real> compute_coefficients(const FjTerms<Real>& t) {
  FjCoefficients<Real> k{};
  k.cap_a = t.dim_a * t.die_a;
  k.cap_b = t.noise_e * t.die_a * t.dje_a * t.dim_a + t.noise_m * t.dim_a * t.djm_a * t.die_a;
  k.cap_c = t.djm_a * t.die_a;
  k.cap_d = t.noise_e * t.die_a * t.dje_a * t.djm_a;
  k.cap_e = t.dim_a * t.dje_a;
  k.cap_f = t.noise_m * t.dim_a * t.djm_a * t.dje_a;
  k.cap_k = (t.noise_m * t.dim_a * t.djm_a) * (t.noise_e * t.die_a * t.dje_a);

  const Real& p = t.p_i;
  k.quad_a = p * k.cap_a * (k.cap_e - k.cap_c);
  k.quad_b = Real(2) * p * k.cap_a * (k.cap_f - k.cap_d);
  k.quad_c = p * k.cap_b * (k.cap_f - k.cap_d) + p * p * (k.cap_c * k.cap_f - k.cap_e * k.cap_d) +
             p * k.cap_k * (k.cap_c - k.cap_e);
  return k;
}

/// The derivative-numerator coefficients in fully expanded (unsimplified)
/// form. Only used to check compute_coefficients.
template <typename Real>
std::array<Real, 3> expanded_quadratic(const FjCoefficients<Real>& k, const Real& p_i) {
  const Real two(2);
  const Real a = two * p_i * k.cap_a * k.cap_e + p_i * k.cap_a * k.cap_c -
                 two * p_i * k.cap_a * k.cap_c - p_i * k.cap_a * k.cap_e;
  const Real b = two * p_i * k.cap_a * k.cap_f - two * p_i * k.cap_a * k.cap_d;
  const Real c = p_i * k.cap_b * k.cap_f + p_i * p_i * k.cap_f * k.cap_c + p_i * k.cap_k * k.cap_c -
                 p_i * k.cap_b * k.cap_d - p_i * p_i * k.cap_e * k.cap_d -
                 p_i * k.cap_k * k.cap_e;
  return {a, b, c};
}

template <typename Real>
Real ratio_numerator(const FjCoefficients<Real>& k, const Real& p_i, const Real& p_j) {
  return p_j * p_j * k.cap_a + p_j * k.cap_b + p_i * p_j * k.cap_c + p_i * k.cap_d + k.cap_k;
}

template <typename Real>
Real ratio_denominator(const FjCoefficients<Real>& k, const Real& p_i, const Real& p_j) {
  return p_j * p_j * k.cap_a + p_j * k.cap_b + p_i * p_j * k.cap_e + p_i * k.cap_f + k.cap_k;
}

/// f(P_i, P_j): the argument of the secrecy logarithm.
template <typename Real>
Real secrecy_ratio(const FjCoefficients<Real>& k, const Real& p_i, const Real& p_j) {
  return ratio_numerator(k, p_i, p_j) / ratio_denominator(k, p_i, p_j);
}

template <typename Real>
Real derivative_numerator(const FjCoefficients<Real>& k, const Real& p_j) {
  return (k.quad_a * p_j + k.quad_b) * p_j + k.quad_c;
}

/// One serving/jamming configuration. Distances must already be clamped to
/// the reference distance; powers are distance-corrected (W*m^alpha).
struct FjGeometry {
  double d_im = 1.0;
  double d_ie = 1.0;
  double d_jm = 1.0;
  double d_je = 1.0;
  double alpha = 2.0;
  double noise_m = 1e-10;
  double noise_e = 1e-10;
  double p_i = 0.0;    // data AP
  double p_max = 0.0;  // jamming AP cap

  FjTerms<double> terms() const {
    return {std::pow(d_im, alpha), std::pow(d_ie, alpha), std::pow(d_jm, alpha),
            std::pow(d_je, alpha), noise_m, noise_e, p_i};
  }
};

inline FjCoefficients<double> compute_coefficients(const FjGeometry& geom) {
  return compute_coefficients(geom.terms());
}

struct LinkCapacities {
  double legit = 0.0;
  double eve = 0.0;

  double secrecy() const { return legit - eve; }
};

/// Legitimate and eavesdropper capacities with AP j jamming at p_j, composed
/// directly from the Shannon formula.
inline LinkCapacities jammed_capacities(const FjGeometry& g, double p_j, double bandwidth) {
  return {shannon_capacity(received_power(g.p_i, g.d_im, g.alpha),
                           received_power(p_j, g.d_jm, g.alpha), g.noise_m, bandwidth),
          shannon_capacity(received_power(g.p_i, g.d_ie, g.alpha),
                           received_power(p_j, g.d_je, g.alpha), g.noise_e, bandwidth)};
}

/// W * log2(f(P_i, p_j)) through the coefficient form.
inline double secrecy_objective(const FjCoefficients<double>& k, double p_i, double p_j,
                                double bandwidth) {
  return bandwidth * std::log2(secrecy_ratio(k, p_i, p_j));
}

inline double secrecy_objective(const FjGeometry& geom, double p_j, double bandwidth) {
  return secrecy_objective(compute_coefficients(geom), geom.p_i, p_j, bandwidth);
}

struct QuadraticRoots {
  std::array<double, 2> values{};
  std::size_t count = 0;

  std::span<const double> roots() const { return {values.data(), count}; }
};

/// Real roots of a x^2 + b x + c. Coefficients below `rel_eps` times the
/// largest one are treated as zero, so near-linear and constant inputs
/// degrade gracefully instead of dividing by ~0.
inline QuadraticRoots real_roots(double a, double b, double c, double rel_eps = 1e-12) {
  QuadraticRoots out;
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
  if (scale == 0.0 || !std::isfinite(scale)) return out;
  a /= scale;
  b /= scale;
  c /= scale;
  if (std::abs(a) <= rel_eps) {
    if (std::abs(b) <= rel_eps) return out;
    out.values[out.count++] = -c / b;
    return out;
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return out;
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  out.values[out.count++] = q / a;
  if (q != 0.0) out.values[out.count++] = c / q;
  return out;
}

struct FjCandidate {
  double power = 0.0;
  double secrecy = 0.0;
};

struct FjSolution {
  double p_opt = 0.0;
  double secrecy = 0.0;
  std::array<FjCandidate, 4> candidate_storage{};
  std::size_t candidate_count = 0;

  std::span<const FjCandidate> candidates() const { return {candidate_storage.data(), candidate_count}; }
};

/// Optimal jamming power on [0, p_max]. Candidates are the clamped stationary
/// points followed by 0 and p_max; the best secrecy wins and exact ties go to
/// the smallest power.
inline FjSolution optimize_fj_power(const FjGeometry& geom, double bandwidth) {
  const FjCoefficients<double> k = compute_coefficients(geom);
  FjSolution sol;
  auto add = [&](double p) {
    sol.candidate_storage[sol.candidate_count++] = {p, secrecy_objective(k, geom.p_i, p, bandwidth)};
  };

  if (geom.p_max > 0.0) {
    // Solve in t = P_j / p_max so the relative-degeneracy test is scale-free.
    const double pm = geom.p_max;
    const QuadraticRoots roots = real_roots(k.quad_a * pm * pm, k.quad_b * pm, k.quad_c);
    for (double t : roots.roots()) {
      add(std::clamp(t * pm, 0.0, pm));
    }
  }
  add(0.0);
  add(geom.p_max);

  sol.p_opt = sol.candidate_storage[0].power;
  sol.secrecy = sol.candidate_storage[0].secrecy;
  for (const FjCandidate& c : sol.candidates()) {
    if (c.secrecy > sol.secrecy || (c.secrecy == sol.secrecy && c.power < sol.p_opt)) {
      sol.p_opt = c.power;
      sol.secrecy = c.secrecy;
    }
  }
  return sol;
}

}  // namespace secrecy
