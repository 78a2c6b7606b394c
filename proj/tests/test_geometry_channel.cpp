#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "secrecy/geometry_channel.hpp"

namespace secrecy {
namespace {

TEST(Distance, Examples) {
  EXPECT_DOUBLE_EQ(distance({40, 60}, {80, 60}), 40.0);
  EXPECT_DOUBLE_EQ(distance({5, 5}, {5, 5}), 0.0);
  EXPECT_DOUBLE_EQ(distance({0, 0}, {3, 4}), 5.0);
}

TEST(EffectiveDistance, ClampsToReference) {
  ChannelParams p;
  p.ref_distance_d0 = 1.0;
  EXPECT_DOUBLE_EQ(effective_distance(40.0, p), 40.0);
  EXPECT_DOUBLE_EQ(effective_distance(0.0, p), 1.0);
  EXPECT_DOUBLE_EQ(effective_distance(0.3, p), 1.0);
}

TEST(EffectiveDistance, SymmetricInEndpoints) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> u(-50, 170);
  ChannelParams p;
  for (int t = 0; t < 1000; ++t) {
    const Point2D a{u(gen), u(gen)};
    const Point2D b{u(gen), u(gen)};
    EXPECT_EQ(effective_distance(a, b, p), effective_distance(b, a, p));
  }
}

TEST(DistanceCorrectedPower, FiftyMilliwattsAt2400MHz) {
  ChannelParams p;  // 2.4 GHz, d0 = 1 m, alpha = 2
  // 0.05 * (2.998e8 / (4 pi 2.4e9))^2, evaluated to 40 digits offline.
  EXPECT_NEAR(distance_corrected_power(0.05, p), 4.9407291876197182e-06, 1e-20);
}

TEST(DistanceCorrectedPower, UnitLinkBudget) {
  ChannelParams p;
  p.ref_distance_d0 = 1.0;
  p.center_freq_f0 = p.speed_of_light / (4.0 * std::numbers::pi);
  EXPECT_NEAR(distance_corrected_power(1.0, p), 1.0, 1e-15);
}

TEST(DistanceCorrectedPower, LinearInTransmitPower) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(0.001, 1.0);
  for (int t = 0; t < 200; ++t) {
    ChannelParams p;
    p.center_freq_f0 = u(gen) * 6e9;
    p.ref_distance_d0 = u(gen) * 10;
    p.pathloss_alpha = 1.0 + 3.0 * u(gen);
    const double tx = u(gen);
    EXPECT_NEAR(distance_corrected_power(2 * tx, p), 2 * distance_corrected_power(tx, p),
                1e-15 * distance_corrected_power(tx, p));
  }
}

TEST(DistanceCorrectedPower, FreeSpaceConsistency) {
  // alpha = 2: P d^-2 equals tx (C / (4 pi f0))^2 / d^2 for any d0 <= d.
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    ChannelParams p;
    p.pathloss_alpha = 2.0;
    p.ref_distance_d0 = 0.5 + 5 * u(gen);
    p.center_freq_f0 = 1e9 + 5e9 * u(gen);
    const double tx = 0.001 + u(gen);
    const double d = p.ref_distance_d0 + 200 * u(gen);
    const double ratio = p.speed_of_light / (4.0 * std::numbers::pi * p.center_freq_f0);
    const double expected = tx * ratio * ratio / (d * d);
    EXPECT_NEAR(received_power(distance_corrected_power(tx, p), d, 2.0), expected, 1e-12 * expected);
  }
}

TEST(ShannonCapacity, Examples) {
  EXPECT_EQ(shannon_capacity(0.0, 3e-10, 1e-10, 20e6), 0.0);
  EXPECT_DOUBLE_EQ(shannon_capacity(1e-10, 0.0, 1e-10, 20e6), 20e6);
  // 50 mW at 40 m, -70 dBm noise; 40-digit offline reference.
  const ChannelParams p;
  const double signal = received_power(distance_corrected_power(0.05, p), 40.0, 2.0);
  EXPECT_NEAR(shannon_capacity(signal, 0.0, 1e-10, 1.0), 4.9945596957145315, 1e-12);
}

TEST(ShannonCapacity, MonotoneAndScaleInvariant) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 2000; ++t) {
    const double s = 1e-9 * u(gen);
    const double i = 1e-9 * u(gen);
    const double n = 1e-11 + 1e-9 * u(gen);
    const double w = 1.0 + 1e6 * u(gen);
    const double delta = 1e-10 * (0.01 + u(gen));
    const double c = shannon_capacity(s, i, n, w);
    EXPECT_GE(c, 0.0);
    EXPECT_LE(shannon_capacity(s, i + delta, n, w), c);
    EXPECT_LE(shannon_capacity(s, i, n + delta, w), c);
    EXPECT_GE(shannon_capacity(s + delta, i, n, w), c);
    const double k = std::pow(10.0, 6.0 * u(gen) - 3.0);
    EXPECT_NEAR(shannon_capacity(k * s, k * i, k * n, w), c, 1e-12 * w + 1e-12 * c);
  }
}

TEST(Conversions, DbmRoundTrip) {
  EXPECT_NEAR(watts_to_dbm(0.05), 16.989700043360188, 1e-12);
  EXPECT_NEAR(watts_to_dbm(1e-10), -70.0, 1e-12);
  EXPECT_NEAR(dbm_to_watts(watts_to_dbm(0.0123)), 0.0123, 1e-15);
  EXPECT_EQ(watts_to_dbm(0.0), -INFINITY);
  const ChannelParams p;
  EXPECT_NEAR(transmit_power(distance_corrected_power(0.037, p), p), 0.037, 1e-16);
}

TEST(Validation, RejectsBadParameters) {
  ChannelParams p;
  EXPECT_NO_THROW(validate(p));
  p.noise_e = 0.0;
  EXPECT_THROW(validate(p), ValidationError);
  p = {};
  p.pathloss_alpha = 0.5;
  EXPECT_THROW(validate(p), ValidationError);
  p = {};
  p.bandwidth_w = -1;
  EXPECT_THROW(validate(p), ValidationError);

  ApConfig ap;
  ap.tx_power = 0.0;
  try {
    validate(ap);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_STREQ(e.what(), "tx_power must be positive");
  }
  ap.tx_power = 0.1;
  ap.tx_power_max = 0.05;
  EXPECT_THROW(validate(ap), ValidationError);
  EXPECT_THROW(validate(Point2D{NAN, 0}), ValidationError);
}

}  // namespace
}  // namespace secrecy
