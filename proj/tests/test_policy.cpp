#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "secrecy/geometry_channel.hpp"
#include "secrecy/policy.hpp"

namespace secrecy {
namespace {

Point2D random_point(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.0, 120.0);
  return {u(gen), u(gen)};
}

// Unjammed secrecy of AP n written out independently of the library helpers.
double plain_secrecy(const Scenario& s, const ApConfig& ap, const Point2D& eve) {
  const double ratio = s.params.speed_of_light / (4.0 * 3.14159265358979323846 * s.params.center_freq_f0);
  const double p = ap.tx_power * ratio * ratio;
  const double dm = std::max(1.0, std::hypot(ap.position.x - s.sta_m.x, ap.position.y - s.sta_m.y));
  const double de = std::max(1.0, std::hypot(ap.position.x - eve.x, ap.position.y - eve.y));
  return std::log2(1.0 + p / (dm * dm) / s.params.noise_m) - std::log2(1.0 + p / (de * de) / s.params.noise_e);
}

TEST(SelectMaxSinr, NearestApWins) {
  const Point2D eve{100, 100};
  EXPECT_EQ(select_max_sinr(reference_scenario({20, 100}), eve).chosen_ap, ApIndex::First);
  EXPECT_EQ(select_max_sinr(reference_scenario({80, 20}), eve).chosen_ap, ApIndex::Second);
  const SelectionResult r = select_max_sinr(reference_scenario({80, 20}), eve);
  EXPECT_EQ(r.idle_ap, ApIndex::First);
  EXPECT_EQ(r.fj_power, 0.0);
}

TEST(SelectMaxSinr, TieGoesToFirstAp) {
  EXPECT_EQ(select_max_sinr(reference_scenario({60, 10}), {0, 0}).chosen_ap, ApIndex::First);
  EXPECT_EQ(select_max_sinr(reference_scenario({60, 60}), {0, 0}).chosen_ap, ApIndex::First);
}

TEST(SelectMaxSinr, IgnoresEavesdropper) {
  std::mt19937_64 gen(2);
  const Scenario s = reference_scenario({20, 100});
  for (int t = 0; t < 200; ++t) EXPECT_EQ(select_max_sinr(s, random_point(gen)).chosen_ap, ApIndex::First);
}

TEST(SelectMaxSecrecy, Examples) {
  const Scenario s = reference_scenario({40, 50});
  const SelectionResult r = select_max_secrecy(s, {80, 50});
  EXPECT_EQ(r.chosen_ap, ApIndex::First);
  EXPECT_GT(r.secrecy, 0.0);
  EXPECT_EQ(r.fj_power, 0.0);

  const SelectionResult same = select_max_secrecy(s, s.sta_m);
  EXPECT_EQ(same.chosen_ap, ApIndex::First);
  EXPECT_EQ(same.secrecy, 0.0);
}

TEST(SelectMaxSecrecy, MatchesTwoCandidateEnumeration) {
  std::mt19937_64 gen(5);
  for (int t = 0; t < 2000; ++t) {
    const Scenario s = reference_scenario(random_point(gen));
    const Point2D eve = random_point(gen);
    const double s1 = plain_secrecy(s, s.ap1, eve);
    const double s2 = plain_secrecy(s, s.ap2, eve);
    const SelectionResult r = select_max_secrecy(s, eve);
    EXPECT_NEAR(r.secrecy, std::max(s1, s2), 1e-9);
    if (std::abs(s1 - s2) > 1e-9) {
      EXPECT_EQ(r.chosen_ap, s2 > s1 ? ApIndex::Second : ApIndex::First);
    }
    EXPECT_NEAR(r.secrecy, r.cap_legit - r.cap_eve, 0.0);
  }
}

TEST(SelectWithFj, NeverWorseThanSmartAp) {
  std::mt19937_64 gen(6);
  for (int t = 0; t < 3000; ++t) {
    const Scenario s = reference_scenario(random_point(gen));
    const Point2D eve = random_point(gen);
    const SelectionResult smart = select_max_secrecy(s, eve);
    const SelectionResult fj = select_with_fj(s, eve);
    EXPECT_EQ(fj.chosen_ap, smart.chosen_ap);
    EXPECT_GE(fj.secrecy, smart.secrecy);
    EXPECT_LE(fj.cap_eve, smart.cap_eve);
    EXPECT_GE(fj.fj_power, 0.0);
    EXPECT_LE(fj.fj_power, distance_corrected_power(s.ap(fj.idle_ap).tx_power_max, s.params));
  }
}

TEST(SelectWithFj, DominanceChain) {
  std::mt19937_64 gen(8);
  for (int t = 0; t < 3000; ++t) {
    Scenario s = reference_scenario(random_point(gen));
    s.ap2.position = random_point(gen);
    if (s.ap2.position == s.ap1.position) continue;
    const Point2D eve = random_point(gen);
    const double normal = select_max_sinr(s, eve).secrecy;
    const double smart = select_max_secrecy(s, eve).secrecy;
    const double fj = select_with_fj(s, eve).secrecy;
    EXPECT_GE(smart, normal);
    EXPECT_GE(fj, smart);
  }
}

TEST(SelectWithFj, EdgeOfMapNeedsNoJamming) {
  // Eavesdropper in the far corner from the station: jamming cannot help.
  const Scenario s = reference_scenario({20, 100});
  const SelectionResult r = select_with_fj(s, {120, 1});
  EXPECT_EQ(r.fj_power, 0.0);
  EXPECT_EQ(r, select_max_secrecy(s, {120, 1}));
}

TEST(SelectWithFj, InteriorJammingMostlyFiveToTenDbm) {
  const Scenario s = reference_scenario({20, 100});
  std::vector<double> dbm;
  for (int y = 6; y <= 115; ++y) {
    for (int x = 6; x <= 115; ++x) {
      const SelectionResult r = select_with_fj(s, {double(x), double(y)});
      if (r.fj_power > 0.0) dbm.push_back(watts_to_dbm(transmit_power(r.fj_power, s.params)));
    }
  }
  ASSERT_FALSE(dbm.empty());
  std::nth_element(dbm.begin(), dbm.begin() + dbm.size() / 2, dbm.end());
  const double median = dbm[dbm.size() / 2];
  EXPECT_GE(median, 5.0);
  EXPECT_LE(median, 10.0);
  for (double v : dbm) EXPECT_LE(v, watts_to_dbm(0.05) + 1e-9);
}

TEST(Selection, DeterministicAndBandwidthIndependent) {
  std::mt19937_64 gen(9);
  for (int t = 0; t < 1000; ++t) {
    Scenario s = reference_scenario(random_point(gen));
    const Point2D eve = random_point(gen);
    for (PolicyKind kind : kAllPolicies) {
      const SelectionResult a = select(kind, s, eve);
      EXPECT_EQ(a, select(kind, s, eve));
      Scenario wide = s;
      wide.params.bandwidth_w = 20e6;
      const SelectionResult b = select(kind, wide, eve);
      EXPECT_EQ(a.chosen_ap, b.chosen_ap);
      EXPECT_EQ(a.fj_power, b.fj_power);
      EXPECT_NEAR(b.secrecy, 20e6 * a.secrecy, 1e-6 * 20e6);
    }
  }
}

TEST(Scenario, Validation) {
  Scenario s = reference_scenario({1, 1});
  EXPECT_NO_THROW(validate(s));
  s.ap2.position = s.ap1.position;
  EXPECT_THROW(validate(s), ValidationError);
  s = reference_scenario({1, 1});
  s.map_extent = 0;
  EXPECT_THROW(validate(s), ValidationError);
}

TEST(PolicyKind, Names) {
  for (PolicyKind k : kAllPolicies) EXPECT_EQ(parse_policy(to_string(k)), k);
  EXPECT_THROW(parse_policy("greedy"), ValidationError);
}

}  // namespace
}  // namespace secrecy
