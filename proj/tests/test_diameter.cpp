#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>
#include <json.hpp>

#include "berger/diameter.hpp"

namespace berger {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(ClosedForm, BranchValues) {
  EXPECT_NEAR(diameter_closed_form(BergerMetric(1, 2)), 2 * kPi, 1e-12);
  EXPECT_NEAR(diameter_closed_form(BergerMetric(2, 1)), 2 * kPi, 1e-12);
  EXPECT_NEAR(diameter_closed_form(BergerMetric(3, 1)), 3 * kPi / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(diameter_closed_form(BergerMetric(1, 1)), 2 * kPi, 1e-12);
}

TEST(ClosedForm, BranchesAgreeAtTwiceI3) {
  for (double i3 : {0.1, 1.0, 10.0}) {
    const double third = kPi * 2 * i3 / std::sqrt(i3);
    EXPECT_NEAR(third, 2 * kPi * std::sqrt(i3), 1e-12 * third);
  }
}

TEST(ClosedForm, Continuity) {
  for (double i3 : {0.1, 1.0, 10.0}) {
    for (double ratio : {1.0, 2.0}) {
      const double d0 = diameter_closed_form(BergerMetric(ratio * i3, i3));
      for (double s : {1 - 1e-9, 1 + 1e-9}) {
        EXPECT_LT(std::abs(diameter_closed_form(BergerMetric(ratio * i3 * s, i3)) - d0), 1e-6);
      }
    }
  }
}

TEST(ClosedForm, HomogeneousOfDegreeHalf) {
  for (const BergerMetric m : {BergerMetric(1, 3), BergerMetric(1.4, 1), BergerMetric(7, 2)}) {
    for (double c : {0.25, 4.0, 100.0}) {
      const double scaled = diameter_closed_form(BergerMetric(c * m.i1(), c * m.i3()));
      EXPECT_NEAR(scaled, std::sqrt(c) * diameter_closed_form(m), 1e-12 * scaled);
    }
  }
}

TEST(Numeric, RoundDominatedTieGoesToZero) {
  const auto r = diameter_numeric(BergerMetric(1, 2), 257, 1e-12);
  EXPECT_NEAR(r.value, 2 * kPi, 1e-12);
  EXPECT_EQ(r.maximizer, 0.0);
  EXPECT_EQ(diameter_numeric(BergerMetric(1, 1), 257, 1e-12).maximizer, 0.0);
}

TEST(Numeric, ProlateInteriorMaximum) {
  const auto r = diameter_numeric(BergerMetric(3, 1), 257, 1e-10);
  EXPECT_NEAR(r.value, 3 * kPi / std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(r.maximizer, 0.5, 1e-6);
}

TEST(Numeric, MiddleBoundaryMaximum) {
  const auto r = diameter_numeric(BergerMetric(1.5, 1), 257, 1e-12);
  EXPECT_NEAR(r.value, 2 * kPi, 1e-10);
  EXPECT_NEAR(r.maximizer, 1.0, 1e-6);
}

TEST(Numeric, RejectsCoarseGrid) {
  EXPECT_THROW(diameter_numeric(BergerMetric(1, 1), 64, 1e-12), ValidationError);
  EXPECT_THROW(diameter_numeric(BergerMetric(1, 1), 65, 0.0), ValidationError);
}

TEST(Report, Examples) {
  EXPECT_LT(diameter_report(BergerMetric(1, 1)).abs_gap, 1e-9);
  const auto prolate = diameter_report(BergerMetric(10, 1));
  EXPECT_EQ(prolate.regime, Regime::kProlate);
  EXPECT_NEAR(prolate.maximizer_pbar3, 1.0 / 9.0, 1e-6);
  const auto round = diameter_report(BergerMetric(1, 100));
  EXPECT_EQ(round.regime, Regime::kRoundDominated);
  EXPECT_NEAR(round.closed_form, 2 * kPi, 1e-12);
}

TEST(Report, OracleAgreementAndBoundsOnSweep) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> lr(-3.0, 3.0), ls(-1.0, 1.0);
  for (int i = 0; i < 60; ++i) {
    const double i3 = std::pow(10.0, ls(rng));
    const BergerMetric m(i3 * std::pow(10.0, lr(rng)), i3);
    const auto r = diameter_report(m);
    EXPECT_EQ(r.abs_gap, std::abs(r.closed_form - r.numeric));
    EXPECT_LT(r.abs_gap, 1e-8 * r.closed_form);
    EXPECT_LE(kPi * std::sqrt(m.i1()), r.closed_form);
    EXPECT_LE(r.closed_form, 2 * kPi * std::sqrt(m.i1()));
    switch (r.regime) {
      case Regime::kRoundDominated: EXPECT_EQ(r.maximizer_pbar3, 0.0); break;
      case Regime::kMiddle: EXPECT_NEAR(r.maximizer_pbar3, 1.0, 1e-6); break;
      case Regime::kProlate: EXPECT_NEAR(r.maximizer_pbar3, 1.0 / m.eta(), 1e-6); break;
    }
  }
}

TEST(Report, JsonKeys) {
  const auto j = nlohmann::json::parse(to_json(diameter_report(BergerMetric(3, 1))));
  for (const char* key : {"i1", "i3", "eta", "regime", "closed_form", "numeric",
                          "maximizer_pbar3", "abs_gap"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j.size(), 8u);
  EXPECT_EQ(j["regime"], "PROLATE");
  EXPECT_EQ(j["closed_form"].get<double>(), diameter_closed_form(BergerMetric(3, 1)));
}

}  // namespace
}  // namespace berger
