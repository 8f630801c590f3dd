#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>
#include <json.hpp>

#include "berger/cut_profile.hpp"

namespace berger {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(TauCut, BranchDispatch) {
  EXPECT_EQ(tau_cut(-0.5, ReducedMomentum(0.3)).value(), kPi);
  EXPECT_EQ(tau_cut(0.0, ReducedMomentum(0.9)).value(), kPi);
  EXPECT_NEAR(tau_cut(1.0, ReducedMomentum(1.0)).value(), kPi / 2, 1e-12);
}

TEST(TCut, SpotValues) {
  EXPECT_NEAR(t_cut(BergerMetric(1, 2), ReducedMomentum(0.0)), 2 * kPi, 1e-12);
  EXPECT_NEAR(t_cut(BergerMetric(1, 2), ReducedMomentum(1.0)), 2 * kPi * std::sqrt(0.5), 1e-12);
  EXPECT_NEAR(t_cut(BergerMetric(2, 1), ReducedMomentum(1.0)), 2 * kPi, 1e-12);
  EXPECT_NEAR(t_cut(BergerMetric(3, 1), ReducedMomentum(0.5)), kPi * std::sqrt(3.0 * 1.5), 1e-11);
}

TEST(TCut, EqualsReparametrizedForm) {
  const BergerMetric m(2.5, 0.7);
  for (double x : {-0.8, -0.1, 0.0, 0.33, 1.0}) {
    const ReducedMomentum pb(x);
    const double alt = 2 * std::sqrt(m.i1()) * tau_cut(m.eta(), pb).value() *
                       std::sqrt(1 + m.eta() * x * x);
    EXPECT_NEAR(t_cut(m, pb), alt, 1e-12 * alt);
  }
}

TEST(TCut, Evenness) {
  for (const BergerMetric m : {BergerMetric(1, 3), BergerMetric(1, 1), BergerMetric(1.7, 1),
                               BergerMetric(8, 1)}) {
    for (int k = 1; k <= 50; ++k) {
      const double x = k / 50.0;
      EXPECT_DOUBLE_EQ(t_cut(m, ReducedMomentum(x)), t_cut(m, ReducedMomentum(-x)));
    }
  }
}

TEST(TCut, MinimumAtZeroForPositiveEta) {
  for (double e : {0.3, 1.0, 4.0}) {
    const BergerMetric m(1 + e, 1);
    const double at0 = t_cut(m, ReducedMomentum(0.0));
    for (int k = 1; k < 100; ++k) {
      EXPECT_LE(at0, t_cut(m, ReducedMomentum(0.1 * k / 100.0)));
      EXPECT_LE(at0, t_cut(m, ReducedMomentum(-0.1 * k / 100.0)));
    }
  }
}

TEST(TCut, ContinuousAcrossEtaZero) {
  const BergerMetric below(1.0, 1.0 / (1.0 - 1e-6));
  const BergerMetric above(1.0, 1.0 / (1.0 + 1e-6));
  for (int k = 0; k < 50; ++k) {
    const ReducedMomentum pb(-1.0 + 2.0 * (k + 0.5) / 50.0);
    EXPECT_LT(std::abs(t_cut(below, pb) - t_cut(above, pb)), 1e-3);
  }
}

TEST(TCut, BelowConjugateTime) {
  for (double e : {0.2, 1.0, 3.0, 12.0}) {
    const BergerMetric m(1 + e, 1);
    for (int k = -20; k <= 20; ++k) {
      const ReducedMomentum pb(k / 20.0);
      const double norm = momentum_norm(m, pb);
      EXPECT_LE(t_cut(m, pb), tau_conj(e, pb).to_time(m, norm));
    }
  }
}

TEST(TCut, ProfileBracket) {
  // Lower bound pi min(sqrt I1, sqrt I3) holds for eta > 0 and for I3 <= 4 I1.
  for (const BergerMetric m : {BergerMetric(1, 4), BergerMetric(1, 2), BergerMetric(1, 1),
                               BergerMetric(1.5, 1), BergerMetric(3, 1), BergerMetric(40, 1)}) {
    const double lo = kPi * std::min(std::sqrt(m.i1()), std::sqrt(m.i3()));
    const double hi = 2 * kPi * std::sqrt(m.i1());
    for (const auto& r : sample_profile(m, 101).rows) {
      EXPECT_GE(r.t_cut, lo * (1 - 1e-12));
      EXPECT_LE(r.t_cut, hi * (1 + 1e-12));
    }
  }
}

TEST(TCut, StronglyOblateAxisMinimum) {
  // For I3 > 4 I1 the axis cut time 2 pi I1 / sqrt(I3) drops below pi sqrt(I1).
  const BergerMetric m(1, 100);
  const double axis = t_cut(m, ReducedMomentum(1.0));
  EXPECT_NEAR(axis, 2 * kPi * m.i1() / std::sqrt(m.i3()), 1e-12);
  EXPECT_LT(axis, kPi * std::sqrt(m.i1()));
}

TEST(TCutDerivative, SignPattern) {
  const BergerMetric m(3, 1);  // eta = 2
  EXPECT_GT(t_cut_derivative(m, ReducedMomentum(0.1)), 0.0);
  EXPECT_LT(t_cut_derivative(m, ReducedMomentum(0.9)), 0.0);
  const BergerMetric mid(1.5, 1);  // 0 < eta <= 1: increasing all the way to 1
  for (int k = 1; k < 50; ++k) EXPECT_GT(t_cut_derivative(mid, ReducedMomentum(k / 50.0)), 0.0);
}

TEST(TCutDerivative, MatchesFiniteDifference) {
  const BergerMetric m(2, 1);
  const double h = 1e-6;
  const double fd =
      (t_cut(m, ReducedMomentum(0.5 + h)) - t_cut(m, ReducedMomentum(0.5 - h))) / (2 * h);
  const double cf = t_cut_derivative(m, ReducedMomentum(0.5));
  EXPECT_LT(std::abs(cf - fd), 1e-5 * std::abs(cf));
}

TEST(TCutDerivative, GridAgreement) {
  const double h = 1e-6;
  for (double e : {0.5, 2.0, 5.0}) {
    const BergerMetric m(1 + e, 1);
    for (int k = 0; k <= 60; ++k) {
      const double x = 0.05 + 0.94 * k / 60.0;
      if (std::abs(x - 1 / e) < 0.05) continue;
      const double fd =
          (t_cut(m, ReducedMomentum(x + h)) - t_cut(m, ReducedMomentum(x - h))) / (2 * h);
      const double cf = t_cut_derivative(m, ReducedMomentum(x));
      EXPECT_LT(std::abs(cf - fd), 1e-5 * std::abs(cf)) << "eta=" << e << " pbar=" << x;
    }
  }
}

TEST(TCutDerivative, Preconditions) {
  EXPECT_THROW(t_cut_derivative(BergerMetric(1, 2), ReducedMomentum(0.5)), DomainError);
  EXPECT_THROW(t_cut_derivative(BergerMetric(3, 1), ReducedMomentum(0.0)), DomainError);
}

TEST(SampleProfile, RoundCase) {
  const CutProfile p = sample_profile(BergerMetric(1, 1), 5);
  ASSERT_EQ(p.rows.size(), 5u);
  for (const auto& r : p.rows) {
    EXPECT_DOUBLE_EQ(r.t_cut, 2 * kPi);
    EXPECT_FALSE(r.tau3 || r.tau_conj || r.dt_cut);
  }
}

TEST(SampleProfile, GridShape) {
  const CutProfile p = sample_profile(BergerMetric(3, 1), 201);
  ASSERT_EQ(p.rows.size(), 201u);
  EXPECT_EQ(p.rows.front().pbar3, -1.0);
  EXPECT_EQ(p.rows.back().pbar3, 1.0);
  EXPECT_EQ(p.rows[100].pbar3, 0.0);
  EXPECT_FALSE(p.rows[100].dt_cut.has_value());
  EXPECT_TRUE(p.rows[100].tau3.has_value());
  for (std::size_t i = 1; i < p.rows.size(); ++i) EXPECT_LT(p.rows[i - 1].pbar3, p.rows[i].pbar3);
  EXPECT_THROW(sample_profile(BergerMetric(1, 1), 2), ValidationError);
}

double argmax_abs(const CutProfile& p) {
  const auto it = std::max_element(p.rows.begin(), p.rows.end(),
                                   [](const auto& a, const auto& b) { return a.t_cut < b.t_cut; });
  return std::abs(it->pbar3);
}

TEST(SampleProfile, MaximizerLocation) {
  EXPECT_NEAR(argmax_abs(sample_profile(BergerMetric(3, 1), 201)), 0.5, 0.01);
  EXPECT_NEAR(argmax_abs(sample_profile(BergerMetric(2, 1), 201)), 1.0, 1e-12);
}

TEST(Serialization, CsvLayout) {
  const std::string csv = to_csv(sample_profile(BergerMetric(1, 2), 3));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "pbar3,tau3,tau_conj,t_cut,dt_cut");
  EXPECT_NE(csv.find("\n-1,,,4.4428829381583661,\n"), std::string::npos) << csv;
}

TEST(Serialization, JsonSchema) {
  const CutProfile p = sample_profile(BergerMetric(3, 1), 7);
  const auto j = nlohmann::json::parse(to_json(p));
  EXPECT_EQ(j["metric"]["i1"], 3.0);
  EXPECT_EQ(j["metric"]["eta"], 2.0);
  ASSERT_EQ(j["rows"].size(), 7u);
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    const auto& row = j["rows"][i];
    EXPECT_EQ(row["t_cut"].get<double>(), p.rows[i].t_cut);  // 17 digits round-trip exactly
    EXPECT_EQ(row["tau3"].get<double>(), *p.rows[i].tau3);
  }
  EXPECT_TRUE(j["rows"][3]["dt_cut"].is_null());
}

}  // namespace
}  // namespace berger
