#include <gtest/gtest.h>

#include "berger/verify.hpp"

namespace berger {
namespace {

TEST(Verify, QuickPassesInEveryRegime) {
  for (const BergerMetric m : {BergerMetric(3, 1), BergerMetric(2, 1), BergerMetric(1, 2),
                               BergerMetric(1, 1), BergerMetric(1, 100)}) {
    const auto results = run_verification(m, VerifyLevel::kQuick);
    EXPECT_GE(results.size(), 8u);
    for (const auto& r : results) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
  }
}

TEST(Verify, FullAddsGeodesicOracles) {
  const auto quick = run_verification(BergerMetric(2, 1), VerifyLevel::kQuick);
  const auto full = run_verification(BergerMetric(2, 1), VerifyLevel::kFull);
  EXPECT_GT(full.size(), quick.size());
  for (const auto& r : full) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}

TEST(Verify, NegativeEtaUsesReferenceMetric) {
  const auto results = run_verification(BergerMetric(1, 2), VerifyLevel::kQuick);
  bool saw = false;
  for (const auto& r : results) {
    if (r.name == "tau3_evenness") {
      saw = true;
      EXPECT_NE(r.detail.find("reference eta=1"), std::string::npos) << r.detail;
    }
  }
  EXPECT_TRUE(saw);
}

}  // namespace
}  // namespace berger
