#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "berger/quaternion.hpp"

namespace berger {
namespace {

TEST(UnitQuaternion, HamiltonProductBasis) {
  const UnitQuaternion i(0, 1, 0, 0), j(0, 0, 1, 0), k(0, 0, 0, 1);
  const UnitQuaternion ij = i * j;
  EXPECT_EQ(ij.w(), 0.0);
  EXPECT_EQ(ij.z(), 1.0);
  const UnitQuaternion kk = k * k;
  EXPECT_EQ(kk.w(), -1.0);
}

TEST(UnitQuaternion, ExpLogInverse) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.8, 1.8);
  for (int i = 0; i < 200; ++i) {
    const Eigen::Vector3d v(u(rng), u(rng), u(rng));
    if (v.norm() >= std::numbers::pi) continue;
    const UnitQuaternion q = UnitQuaternion::exp(v);
    EXPECT_NEAR(q.norm(), 1.0, 1e-15);
    EXPECT_LT((q.log() - v).norm(), 1e-13);
  }
  EXPECT_EQ(UnitQuaternion::identity().log().norm(), 0.0);
}

TEST(UnitQuaternion, ConjugateIsInverse) {
  const UnitQuaternion q = UnitQuaternion(0.3, -0.4, 0.5, 0.7).normalized();
  const UnitQuaternion id = q * q.conjugate();
  EXPECT_NEAR(id.distance(UnitQuaternion::identity()), 0.0, 1e-15);
}

TEST(UnitQuaternion, AntipodeHalfTurn) {
  const UnitQuaternion q = UnitQuaternion::exp({0, 0, std::numbers::pi});
  EXPECT_NEAR(q.distance(UnitQuaternion(-1, 0, 0, 0)), 0.0, 1e-15);
}

}  // namespace
}  // namespace berger
