#include "berger/quaternion.hpp"

#include <cmath>

namespace berger {

UnitQuaternion UnitQuaternion::exp(const Eigen::Vector3d& v) {
  const double a = v.norm();
  if (a == 0.0) return identity();
  const double s = std::sin(a) / a;
  return {std::cos(a), s * v.x(), s * v.y(), s * v.z()};
}

double UnitQuaternion::norm() const noexcept {
  return std::sqrt(w_ * w_ + x_ * x_ + y_ * y_ + z_ * z_);
}

UnitQuaternion UnitQuaternion::normalized() const {
  const double n = norm();
  return {w_ / n, x_ / n, y_ / n, z_ / n};
}

Eigen::Vector3d UnitQuaternion::log() const {
  const Eigen::Vector3d v = vec();
  const double s = v.norm();
  if (s == 0.0) return Eigen::Vector3d::Zero();
  return std::atan2(s, w_) / s * v;
}

double UnitQuaternion::distance(const UnitQuaternion& o) const noexcept {
  const double dw = w_ - o.w_, dx = x_ - o.x_, dy = y_ - o.y_, dz = z_ - o.z_;
  return std::sqrt(dw * dw + dx * dx + dy * dy + dz * dz);
}

UnitQuaternion operator*(const UnitQuaternion& a, const UnitQuaternion& b) noexcept {
  return {a.w_ * b.w_ - a.x_ * b.x_ - a.y_ * b.y_ - a.z_ * b.z_,
          a.w_ * b.x_ + a.x_ * b.w_ + a.y_ * b.z_ - a.z_ * b.y_,
          a.w_ * b.y_ - a.x_ * b.z_ + a.y_ * b.w_ + a.z_ * b.x_,
          a.w_ * b.z_ + a.x_ * b.y_ - a.y_ * b.x_ + a.z_ * b.w_};
}

UnitQuaternion mul_pure(const UnitQuaternion& q, const Eigen::Vector3d& v) noexcept {
  return q * UnitQuaternion(0.0, v.x(), v.y(), v.z());
}

}  // namespace berger
