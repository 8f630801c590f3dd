#pragma once

#include <Eigen/Core>

namespace berger {

/// Element of SU(2) as a unit quaternion w + x i + y j + z k.
///
/// The Lie algebra is identified with R^3 through v -> v/2 as a pure
/// quaternion, so that exp_half(v) = exp(v/2) and the bracket becomes the
/// cross product.
class UnitQuaternion {
 public:
  UnitQuaternion() = default;

  /// Stores the components as given; call normalized() to project onto S^3.
  UnitQuaternion(double w, double x, double y, double z) : w_(w), x_(x), y_(y), z_(z) {}

  static UnitQuaternion identity() { return {}; }

  /// cos|v| + sin|v| v/|v| (no half-angle factor).
  static UnitQuaternion exp(const Eigen::Vector3d& v);

  double w() const noexcept { return w_; }
  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }
  double z() const noexcept { return z_; }
  Eigen::Vector3d vec() const { return {x_, y_, z_}; }

  double norm() const noexcept;
  UnitQuaternion normalized() const;
  UnitQuaternion conjugate() const noexcept { return {w_, -x_, -y_, -z_}; }

  /// Inverse of exp on the principal branch: returns v with |v| in [0, pi].
  Eigen::Vector3d log() const;

  /// Distance in R^4; q and -q are different points of SU(2).
  double distance(const UnitQuaternion& o) const noexcept;

  friend UnitQuaternion operator*(const UnitQuaternion& a, const UnitQuaternion& b) noexcept;

 private:
  double w_ = 1.0;
  double x_ = 0.0;
  double y_ = 0.0;
  double z_ = 0.0;
};

/// Product of q with the pure quaternion (0, v).
UnitQuaternion mul_pure(const UnitQuaternion& q, const Eigen::Vector3d& v) noexcept;

}  // namespace berger
