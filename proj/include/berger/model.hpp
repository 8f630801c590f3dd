#pragma once

#include <cmath>
#include <string_view>

#include "berger/errors.hpp"

namespace berger {

/// Axisymmetric left-invariant metric g(I1, I1, I3) on SU(2).
///
/// The second eigenvalue is identified with the first. Both eigenvalues
/// carry units of length squared, so every distance scales with their
/// square root.
class BergerMetric {
 public:
  /// Throws ValidationError unless both eigenvalues are finite and positive.
  BergerMetric(double i1, double i3);

  double i1() const noexcept { return i1_; }
  double i3() const noexcept { return i3_; }

  /// Shape parameter I1/I3 - 1, always > -1.
  double eta() const noexcept { return i1_ / i3_ - 1.0; }

  /// Hamiltonian H(p) = (p1^2/I1 + p2^2/I1 + p3^2/I3) / 2.
  double hamiltonian(double p1, double p2, double p3) const noexcept {
    return 0.5 * ((p1 * p1 + p2 * p2) / i1_ + p3 * p3 / i3_);
  }

  friend bool operator==(const BergerMetric&, const BergerMetric&) = default;

 private:
  double i1_;
  double i3_;
};

/// Axis component p3/|p| of a unit-direction momentum, in [-1, 1].
class ReducedMomentum {
 public:
  /// Throws ValidationError if |pbar3| > 1 or the value is not finite.
  explicit ReducedMomentum(double pbar3);

  double value() const noexcept { return pbar3_; }
  ReducedMomentum operator-() const { return ReducedMomentum(-pbar3_); }

 private:
  double pbar3_;
};

/// Body covector (p1, p2, p3) in the basis diagonalizing the metric.
struct Momentum {
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;

  double norm() const noexcept { return std::sqrt(p1 * p1 + p2 * p2 + p3 * p3); }

  /// p3/|p|. Throws DomainError for the zero covector.
  ReducedMomentum reduced() const;

  double hamiltonian(const BergerMetric& m) const noexcept {
    return m.hamiltonian(p1, p2, p3);
  }
};

/// Branches of the closed-form diameter.
enum class Regime {
  kRoundDominated,  // I1 <= I3
  kMiddle,          // I3 < I1 <= 2 I3
  kProlate,         // 2 I3 < I1
};

std::string_view to_string(Regime r) noexcept;

double eta(const BergerMetric& m) noexcept;

/// |p| on the level set H = 1/2 as a function of the reduced momentum:
/// sqrt(I1 / (1 + eta pbar3^2)).
double momentum_norm(const BergerMetric& m, ReducedMomentum pb) noexcept;

Regime classify_regime(const BergerMetric& m) noexcept;

}  // namespace berger
