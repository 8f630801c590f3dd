#pragma once

#include <functional>

#include "berger/model.hpp"

namespace berger {

/// Dimensionless reparametrized time tau = t |p| / (2 I1).
class Tau {
 public:
  constexpr explicit Tau(double v) noexcept : value_(v) {}
  constexpr double value() const noexcept { return value_; }

  /// Physical arclength time for a geodesic with momentum norm |p|.
  double to_time(const BergerMetric& m, double momentum_norm) const noexcept {
    return 2.0 * m.i1() * value_ / momentum_norm;
  }

 private:
  double value_;
};

/// Smallest root of f in (lo, hi].
///
/// f is sampled at lo, lo + scan_step, ... and at hi; the first sign change
/// (or exact zero) is refined by bisection until the bracket is narrower
/// than tol. A zero at lo itself is ignored. Throws NoRootFound when no
/// sign change is seen.
double find_first_root(const std::function<double(double)>& f, double lo, double hi,
                       double scan_step, double tol);

/// Left-hand side of the Maxwell-time equation
///   cos(tau) sin(tau eta pbar) + pbar sin(tau) cos(tau eta pbar).
double maxwell_equation(double eta, double pbar3, double tau) noexcept;

/// Left-hand side of the conjugate-time equation in the tangent-free form
///   sin(tau) + c tau cos(tau),  c = eta (1 - pbar^2) / (1 + eta pbar^2).
double conjugate_equation(double eta, double pbar3, double tau) noexcept;

/// First positive root of maxwell_equation in (0, pi]; at pbar3 = 0 this is
/// tau_conj(eta, 0). Throws DomainError for eta <= 0.
Tau tau3(double eta, ReducedMomentum pb);

/// First positive root of tan(tau) = -c tau, always in (pi/2, pi].
/// Throws DomainError for eta <= 0.
Tau tau_conj(double eta, ReducedMomentum pb);

/// Closed-form d tau3 / d pbar3 from implicit differentiation of the Maxwell
/// equation. Throws DomainError for eta <= 0 or pbar3 == 0, and
/// SingularDenominator when the denominator is below 1e-14 in magnitude.
double tau3_derivative(double eta, ReducedMomentum pb);

}  // namespace berger
