#include "berger/roots.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace berger {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kScanStep = kPi / 2000.0;
// Near machine precision so finite differences of tau3 stay clean for small
// |d tau3 / d pbar|.
constexpr double kRootTol = 1e-15;

void require_positive_eta(double eta, const char* what) {
  if (!(eta > 0.0)) {
    throw DomainError(fmt::format("{} is only defined for eta > 0 (got {})", what, eta));
  }
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

double bisect(const std::function<double(double)>& f, double a, double b, double fa,
              double tol) {
  const int sa = sign(fa);
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (sign(fm) == sa) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double find_first_root(const std::function<double(double)>& f, double lo, double hi,
                       double scan_step, double tol) {
  if (!(lo < hi) || !(scan_step > 0.0) || !(tol > 0.0)) {
    throw ValidationError("find_first_root: need lo < hi, scan_step > 0, tol > 0");
  }
  double prev_x = lo;
  double prev_f = f(lo);
  for (long k = 1;; ++k) {
    double x = lo + static_cast<double>(k) * scan_step;
    if (x > hi) x = hi;
    const double fx = f(x);
    if (fx == 0.0) return x;
    if (prev_f != 0.0 && sign(fx) != sign(prev_f)) {
      return bisect(f, prev_x, x, prev_f, tol);
    }
    if (x >= hi) break;
    prev_x = x;
    prev_f = fx;
  }
  throw NoRootFound(fmt::format("no sign change in ({}, {}]", lo, hi));
}

double maxwell_equation(double eta, double pbar3, double tau) noexcept {
  const double a = tau * eta * pbar3;
  return std::cos(tau) * std::sin(a) + pbar3 * std::sin(tau) * std::cos(a);
}

double conjugate_equation(double eta, double pbar3, double tau) noexcept {
  const double c = eta * (1.0 - pbar3 * pbar3) / (1.0 + eta * pbar3 * pbar3);
  return std::sin(tau) + c * tau * std::cos(tau);
}

Tau tau_conj(double eta, ReducedMomentum pb) {
  require_positive_eta(eta, "tau_conj");
  const double x = pb.value();
  if (1.0 - x * x == 0.0) return Tau(kPi);
  // sin + c tau cos equals 1 at pi/2 and -c pi at pi; the root is interior.
  const double root = find_first_root(
      [eta, x](double t) { return conjugate_equation(eta, x, t); }, kPi / 2.0, kPi,
      kScanStep, kRootTol);
  return Tau(root);
}

Tau tau3(double eta, ReducedMomentum pb) {
  require_positive_eta(eta, "tau3");
  const double x = pb.value();
  if (x == 0.0) return tau_conj(eta, pb);
  const double root = find_first_root(
      [eta, x](double t) { return maxwell_equation(eta, x, t); }, 0.0, kPi, kScanStep,
      kRootTol);
  return Tau(root);
}

double tau3_derivative(double eta, ReducedMomentum pb) {
  require_positive_eta(eta, "tau3_derivative");
  const double x = pb.value();
  if (x == 0.0) throw DomainError("tau3_derivative is not evaluated at pbar3 = 0");

  const double t = tau3(eta, pb).value();
  const double a = t * eta * x;
  const double st = std::sin(t), ct = std::cos(t);
  const double sa = std::sin(a), ca = std::cos(a);

  const double num = t * eta * ct * ca + st * ca - t * eta * x * st * sa;
  const double den = -(1.0 + eta * x * x) * st * sa + x * (1.0 + eta) * ct * ca;
  if (std::abs(den) < 1e-14) {
    throw SingularDenominator(
        fmt::format("tau3_derivative: denominator {} at eta={}, pbar3={}", den, eta, x));
  }
  return -num / den;
}

}  // namespace berger
