#include "berger/model.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace berger {

BergerMetric::BergerMetric(double i1, double i3) : i1_(i1), i3_(i3) {
  if (!(std::isfinite(i1) && i1 > 0.0) || !(std::isfinite(i3) && i3 > 0.0)) {
    throw ValidationError(
        fmt::format("metric eigenvalues must be positive and finite (i1={}, i3={})", i1, i3));
  }
}

ReducedMomentum::ReducedMomentum(double pbar3) : pbar3_(pbar3) {
  if (!std::isfinite(pbar3) || std::abs(pbar3) > 1.0) {
    throw ValidationError(fmt::format("reduced momentum must lie in [-1, 1] (got {})", pbar3));
  }
}

ReducedMomentum Momentum::reduced() const {
  const double n = norm();
  if (!(n > 0.0)) throw DomainError("reduced momentum of the zero covector");
  // Clamp one-ulp excursions so |p3|/|p| never leaves [-1, 1].
  return ReducedMomentum(std::clamp(p3 / n, -1.0, 1.0));
}

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::kRoundDominated: return "ROUND_DOMINATED";
    case Regime::kMiddle: return "MIDDLE";
    case Regime::kProlate: return "PROLATE";
  }
  return "UNKNOWN";
}

double eta(const BergerMetric& m) noexcept { return m.eta(); }

double momentum_norm(const BergerMetric& m, ReducedMomentum pb) noexcept {
  const double x = pb.value();
  return std::sqrt(m.i1() / (1.0 + m.eta() * x * x));
}

Regime classify_regime(const BergerMetric& m) noexcept {
  // Compare eigenvalues directly so the boundaries I1 = I3 and I1 = 2 I3 are
  // exact and do not go through the rounded eta.
  if (m.i1() <= m.i3()) return Regime::kRoundDominated;
  if (m.i1() <= 2.0 * m.i3()) return Regime::kMiddle;
  return Regime::kProlate;
}

}  // namespace berger
