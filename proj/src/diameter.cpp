#include "berger/diameter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <fmt/format.h>

#include "berger/cut_profile.hpp"
#include "berger/format.hpp"

namespace berger {
namespace {

constexpr double kPi = std::numbers::pi;

// Golden-section search for a maximum of f on [a, b]; returns the best
// abscissa seen, including the bracket end points.
template <typename F>
NumericDiameter golden_section_max(F&& f, double a, double b, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  NumericDiameter best{f(a), a};
  const auto consider = [&best](double x, double v) {
    if (v > best.value || (v == best.value && x < best.maximizer)) best = {v, x};
  };
  consider(b, f(b));
  consider(x1, f1);
  consider(x2, f2);
  for (int it = 0; it < 200 && b - a > tol; ++it) {
    if (f1 >= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
      consider(x1, f1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
      consider(x2, f2);
    }
  }
  return best;
}

}  // namespace

double diameter_closed_form(const BergerMetric& m) noexcept {
  switch (classify_regime(m)) {
    case Regime::kRoundDominated: return 2.0 * kPi * std::sqrt(m.i1());
    case Regime::kMiddle: return 2.0 * kPi * std::sqrt(m.i3());
    case Regime::kProlate: return kPi * m.i1() / std::sqrt(m.i1() - m.i3());
  }
  return 0.0;
}

NumericDiameter diameter_numeric(const BergerMetric& m, int grid_n, double refine_tol) {
  if (grid_n < 65) throw ValidationError(fmt::format("grid_n must be >= 65 (got {})", grid_n));
  if (!(refine_tol > 0.0)) throw ValidationError("refine_tol must be positive");

  const auto profile = [&m](double x) {
    return t_cut(m, ReducedMomentum(std::clamp(x, 0.0, 1.0)));
  };

  const int last = grid_n - 1;
  std::vector<double> values(static_cast<std::size_t>(grid_n));
  int best = 0;
  for (int k = 0; k <= last; ++k) {
    values[k] = profile(static_cast<double>(k) / last);
    if (values[k] > values[best]) best = k;
  }

  const double lo = static_cast<double>(std::max(best - 1, 0)) / last;
  const double hi = static_cast<double>(std::min(best + 1, last)) / last;
  NumericDiameter refined = golden_section_max(profile, lo, hi, refine_tol);

  const NumericDiameter on_grid{values[best], static_cast<double>(best) / last};
  if (refined.value > on_grid.value) return refined;
  return on_grid;
}

DiameterReport diameter_report(const BergerMetric& m, NumericDiameterOptions opt) {
  const double closed = diameter_closed_form(m);
  const NumericDiameter num = diameter_numeric(m, opt);
  return {m, classify_regime(m), closed, num.value, num.maximizer, std::abs(closed - num.value)};
}

std::string to_json(const DiameterReport& r) {
  using fmtutil::number;
  return fmt::format(
      R"({{"i1":{},"i3":{},"eta":{},"regime":{},"closed_form":{},"numeric":{},"maximizer_pbar3":{},"abs_gap":{}}})"
      "\n",
      number(r.metric.i1()), number(r.metric.i3()), number(r.metric.eta()),
      fmtutil::quoted(to_string(r.regime)), number(r.closed_form), number(r.numeric),
      number(r.maximizer_pbar3), number(r.abs_gap));
}

}  // namespace berger
