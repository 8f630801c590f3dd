#pragma once

#include <string>

#include "berger/model.hpp"

namespace berger {

/// Exact diameter of (SU(2), g(I1, I1, I3)):
///   2 pi sqrt(I1)            for I1 <= I3,
///   2 pi sqrt(I3)            for I3 < I1 <= 2 I3,
///   pi I1 / sqrt(I1 - I3)    for 2 I3 < I1.
double diameter_closed_form(const BergerMetric& m) noexcept;

struct NumericDiameter {
  double value;
  double maximizer;  // pbar3 in [0, 1]
};

struct NumericDiameterOptions {
  int grid_n = 513;
  double refine_tol = 1e-12;
};

/// Maximizes t_cut over pbar3 in [0, 1] by a grid scan followed by
/// golden-section refinement of the best cell. Ties go to the smallest pbar3.
/// Throws ValidationError for grid_n < 65 or refine_tol <= 0.
NumericDiameter diameter_numeric(const BergerMetric& m, int grid_n, double refine_tol);

inline NumericDiameter diameter_numeric(const BergerMetric& m,
                                        NumericDiameterOptions opt = {}) {
  return diameter_numeric(m, opt.grid_n, opt.refine_tol);
}

struct DiameterReport {
  BergerMetric metric;
  Regime regime;
  double closed_form;
  double numeric;
  double maximizer_pbar3;
  double abs_gap;
};

DiameterReport diameter_report(const BergerMetric& m, NumericDiameterOptions opt = {});

/// {"i1","i3","eta","regime","closed_form","numeric","maximizer_pbar3","abs_gap"}
std::string to_json(const DiameterReport& report);

}  // namespace berger
