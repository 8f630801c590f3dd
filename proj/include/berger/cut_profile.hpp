#pragma once

#include <optional>
#include <string>
#include <vector>

#include "berger/model.hpp"
#include "berger/roots.hpp"

namespace berger {

/// Reparametrized cut time: pi for eta <= 0, tau3 for eta > 0.
Tau tau_cut(double eta, ReducedMomentum pb);

/// Physical cut time 2 I1 tau_cut / |p| = 2 sqrt(I1) tau_cut sqrt(1 + eta pbar^2).
double t_cut(const BergerMetric& m, ReducedMomentum pb);

/// d t_cut / d pbar3. Requires eta > 0 and pbar3 != 0 (DomainError otherwise);
/// propagates SingularDenominator from tau3_derivative.
double t_cut_derivative(const BergerMetric& m, ReducedMomentum pb);

struct CutProfileRow {
  double pbar3;
  std::optional<double> tau3;
  std::optional<double> tau_conj;
  double t_cut;
  std::optional<double> dt_cut;
};

struct CutProfile {
  BergerMetric metric;
  std::vector<CutProfileRow> rows;  // strictly increasing pbar3 over [-1, 1]
};

/// n equispaced samples over the closed interval [-1, 1]. The tau columns are
/// absent for eta <= 0 and the derivative is absent at pbar3 = 0.
/// Throws ValidationError for n < 3.
CutProfile sample_profile(const BergerMetric& m, int n);

/// CSV with header `pbar3,tau3,tau_conj,t_cut,dt_cut`; absent fields empty.
std::string to_csv(const CutProfile& profile);

/// {"metric":{"i1","i3","eta"},"rows":[{...}]}; absent fields are null.
std::string to_json(const CutProfile& profile);

}  // namespace berger
