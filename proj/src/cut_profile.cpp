#include "berger/cut_profile.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "berger/format.hpp"

namespace berger {

Tau tau_cut(double eta, ReducedMomentum pb) {
  if (eta <= 0.0) return Tau(std::numbers::pi);
  return tau3(eta, pb);
}

double t_cut(const BergerMetric& m, ReducedMomentum pb) {
  return tau_cut(m.eta(), pb).to_time(m, momentum_norm(m, pb));
}

double t_cut_derivative(const BergerMetric& m, ReducedMomentum pb) {
  const double eta = m.eta();
  if (!(eta > 0.0)) throw DomainError("t_cut_derivative requires eta > 0");
  const double x = pb.value();
  const double t3 = tau3(eta, pb).value();
  const double dt3 = tau3_derivative(eta, pb);
  const double s = std::sqrt(1.0 + eta * x * x);
  return 2.0 * std::sqrt(m.i1()) * (dt3 * s + t3 * eta * x / s);
}

CutProfile sample_profile(const BergerMetric& m, int n) {
  if (n < 3) throw ValidationError(fmt::format("profile needs at least 3 samples (got {})", n));
  CutProfile profile{m, {}};
  profile.rows.reserve(static_cast<std::size_t>(n));
  const double eta = m.eta();
  const int half = n - 1;
  for (int k = 0; k < n; ++k) {
    // Symmetric construction keeps the grid exactly odd: x_k = -x_{n-1-k}.
    const double x = static_cast<double>(2 * k - half) / static_cast<double>(half);
    const ReducedMomentum pb(x);
    CutProfileRow row{x, std::nullopt, std::nullopt, t_cut(m, pb), std::nullopt};
    if (eta > 0.0) {
      row.tau3 = tau3(eta, pb).value();
      row.tau_conj = tau_conj(eta, pb).value();
      if (x != 0.0) {
        try {
          row.dt_cut = t_cut_derivative(m, pb);
        } catch (const SingularDenominator&) {
          // left absent
        }
      }
    }
    profile.rows.push_back(row);
  }
  return profile;
}

std::string to_csv(const CutProfile& profile) {
  std::string out = "pbar3,tau3,tau_conj,t_cut,dt_cut\n";
  for (const auto& r : profile.rows) {
    out += fmt::format("{},{},{},{},{}\n", fmtutil::number(r.pbar3),
                       fmtutil::optional_number(r.tau3, ""),
                       fmtutil::optional_number(r.tau_conj, ""), fmtutil::number(r.t_cut),
                       fmtutil::optional_number(r.dt_cut, ""));
  }
  return out;
}

std::string to_json(const CutProfile& profile) {
  const auto& m = profile.metric;
  std::string out = fmt::format(R"({{"metric":{{"i1":{},"i3":{},"eta":{}}},"rows":[)",
                                fmtutil::number(m.i1()), fmtutil::number(m.i3()),
                                fmtutil::number(m.eta()));
  bool first = true;
  for (const auto& r : profile.rows) {
    if (!first) out += ',';
    first = false;
    out += fmt::format(R"({{"pbar3":{},"tau3":{},"tau_conj":{},"t_cut":{},"dt_cut":{}}})",
                       fmtutil::number(r.pbar3), fmtutil::optional_number(r.tau3, "null"),
                       fmtutil::optional_number(r.tau_conj, "null"),
                       fmtutil::number(r.t_cut), fmtutil::optional_number(r.dt_cut, "null"));
  }
  out += "]}\n";
  return out;
}

}  // namespace berger
