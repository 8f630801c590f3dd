#include "berger/verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "berger/cut_profile.hpp"
#include "berger/diameter.hpp"
#include "berger/geodesic.hpp"
#include "berger/roots.hpp"

namespace berger {
namespace {

constexpr double kPi = std::numbers::pi;

struct Check {
  bool ok = true;
  double worst = 0.0;
  void bound(double value, double limit) {
    worst = std::max(worst, value);
    if (!(value <= limit)) ok = false;
  }
  void require(bool cond) { ok = ok && cond; }
};

PropertyResult run(const std::string& name, const std::function<std::string(Check&)>& body) {
  Check c;
  std::string detail;
  try {
    detail = body(c);
  } catch (const std::exception& e) {
    return {name, false, fmt::format("exception: {}", e.what())};
  }
  return {name, c.ok, detail};
}

std::vector<double> open_grid(double lo, double hi, int n) {
  std::vector<double> xs;
  for (int k = 1; k <= n; ++k) xs.push_back(lo + (hi - lo) * k / (n + 1));
  return xs;
}

}  // namespace

std::vector<PropertyResult> run_verification(const BergerMetric& m, VerifyLevel level) {
  std::vector<PropertyResult> out;
  const double eta = m.eta();
  const BergerMetric tau_metric = eta > 0.0 ? m : BergerMetric(2.0 * m.i3(), m.i3());
  const double te = tau_metric.eta();
  const std::string tau_note =
      eta > 0.0 ? fmt::format("eta={:.6g}", te) : fmt::format("reference eta={:.6g}", te);

  // --- diameter ---
  const DiameterReport report = diameter_report(m);
  out.push_back(run("closed_form_matches_numeric", [&](Check& c) {
    c.bound(report.abs_gap / report.closed_form, 1e-8);
    return fmt::format("relative gap {:.3e}", c.worst);
  }));
  out.push_back(run("maximizer_matches_regime", [&](Check& c) {
    double expected = 0.0;
    if (report.regime == Regime::kMiddle) expected = 1.0;
    if (report.regime == Regime::kProlate) expected = 1.0 / eta;
    c.bound(std::abs(report.maximizer_pbar3 - expected), 1e-6);
    return fmt::format("{} maximizer {:.9f} expected {:.9f}", to_string(report.regime),
                       report.maximizer_pbar3, expected);
  }));
  out.push_back(run("diameter_within_bounds", [&](Check& c) {
    const double d = report.closed_form, r = std::sqrt(m.i1());
    c.require(kPi * r <= d && d <= 2.0 * kPi * r);
    return fmt::format("pi sqrt(I1)={:.6g} <= {:.6g} <= {:.6g}", kPi * r, d, 2 * kPi * r);
  }));
  out.push_back(run("diameter_scaling", [&](Check& c) {
    for (double s : {0.25, 4.0, 100.0}) {
      const double scaled = diameter_closed_form(BergerMetric(s * m.i1(), s * m.i3()));
      c.bound(std::abs(scaled - std::sqrt(s) * report.closed_form) / scaled, 1e-12);
    }
    return fmt::format("max relative error {:.3e}", c.worst);
  }));
  out.push_back(run("diameter_continuity", [&](Check& c) {
    for (double ratio : {1.0, 2.0}) {
      const double i1 = ratio * m.i3();
      const double d0 = diameter_closed_form(BergerMetric(i1, m.i3()));
      for (double s : {1.0 - 1e-9, 1.0 + 1e-9}) {
        c.bound(std::abs(diameter_closed_form(BergerMetric(i1 * s, m.i3())) - d0), 1e-6);
      }
    }
    return fmt::format("max jump {:.3e} at I1 = I3, 2 I3", c.worst);
  }));

  // --- profile ---
  const CutProfile profile = sample_profile(m, 101);
  out.push_back(run("profile_evenness", [&](Check& c) {
    const auto& rows = profile.rows;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const double a = rows[i].t_cut, b = rows[rows.size() - 1 - i].t_cut;
      c.bound(std::abs(a - b) / a, 1e-11);
    }
    return fmt::format("max relative asymmetry {:.3e}", c.worst);
  }));
  out.push_back(run("profile_upper_bound", [&](Check& c) {
    const double cap = 2.0 * kPi * std::sqrt(m.i1());
    for (const auto& r : profile.rows) c.bound(r.t_cut / cap, 1.0 + 1e-12);
    return fmt::format("max t_cut / (2 pi sqrt(I1)) = {:.15f}", c.worst);
  }));
  out.push_back(run("profile_maximum_is_diameter", [&](Check& c) {
    double mx = 0.0;
    for (const auto& r : profile.rows) mx = std::max(mx, r.t_cut);
    c.require(mx <= report.closed_form * (1.0 + 1e-10));
    return fmt::format("grid max {:.12g} vs diameter {:.12g}", mx, report.closed_form);
  }));

  // --- roots ---
  const auto pbars = open_grid(0.0, 1.0, 100);
  out.push_back(run("tau3_evenness", [&](Check& c) {
    for (double x : pbars) {
      c.bound(std::abs(tau3(te, ReducedMomentum(x)).value() -
                       tau3(te, ReducedMomentum(-x)).value()), 1e-11);
      c.bound(std::abs(tau_conj(te, ReducedMomentum(x)).value() -
                       tau_conj(te, ReducedMomentum(-x)).value()), 1e-11);
    }
    return fmt::format("{}: max asymmetry {:.3e}", tau_note, c.worst);
  }));
  out.push_back(run("tau3_strictly_decreasing", [&](Check& c) {
    double prev = tau3(te, ReducedMomentum(0.0)).value();
    for (double x : pbars) {
      const double v = tau3(te, ReducedMomentum(x)).value();
      c.require(v < prev);
      prev = v;
    }
    c.require(tau3(te, ReducedMomentum(1.0)).value() < prev);
    return tau_note;
  }));
  out.push_back(run("tau3_below_tau_conj", [&](Check& c) {
    for (double x : pbars) {
      const ReducedMomentum pb(x);
      c.require(tau3(te, pb).value() < tau_conj(te, pb).value());
    }
    return tau_note;
  }));
  out.push_back(run("tau_conj_range", [&](Check& c) {
    for (double x : pbars) {
      const double v = tau_conj(te, ReducedMomentum(x)).value();
      c.require(kPi / 2 < v && v <= kPi);
    }
    return tau_note;
  }));
  out.push_back(run("tau3_equation_residual", [&](Check& c) {
    for (double x : pbars) {
      c.bound(std::abs(maxwell_equation(te, x, tau3(te, ReducedMomentum(x)).value())), 1e-11);
    }
    return fmt::format("{}: max residual {:.3e}", tau_note, c.worst);
  }));
  out.push_back(run("tau3_derivative_matches_fd", [&](Check& c) {
    const double h = 1e-6;
    for (double x : open_grid(0.05, 0.95, 40)) {
      const double fd = (tau3(te, ReducedMomentum(x + h)).value() -
                         tau3(te, ReducedMomentum(x - h)).value()) / (2 * h);
      const double cf = tau3_derivative(te, ReducedMomentum(x));
      c.bound(std::abs(fd - cf) / std::abs(cf), 1e-5);
    }
    return fmt::format("{}: max relative error {:.3e}", tau_note, c.worst);
  }));
  out.push_back(run("t_cut_derivative_matches_fd", [&](Check& c) {
    const double h = 1e-6;
    for (double x : open_grid(0.05, 0.95, 40)) {
      if (std::abs(x - 1.0 / te) < 0.05) continue;
      const double fd = (t_cut(tau_metric, ReducedMomentum(x + h)) -
                         t_cut(tau_metric, ReducedMomentum(x - h))) / (2 * h);
      const double cf = t_cut_derivative(tau_metric, ReducedMomentum(x));
      c.bound(std::abs(fd - cf) / std::abs(cf), 1e-5);
    }
    return fmt::format("{}: max relative error {:.3e}", tau_note, c.worst);
  }));
  out.push_back(run("t_cut_derivative_sign", [&](Check& c) {
    const double crit = te > 1.0 ? 1.0 / te : 1.0;
    for (double x : open_grid(0.0, 1.0, 100)) {
      if (std::abs(x - crit) < 1e-3) continue;
      const double d = t_cut_derivative(tau_metric, ReducedMomentum(x));
      c.require(x < crit ? d > 0.0 : d < 0.0);
    }
    return fmt::format("{}: + on (0, {:.6g}), - after", tau_note, crit);
  }));

  if (level == VerifyLevel::kQuick) return out;

  // --- geodesic oracles ---
  out.push_back(run("round_calibration", [&](Check& c) {
    const BergerMetric round(m.i1(), m.i1());
    const double t = 2.0 * kPi * std::sqrt(m.i1());
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0), ang(0.0, 2.0 * kPi);
    for (int i = 0; i < 5; ++i) {
      const Momentum p0 = initial_momentum(round, ReducedMomentum(u(rng)), ang(rng));
      const UnitQuaternion q = exp_map(round, p0, t, t / 1e4);
      c.bound(q.distance(UnitQuaternion(-1, 0, 0, 0)), 1e-7);
    }
    return fmt::format("I={:.6g}: max distance to -identity {:.3e}", m.i1(), c.worst);
  }));
  out.push_back(run("geodesic_conservation", [&](Check& c) {
    for (double x : {0.0, 0.6, 1.0}) {
      const ReducedMomentum pb(x);
      const double t = 3.0 * t_cut(m, pb);
      const Trajectory tr = exp_map_trajectory(m, initial_momentum(m, pb, 0.3), t, t / 1e4);
      c.bound(std::max({tr.drift.hamiltonian, tr.drift.momentum_norm, tr.drift.p3}), 1e-9);
    }
    return fmt::format("max relative drift {:.3e}", c.worst);
  }));
  out.push_back(run("conjugate_time_agreement", [&](Check& c) {
    for (double x : {0.0, 0.3, 0.6, 0.9}) {
      const ReducedMomentum pb(x);
      const double expected =
          tau_conj(te, pb).to_time(tau_metric, momentum_norm(tau_metric, pb));
      const double numeric = conjugate_time_numeric(tau_metric, pb, 1.2 * expected);
      c.bound(std::abs(numeric - expected) / expected, 1e-3);
    }
    return fmt::format("{}: max relative error {:.3e}", tau_note, c.worst);
  }));
  out.push_back(run("cut_time_sandwich", [&](Check& c) {
    for (double x : {0.3, 0.9}) {
      const ReducedMomentum pb(x);
      const double tc = t_cut(m, pb);
      const Momentum p0 = initial_momentum(m, pb, 0.4);
      c.require(!shorter_path_search(m, p0, 0.9 * tc, 16).has_value());
      const auto found = shorter_path_search(m, p0, 1.1 * tc, 16);
      c.require(found.has_value() && found->arrival_time < 1.1 * tc);
    }
    return "pbar3 in {0.3, 0.9}: none at 0.9 t_cut, shorter at 1.1 t_cut";
  }));
  return out;
}

}  // namespace berger
