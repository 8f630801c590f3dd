#include "berger/geodesic.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <fmt/format.h>

namespace berger {
namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Vector3d as_vector(const Momentum& p) { return {p.p1, p.p2, p.p3}; }
Momentum as_momentum(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }

double relative_change(double now, double ref) {
  const double scale = std::abs(ref) > 0.0 ? std::abs(ref) : 1.0;
  return std::abs(now - ref) / scale;
}

// Rescales p onto the level set H = 1/2.
Eigen::Vector3d to_unit_level(const BergerMetric& m, const Eigen::Vector3d& p) {
  return p / std::sqrt(2.0 * m.hamiltonian(p.x(), p.y(), p.z()));
}

void check_exp_arguments(const BergerMetric& m, const Momentum& p0, double t, double step) {
  if (std::abs(p0.hamiltonian(m) - 0.5) > 1e-10) {
    throw ValidationError(
        fmt::format("initial momentum must satisfy H = 1/2 (got H = {})", p0.hamiltonian(m)));
  }
  if (!(t >= 0.0) || !std::isfinite(t)) throw ValidationError("time must be finite and >= 0");
  if (t > 0.0 && !(step > 0.0 && step <= t / 1000.0)) {
    throw ValidationError(fmt::format("step must lie in (0, t/1000] (got {} for t = {})", step, t));
  }
}

double radical_inverse(int index, int base) {
  double f = 1.0, r = 0.0;
  for (int i = index; i > 0; i /= base) {
    f /= base;
    r += f * (i % base);
  }
  return r;
}

}  // namespace

Momentum initial_momentum(const BergerMetric& m, ReducedMomentum pb, double phi) {
  const double n = momentum_norm(m, pb);
  const double x = pb.value();
  const double s = std::sqrt(1.0 - x * x) * n;
  return {s * std::cos(phi), s * std::sin(phi), x * n};
}

Eigen::Vector3d angular_velocity(const BergerMetric& m, const Momentum& p) noexcept {
  return {p.p1 / m.i1(), p.p2 / m.i1(), p.p3 / m.i3()};
}

GeodesicState rk4_step(const BergerMetric& m, const GeodesicState& s, double h) noexcept {
  struct Deriv {
    UnitQuaternion dq;
    Eigen::Vector3d dp;
  };
  const auto rhs = [&m](const UnitQuaternion& q, const Eigen::Vector3d& p) {
    const Eigen::Vector3d omega = angular_velocity(m, as_momentum(p));
    return Deriv{mul_pure(q, 0.5 * omega), p.cross(omega)};
  };
  const auto shift = [](const UnitQuaternion& q, const UnitQuaternion& d, double c) {
    return UnitQuaternion(q.w() + c * d.w(), q.x() + c * d.x(), q.y() + c * d.y(),
                          q.z() + c * d.z());
  };

  const Eigen::Vector3d p = as_vector(s.p);
  const Deriv k1 = rhs(s.q, p);
  const Deriv k2 = rhs(shift(s.q, k1.dq, h / 2), p + h / 2 * k1.dp);
  const Deriv k3 = rhs(shift(s.q, k2.dq, h / 2), p + h / 2 * k2.dp);
  const Deriv k4 = rhs(shift(s.q, k3.dq, h), p + h * k3.dp);

  const auto combine = [h](double a, double b, double c, double d) {
    return h / 6.0 * (a + 2.0 * b + 2.0 * c + d);
  };
  const UnitQuaternion q(
      s.q.w() + combine(k1.dq.w(), k2.dq.w(), k3.dq.w(), k4.dq.w()),
      s.q.x() + combine(k1.dq.x(), k2.dq.x(), k3.dq.x(), k4.dq.x()),
      s.q.y() + combine(k1.dq.y(), k2.dq.y(), k3.dq.y(), k4.dq.y()),
      s.q.z() + combine(k1.dq.z(), k2.dq.z(), k3.dq.z(), k4.dq.z()));
  const Eigen::Vector3d pn = p + h / 6.0 * (k1.dp + 2.0 * k2.dp + 2.0 * k3.dp + k4.dp);
  return {q.normalized(), as_momentum(pn), s.t + h};
}

Trajectory integrate_geodesic(const BergerMetric& m, const Momentum& p0, double t, long n_steps) {
  GeodesicState s{UnitQuaternion::identity(), p0, 0.0};
  ConservationDrift drift;
  if (t == 0.0 || n_steps <= 0) return {s, drift};

  const double h0 = p0.hamiltonian(m);
  const double n0 = p0.norm();
  const double h = t / static_cast<double>(n_steps);
  for (long k = 0; k < n_steps; ++k) {
    s = rk4_step(m, s, h);
    drift.hamiltonian = std::max(drift.hamiltonian, relative_change(s.p.hamiltonian(m), h0));
    drift.momentum_norm = std::max(drift.momentum_norm, relative_change(s.p.norm(), n0));
    // p3 is measured against |p| since it may start at zero.
    drift.p3 = std::max(drift.p3, std::abs(s.p.p3 - p0.p3) / n0);
  }
  s.t = t;
  return {s, drift};
}

Trajectory exp_map_trajectory(const BergerMetric& m, const Momentum& p0, double t, double step) {
  check_exp_arguments(m, p0, t, step);
  if (t == 0.0) return {GeodesicState{UnitQuaternion::identity(), p0, 0.0}, {}};
  const long n = static_cast<long>(std::ceil(t / step - 1e-9));
  Trajectory tr = integrate_geodesic(m, p0, t, n);
  if (tr.drift.hamiltonian > 1e-6) {
    throw NormalizationError(
        fmt::format("Hamiltonian drift {} exceeds 1e-6 relative", tr.drift.hamiltonian));
  }
  return tr;
}

UnitQuaternion exp_map(const BergerMetric& m, const Momentum& p0, double t, double step) {
  return exp_map_trajectory(m, p0, t, step).end.q;
}

// --- conjugate points -------------------------------------------------------

namespace {

// Base geodesic followed by +/- perturbations along two level-set directions.
using Bundle = std::array<GeodesicState, 5>;

Bundle advance(const BergerMetric& m, Bundle b, double dt, int steps) {
  const double h = dt / steps;
  for (auto& s : b) {
    for (int i = 0; i < steps; ++i) s = rk4_step(m, s, h);
  }
  return b;
}

// det of the endpoint Jacobian in log coordinates at the base endpoint,
// scaled by |velocity| t^2 so that Jacobi-field growth near t = 0 cancels.
double jacobian_measure(const BergerMetric& m, const Bundle& b, double eps) {
  const UnitQuaternion ref_inv = b[0].q.conjugate();
  Eigen::Matrix3d jac;
  for (int i = 0; i < 2; ++i) {
    const Eigen::Vector3d plus = (ref_inv * b[1 + 2 * i].q).log();
    const Eigen::Vector3d minus = (ref_inv * b[2 + 2 * i].q).log();
    jac.col(i) = (plus - minus) / (2.0 * eps);
  }
  const Eigen::Vector3d vel = 0.5 * angular_velocity(m, b[0].p);
  jac.col(2) = vel;
  const double t = b[0].t;
  return jac.determinant() / (vel.norm() * t * t);
}

}  // namespace

double conjugate_time_numeric(const BergerMetric& m, ReducedMomentum pb, double t_max,
                              const ConjugateSearchOptions& opt) {
  if (!(m.eta() > 0.0)) {
    throw DomainError(fmt::format("conjugate_time_numeric requires eta > 0 (got {})", m.eta()));
  }
  if (!(t_max > 0.0)) throw ValidationError("t_max must be positive");

  const Momentum p0 = initial_momentum(m, pb, opt.phi);
  const Eigen::Vector3d base = as_vector(p0);
  const Eigen::Vector3d grad = angular_velocity(m, p0);
  const Eigen::Vector3d pick =
      std::abs(grad.normalized().x()) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
  const Eigen::Vector3d u1 = grad.cross(pick).normalized();
  const Eigen::Vector3d u2 = grad.cross(u1).normalized();

  const double eps = opt.perturbation;
  Bundle bundle;
  bundle[0] = {UnitQuaternion::identity(), p0, 0.0};
  const std::array<Eigen::Vector3d, 4> shifts{eps * u1, -eps * u1, eps * u2, -eps * u2};
  for (int i = 0; i < 4; ++i) {
    bundle[1 + i] = {UnitQuaternion::identity(), as_momentum(to_unit_level(m, base + shifts[i])),
                     0.0};
  }

  const double dt = t_max / opt.grid_points;
  const int sub = opt.substeps;
  const auto measure_at = [&](const Bundle& from, double t) {
    return jacobian_measure(m, advance(m, from, t - from[0].t, sub), eps);
  };

  // Grid history: two previous bundles and measures.
  Bundle prev2 = bundle, prev1 = bundle;
  double mu2 = 0.0, mu1 = 0.0;
  double mu_max = 0.0;
  for (int k = 1; k <= opt.grid_points; ++k) {
    const Bundle cur = advance(m, prev1, dt, sub);
    const double mu = jacobian_measure(m, cur, eps);
    mu_max = std::max(mu_max, std::abs(mu));

    // Double conjugate point: |measure| touches zero without changing sign.
    if (k >= 3 && std::abs(mu1) < std::abs(mu2) && std::abs(mu1) <= std::abs(mu) &&
        std::abs(mu1) < 1e-3 * mu_max) {
      const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
      double a = prev2[0].t, b = cur[0].t;
      double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
      double f1 = std::abs(measure_at(prev2, x1)), f2 = std::abs(measure_at(prev2, x2));
      while (b - a > opt.time_tol) {
        if (f1 < f2) {
          b = x2; x2 = x1; f2 = f1;
          x1 = b - inv_phi * (b - a);
          f1 = std::abs(measure_at(prev2, x1));
        } else {
          a = x1; x1 = x2; f1 = f2;
          x2 = a + inv_phi * (b - a);
          f2 = std::abs(measure_at(prev2, x2));
        }
      }
      const double t_min = 0.5 * (a + b);
      if (std::abs(measure_at(prev2, t_min)) < 1e-6 * mu_max) return t_min;
    }

    if (k >= 2 && ((mu > 0.0) != (mu1 > 0.0))) {
      double a = prev1[0].t, b = cur[0].t;
      const bool positive_at_a = mu1 > 0.0;
      while (b - a > opt.time_tol) {
        const double mid = 0.5 * (a + b);
        if ((measure_at(prev1, mid) > 0.0) == positive_at_a) {
          a = mid;
        } else {
          b = mid;
        }
      }
      return 0.5 * (a + b);
    }

    prev2 = prev1;
    prev1 = cur;
    mu2 = mu1;
    mu1 = mu;
  }
  throw NoConjugatePoint(fmt::format("no conjugate point in (0, {}]", t_max));
}

// --- shooting ---------------------------------------------------------------

std::optional<ShorterPath> shorter_path_search(const BergerMetric& m, const Momentum& p0,
                                               double t, int attempts,
                                               const ShootingOptions& opt) {
  if (attempts < 10) throw ValidationError("shorter_path_search needs at least 10 attempts");
  if (!(t > 0.0)) throw ValidationError("reference time must be positive");

  const UnitQuaternion target_inv =
      exp_map(m, p0, t, t / static_cast<double>(opt.steps)).conjugate();

  // An unconstrained tangent vector X encodes both direction and length:
  // the unit-speed momentum is X / sqrt(2 H(X)) and the length sqrt(2 H(X)).
  const auto length_of = [&m](const Eigen::Vector3d& x) {
    return std::sqrt(2.0 * m.hamiltonian(x.x(), x.y(), x.z()));
  };
  const auto residual = [&](const Eigen::Vector3d& x) -> Eigen::Vector3d {
    const double len = length_of(x);
    if (!(len > 0.0)) return (target_inv).log();
    const Trajectory tr = integrate_geodesic(m, as_momentum(x / len), len, opt.steps);
    return (target_inv * tr.end.q).log();
  };

  std::optional<ShorterPath> best;
  for (int k = 0; k < attempts; ++k) {
    const double seed_pbar = 2.0 * radical_inverse(k + 1, 2) - 1.0;
    const double seed_phi = 2.0 * kPi * radical_inverse(k + 1, 3);
    // Seed 0 starts at 0.95 t; later seeds spread their initial length over
    // (0.05 t, 0.95 t] so branches much shorter than t are reachable.
    const double seed_length = (0.95 - 0.9 * radical_inverse(k, 5)) * t;
    Eigen::Vector3d x =
        seed_length * as_vector(initial_momentum(m, ReducedMomentum(seed_pbar), seed_phi));

    Eigen::Vector3d r = residual(x);
    double cost = r.squaredNorm();
    double lambda = 1e-3;
    for (int it = 0; it < opt.max_iterations && std::sqrt(cost) > 1e-3 * opt.residual_tol; ++it) {
      Eigen::Matrix3d jac;
      const double h = 1e-7 * std::max(1.0, x.norm());
      for (int j = 0; j < 3; ++j) {
        Eigen::Vector3d e = Eigen::Vector3d::Zero();
        e[j] = h;
        jac.col(j) = (residual(x + e) - residual(x - e)) / (2.0 * h);
      }
      const Eigen::Matrix3d jtj = jac.transpose() * jac;
      const Eigen::Vector3d grad = jac.transpose() * r;
      bool improved = false;
      while (lambda < 1e12) {
        Eigen::Matrix3d a = jtj;
        a.diagonal() *= (1.0 + lambda);
        const Eigen::Vector3d step = a.ldlt().solve(-grad);
        const Eigen::Vector3d x_new = x + step;
        const Eigen::Vector3d r_new = residual(x_new);
        if (r_new.squaredNorm() < cost) {
          x = x_new;
          r = r_new;
          cost = r.squaredNorm();
          lambda = std::max(lambda / 3.0, 1e-12);
          improved = true;
          break;
        }
        lambda *= 4.0;
      }
      if (!improved) break;
    }

    const double len = length_of(x);
    if (std::sqrt(cost) < opt.residual_tol && len > 0.0 && len < t - opt.margin) {
      if (!best || len < best->arrival_time) {
        best = ShorterPath{as_momentum(x / len), len, k};
      }
    }
  }
  return best;
}

}  // namespace berger
