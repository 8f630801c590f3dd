#pragma once

#include <optional>

#include "berger/model.hpp"
#include "berger/quaternion.hpp"

namespace berger {

/// Point on the geodesic flow: configuration, body momentum and arclength.
struct GeodesicState {
  UnitQuaternion q;
  Momentum p;
  double t = 0.0;
};

/// Maximum relative drift of the conserved quantities along a trajectory.
struct ConservationDrift {
  double hamiltonian = 0.0;
  double momentum_norm = 0.0;
  double p3 = 0.0;
};

struct Trajectory {
  GeodesicState end;
  ConservationDrift drift;
};

/// Unit-speed initial momentum with the given axis component and azimuth.
Momentum initial_momentum(const BergerMetric& m, ReducedMomentum pb, double phi);

/// Body angular velocity I^{-1} p.
Eigen::Vector3d angular_velocity(const BergerMetric& m, const Momentum& p) noexcept;

/// One classical RK4 step of
///   dp/dt = p x Omega,  dq/dt = q (Omega/2),  Omega = I^{-1} p,
/// followed by quaternion renormalization.
GeodesicState rk4_step(const BergerMetric& m, const GeodesicState& s, double h) noexcept;

/// Integrates from the identity for time t with exactly n_steps equal steps.
/// Momentum level is not constrained; the drift is measured relative to the
/// initial values.
Trajectory integrate_geodesic(const BergerMetric& m, const Momentum& p0, double t, long n_steps);

/// Endpoint of the unit-speed geodesic from the identity with initial
/// momentum p0, integrated with the largest equal step not exceeding `step`.
///
/// Throws ValidationError unless H(p0) = 1/2 within 1e-10, t >= 0 and
/// 0 < step <= t/1000 (for t > 0). Throws NormalizationError if H drifts by
/// more than 1e-6 relative.
UnitQuaternion exp_map(const BergerMetric& m, const Momentum& p0, double t, double step);

/// Same checks as exp_map, but returns the final state and measured drift.
Trajectory exp_map_trajectory(const BergerMetric& m, const Momentum& p0, double t, double step);

struct ConjugateSearchOptions {
  int grid_points = 400;
  int substeps = 10;          // RK4 steps per grid cell
  double perturbation = 1e-6;  // central-difference step on the momentum
  double time_tol = 1e-10;
  double phi = 0.0;
};

/// First conjugate time along the geodesic with reduced momentum pb, found
/// from the Jacobian of (time, two level-set perturbations of p0) -> endpoint
/// in logarithmic coordinates at the endpoint. Sign changes of the
/// determinant mark simple conjugate points; a vanishing local minimum marks
/// a double one (pbar3 = +-1).
///
/// Throws DomainError for eta <= 0 and NoConjugatePoint if none is found in
/// (0, t_max].
double conjugate_time_numeric(const BergerMetric& m, ReducedMomentum pb, double t_max,
                              const ConjugateSearchOptions& opt = {});

struct ShorterPath {
  Momentum p;          // unit-speed initial momentum
  double arrival_time;
  int seed_index;
};

struct ShootingOptions {
  long steps = 2000;           // RK4 steps per shot, independent of its length
  int max_iterations = 100;
  double residual_tol = 1e-9;  // accepted endpoint mismatch in log coordinates
  double margin = 1e-4;        // required gain over the reference time
};

/// Looks for a geodesic from the identity to exp_map(p0, t) that is shorter
/// than t by more than opt.margin, via damped least squares from `attempts`
/// Halton-sequence seeds over (pbar3, phi) with initial length 0.95 t.
/// Returns the shortest one found (ties to the lowest seed index).
/// Throws ValidationError if attempts < 10.
std::optional<ShorterPath> shorter_path_search(const BergerMetric& m, const Momentum& p0,
                                               double t, int attempts,
                                               const ShootingOptions& opt = {});

}  // namespace berger
