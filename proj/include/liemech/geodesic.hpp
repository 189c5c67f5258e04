#pragma once

#include "liemech/dynamics.hpp"

namespace liemech {

/// z-x-z Euler angles; theta near 0 or pi is the gimbal locus and is
/// rejected by chart-dependent operations.
struct EulerAngles {
  double psi, theta, phi;
};

/// R = exp(psi J3) exp(theta J1) exp(phi J3) with (J_i)_kl = eps_ikl.
Mat rotation_from_angles(const EulerAngles& q);

/// Matrix B(q) with omega' = B (psi_dot, theta_dot, phi_dot).
Mat euler_rate_matrix(const EulerAngles& q);

/// Intrinsic-frame angular velocity from angle rates.
Eigen::Vector3d body_angular_velocity(const EulerAngles& q,
                                      const Eigen::Vector3d& qdot);

/// Metric on laboratory angular-velocity components,
/// g(q) = R^-1 I R^-T with R^-1 = R^T.
Mat body_metric(const RigidBodyParams& I, const EulerAngles& q);

/// T = omega'^T I omega' / 2, from angle rates.
double kinetic_energy_body(const RigidBodyParams& I, const EulerAngles& q,
                           const Eigen::Vector3d& qdot);
/// T = omega^T g(q) omega / 2, from laboratory components.
double kinetic_energy_lab(const RigidBodyParams& I, const EulerAngles& q,
                          const Eigen::Vector3d& omega_lab);

struct GeodesicReport {
  double T = 0.0;
  double dt = 0.0;
  /// max |omega_euler - omega_christoffel|_inf over the run.
  double dev_euler_vs_christoffel = 0.0;
  /// deviation of the doubled-right-hand-side variant, reported only.
  double dev_factor2_vs_euler = 0.0;
};

/// Integrates (a) the Euler form g omega_dot = (g omega) x omega, (b) the
/// geodesic equation of the pullback metric on the Euler-angle chart with
/// finite-difference Christoffel symbols, and (c) the doubled variant
/// g eta_dot = 2 (g eta) x eta, all from the same initial state, and
/// reports the deviations of (b) and (c) from (a).  Throws if the motion
/// crosses the gimbal locus, naming the crossing time.
GeodesicReport geodesic_check(const RigidBodyParams& I,
                              const Eigen::Vector3d& omega0_lab, double T,
                              double dt);

/// The fixed interior chart point used by geodesic_check.
EulerAngles geodesic_check_base_angles();

}  // namespace liemech
