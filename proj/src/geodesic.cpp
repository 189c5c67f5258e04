#include "liemech/geodesic.hpp"

#include <cmath>

#include "liemech/expm.hpp"

namespace liemech {

namespace {

// (J_i)_kl = eps_ikl on (1,2,3); [J_i, J_k] = -eps_ikl J_l.
Mat epsilon_generator(int i) {
  Mat m = Mat::Zero(3, 3);
  auto eps = [](int a, int b, int c) { return (a - b) * (b - c) * (c - a) / 2; };
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l) m(k - 1, l - 1) = eps(i, k, l);
  return m;
}

const Mat kJ1 = epsilon_generator(1);
const Mat kJ3 = epsilon_generator(3);

Eigen::Vector3d inertia_vec(const RigidBodyParams& I) {
  return {I.I1, I.I2, I.I3};
}

void require_off_gimbal(double theta, double t) {
  if (std::abs(std::sin(theta)) < 1e-6)
    throw std::runtime_error("gimbal lock crossed at t = " + std::to_string(t));
}

}  // namespace

EulerAngles geodesic_check_base_angles() { return {0.4, 1.2, 0.7}; }

Mat rotation_from_angles(const EulerAngles& q) {
  return expm(q.psi * kJ3) * expm(q.theta * kJ1) * expm(q.phi * kJ3);
}

Mat euler_rate_matrix(const EulerAngles& q) {
  const double sp = std::sin(q.psi), cp = std::cos(q.psi);
  const double st = std::sin(q.theta), ct = std::cos(q.theta);
  Mat b(3, 3);
  // columns: psi_dot, theta_dot, phi_dot
  b << 0.0, cp, st * sp,
       0.0, -sp, st * cp,
       1.0, 0.0, ct;
  return b;
}

Eigen::Vector3d body_angular_velocity(const EulerAngles& q,
                                      const Eigen::Vector3d& qdot) {
  return euler_rate_matrix(q) * qdot;
}

Mat body_metric(const RigidBodyParams& I, const EulerAngles& q) {
  Mat R = rotation_from_angles(q);
  return R.transpose() * inertia_vec(I).asDiagonal() * R;
}

double kinetic_energy_body(const RigidBodyParams& I, const EulerAngles& q,
                           const Eigen::Vector3d& qdot) {
  Eigen::Vector3d wp = body_angular_velocity(q, qdot);
  Eigen::Vector3d iv = inertia_vec(I);
  return 0.5 * (iv[0] * wp[0] * wp[0] + iv[1] * wp[1] * wp[1] +
                iv[2] * wp[2] * wp[2]);
}

double kinetic_energy_lab(const RigidBodyParams& I, const EulerAngles& q,
                          const Eigen::Vector3d& omega_lab) {
  return 0.5 * omega_lab.dot(body_metric(I, q) * omega_lab);
}

namespace {

EulerAngles angles_of(const Vec& y) { return {y[0], y[1], y[2]}; }

// angle rates from laboratory angular velocity: qdot = B^-1 R omega
Eigen::Vector3d rates_from_lab(const EulerAngles& q,
                               const Eigen::Vector3d& omega_lab) {
  Mat R = rotation_from_angles(q);
  Eigen::Vector3d wp = R * omega_lab;
  return euler_rate_matrix(q).partialPivLu().solve(wp);
}

// pullback metric on angle rates, G = B^T I B
Mat chart_metric(const RigidBodyParams& I, const EulerAngles& q) {
  Mat B = euler_rate_matrix(q);
  return B.transpose() * inertia_vec(I).asDiagonal() * B;
}

}  // namespace

GeodesicReport geodesic_check(const RigidBodyParams& I,
                              const Eigen::Vector3d& omega0_lab, double T,
                              double dt) {
  if (!(T > 0.0 && dt > 0.0))
    throw std::invalid_argument("geodesic_check: T and dt must be positive");
  const EulerAngles q0 = geodesic_check_base_angles();

  // (a) Euler form: y = (q, omega_lab), g omega_dot = (g omega) x omega.
  auto euler_rhs_chart = [&](double t, const Vec& y) -> Vec {
    EulerAngles q = angles_of(y);
    require_off_gimbal(q.theta, t);
    Eigen::Vector3d w = y.segment<3>(3);
    Mat g = body_metric(I, q);
    Eigen::Vector3d L = g * w;
    Eigen::Vector3d wdot = g.ldlt().solve(L.cross(w));
    Vec out(6);
    out << rates_from_lab(q, w), wdot;
    return out;
  };

  // (b) Christoffel geodesic of the pullback metric on the angle chart.
  const double h = 1e-5;
  auto geodesic_rhs = [&](double t, const Vec& y) -> Vec {
    EulerAngles q = angles_of(y);
    require_off_gimbal(q.theta, t);
    Eigen::Vector3d v = y.segment<3>(3);
    Mat dG[3];
    for (int l = 0; l < 3; ++l) {
      Vec qp = y.head(3), qm = y.head(3);
      qp[l] += h;
      qm[l] -= h;
      dG[l] = (chart_metric(I, angles_of(qp)) - chart_metric(I, angles_of(qm))) /
              (2.0 * h);
    }
    // sum_ij Gamma^m_ij v_i v_j = G^-1 [ sum_j (dG[j] v) v_j - (v^T dG[l] v)/2 ]
    Eigen::Vector3d b;
    for (int l = 0; l < 3; ++l) {
      double acc = 0.0;
      for (int j = 0; j < 3; ++j) acc += (dG[j] * v)(l)*v[j];
      b[l] = acc - 0.5 * v.dot(dG[l] * v);
    }
    Eigen::Vector3d qdd = -chart_metric(I, q).ldlt().solve(b);
    Vec out(6);
    out << v, qdd;
    return out;
  };

  // (c) the doubled variant g eta_dot = 2 (g eta) x eta.
  auto factor2_rhs = [&](double t, const Vec& y) -> Vec {
    EulerAngles q = angles_of(y);
    require_off_gimbal(q.theta, t);
    Eigen::Vector3d eta = y.segment<3>(3);
    Mat g = body_metric(I, q);
    Eigen::Vector3d geta = g * eta;
    Eigen::Vector3d etadot = g.ldlt().solve(2.0 * geta.cross(eta));
    Vec out(6);
    out << rates_from_lab(q, eta), etadot;
    return out;
  };

  IntegratorConfig cfg;
  cfg.method = Method::Rk4;
  cfg.dt = dt;

  Vec ya0(6), yb0(6);
  ya0 << q0.psi, q0.theta, q0.phi, omega0_lab;
  yb0 << q0.psi, q0.theta, q0.phi, rates_from_lab(q0, omega0_lab);

  Trajectory ta = integrate(euler_rhs_chart, ya0, T, cfg);
  Trajectory tb = integrate(geodesic_rhs, yb0, T, cfg);
  Trajectory tc = integrate(factor2_rhs, ya0, T, cfg);

  // the pointwise guard in the right-hand sides can be straddled by a
  // finite step; scan the sampled theta history for a transversal crossing
  for (const Trajectory* tr : {&ta, &tb, &tc}) {
    for (size_t k = 0; k + 1 < tr->states.size(); ++k) {
      const double s0 = std::sin(tr->states[k][1]);
      const double s1 = std::sin(tr->states[k + 1][1]);
      const double jump = std::abs(tr->states[k + 1][1] - tr->states[k][1]);
      if (!std::isfinite(s1) || std::abs(s1) < 1e-6 ||
          (s0 > 0) != (s1 > 0) || jump > 0.5)
        throw std::runtime_error("gimbal lock crossed at t = " +
                                 std::to_string((k + 1) * dt));
    }
  }

  GeodesicReport rep;
  rep.T = T;
  rep.dt = dt;
  for (size_t k = 0; k < ta.states.size(); ++k) {
    Eigen::Vector3d wa = ta.states[k].segment<3>(3);
    EulerAngles qb = angles_of(tb.states[k]);
    Eigen::Vector3d wb =
        rotation_from_angles(qb).transpose() *
        body_angular_velocity(qb, tb.states[k].segment<3>(3));
    Eigen::Vector3d wc = tc.states[k].segment<3>(3);
    rep.dev_euler_vs_christoffel =
        std::max(rep.dev_euler_vs_christoffel,
                 (wa - wb).lpNorm<Eigen::Infinity>());
    rep.dev_factor2_vs_euler = std::max(
        rep.dev_factor2_vs_euler, (wa - wc).lpNorm<Eigen::Infinity>());
  }
  return rep;
}

}  // namespace liemech
