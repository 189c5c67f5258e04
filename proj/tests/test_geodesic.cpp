#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liemech/geodesic.hpp"
#include "support/oracles.hpp"

using namespace liemech;
using liemech::testing::random_vec;

namespace {

Eigen::Vector3d unhat_eps(const Mat& w) {
  // (J_i)_kl = eps_ikl, so w = sum w_i J_i has w_i = eps_ikl w_kl / 2
  return {0.5 * (w(1, 2) - w(2, 1)), 0.5 * (w(2, 0) - w(0, 2)),
          0.5 * (w(0, 1) - w(1, 0))};
}

}  // namespace

TEST_CASE("rotation_from_angles: identity and commuting z-factors") {
  CHECK((rotation_from_angles({0, 0, 0}) - Mat::Identity(3, 3))
            .lpNorm<Eigen::Infinity>() == 0.0);

  // theta = 0 collapses to a single rotation by psi + phi about axis 3
  Mat a = rotation_from_angles({0.4, 0.0, 0.9});
  Mat b = rotation_from_angles({1.3, 0.0, 0.0});
  CHECK((a - b).lpNorm<Eigen::Infinity>() <= 1e-14);

  std::mt19937_64 rng(3);
  for (int s = 0; s < 20; ++s) {
    Vec q = random_vec(3, rng, 3.0);
    Mat r = rotation_from_angles({q[0], q[1], q[2]});
    CHECK((r * r.transpose() - Mat::Identity(3, 3)).lpNorm<Eigen::Infinity>() <=
          1e-12);
    CHECK(r.determinant() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("body angular velocity formulas") {
  std::mt19937_64 rng(5);
  EulerAngles q{0.7, 1.1, -0.4};

  // pure psi rate: omega' = (0, 0, psi_dot)
  Eigen::Vector3d w = body_angular_velocity(q, {2.5, 0, 0});
  CHECK(w[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(w[1] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(w[2] == doctest::Approx(2.5).epsilon(1e-15));

  CHECK(body_angular_velocity(q, Eigen::Vector3d::Zero()).norm() == 0.0);

  // finite differences of R reproduce omega' via R_dot R^-1 = sum w_i' J_i
  const double h = 1e-6;
  for (int s = 0; s < 10; ++s) {
    Vec base = random_vec(3, rng, 1.2);
    Vec rate = random_vec(3, rng);
    EulerAngles qb{base[0], 1.0 + 0.3 * base[1], base[2]};
    Eigen::Vector3d qdot = rate;
    auto at = [&](double t) {
      return rotation_from_angles(
          {qb.psi + t * qdot[0], qb.theta + t * qdot[1], qb.phi + t * qdot[2]});
    };
    Mat rdot = (at(h) - at(-h)) / (2.0 * h);
    Eigen::Vector3d w_fd = unhat_eps(rdot * at(0.0).transpose());
    Eigen::Vector3d w_an = body_angular_velocity(qb, qdot);
    CHECK((w_fd - w_an).lpNorm<Eigen::Infinity>() <= 1e-6);
  }
}

TEST_CASE("metric: spherical body, and both kinetic-energy routes agree") {
  RigidBodyParams sphere(2, 2, 2);
  std::mt19937_64 rng(7);
  for (int s = 0; s < 5; ++s) {
    Vec q = random_vec(3, rng, 2.0);
    Mat g = body_metric(sphere, {q[0], q[1], q[2]});
    CHECK((g - 2.0 * Mat::Identity(3, 3)).lpNorm<Eigen::Infinity>() <= 1e-12);
  }

  RigidBodyParams I(3, 2, 1);
  for (int s = 0; s < 20; ++s) {
    Vec q = random_vec(3, rng, 2.0);
    EulerAngles qa{q[0], q[1], q[2]};
    Vec qdot = random_vec(3, rng);
    Mat R = rotation_from_angles(qa);
    Eigen::Vector3d wp = body_angular_velocity(qa, qdot);
    Eigen::Vector3d w = R.transpose() * wp;  // laboratory components
    double t_body = kinetic_energy_body(I, qa, qdot);
    double t_lab = kinetic_energy_lab(I, qa, w);
    CHECK(t_body == doctest::Approx(t_lab).epsilon(1e-12));
    // metric is symmetric positive definite
    Mat g = body_metric(I, qa);
    CHECK((g - g.transpose()).lpNorm<Eigen::Infinity>() <= 1e-13);
    CHECK(w.dot(g * w) > 0.0);
  }
}

TEST_CASE("laboratory angular momentum is conserved along free motion") {
  RigidBodyParams I(3, 2, 1);
  // integrate the Euler form through geodesic_check's (a)-route by reusing
  // the public report plus a direct small integration here
  LieAlgebra g3 = so3();
  auto h = rigid_body_hamiltonian(I);
  IntegratorConfig cfg;
  cfg.dt = 1e-3;

  // body momentum evolves by the Euler equations; laboratory momentum
  // L = R mu is constant when R follows a_dot = a hat(omega)
  Vec mu0(3);
  mu0 << 0.8, -0.1, 0.5;
  Mat a0 = rotation_from_angles(geodesic_check_base_angles());
  auto traj = liemech::testing::direct_tso3_flow(
      g3, h, {GroupElement{a0}, mu0}, 1.0, cfg.dt);
  Eigen::Vector3d L0 = a0 * mu0;
  for (size_t k = 0; k < traj.states.size(); k += 100) {
    Mat a = liemech::testing::chart_group_slot(traj, static_cast<int>(k));
    Eigen::Vector3d mu = traj.states[k].tail(3);
    CHECK((a * mu - L0).lpNorm<Eigen::Infinity>() <= 1e-6);
  }
}

TEST_CASE("g_dot identity along the motion") {
  RigidBodyParams I(3, 2, 1);
  // differentiate g(q(t)) along the Euler-form flow and compare with
  // g_dot_ij = eps_ikl w_k g_lj + eps_jkl w_k g_li
  LieAlgebra g3 = so3();
  auto h = rigid_body_hamiltonian(I);
  Vec mu0(3);
  mu0 << 0.7, 0.2, -0.4;
  Mat a0 = rotation_from_angles(geodesic_check_base_angles());
  const double dt = 1e-3;
  auto traj = liemech::testing::direct_tso3_flow(
      g3, h, {GroupElement{a0}, mu0}, 1.0, dt);

  auto eps = [](int a, int b, int c) {
    return static_cast<double>((a - b) * (b - c) * (c - a)) / 2.0;
  };
  for (size_t k = 2; k + 2 < traj.states.size(); k += 50) {
    auto metric_at = [&](size_t idx) -> Mat {
      Mat R = liemech::testing::chart_group_slot(traj, static_cast<int>(idx));
      // g = R I R^T in terms of the configuration R (laboratory metric);
      // with R = a (body-to-lab), g = a I a^T... use the trajectory's a
      Eigen::Vector3d iv(I.I1, I.I2, I.I3);
      return R * iv.asDiagonal() * R.transpose();
    };
    Mat gdot_fd = (metric_at(k + 1) - metric_at(k - 1)) / (2.0 * dt);
    Mat a = liemech::testing::chart_group_slot(traj, static_cast<int>(k));
    Eigen::Vector3d mu = traj.states[k].tail(3);
    Eigen::Vector3d omega_body = h.gradient(mu);
    Eigen::Vector3d w = a * omega_body;  // laboratory angular velocity
    Mat gk = metric_at(k);
    Mat gdot_formula = Mat::Zero(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int kk = 0; kk < 3; ++kk)
          for (int l = 0; l < 3; ++l)
            gdot_formula(i, j) += eps(i + 1, kk + 1, l + 1) * w[kk] * gk(l, j) +
                                  eps(j + 1, kk + 1, l + 1) * w[kk] * gk(l, i);
    CHECK((gdot_fd - gdot_formula).lpNorm<Eigen::Infinity>() <= 1e-5);
  }
}

TEST_CASE("geodesic_check: spherical inertia is motionless in omega") {
  RigidBodyParams sphere(2, 2, 2);
  GeodesicReport rep = geodesic_check(sphere, {0.3, -0.2, 0.4}, 0.5, 1e-3);
  CHECK(rep.dev_euler_vs_christoffel <= 1e-10);
  CHECK(rep.dev_factor2_vs_euler <= 1e-10);
}

TEST_CASE("geodesic_check: Euler form matches the Christoffel geodesic") {
  RigidBodyParams I(3, 2, 1);
  GeodesicReport rep = geodesic_check(I, {0.4, 0.3, 0.5}, 1.0, 1e-3);
  CHECK(rep.dev_euler_vs_christoffel <= 1e-4);
  // the doubled variant's deviation is reported, not asserted
  MESSAGE("factor-2 variant deviation over T=1: ", rep.dev_factor2_vs_euler);
  CHECK(rep.dev_factor2_vs_euler >= 0.0);
}

TEST_CASE("body-frame trajectory agrees with the dynamics module") {
  RigidBodyParams I(3, 2, 1);
  LieAlgebra g3 = so3();
  auto h = rigid_body_hamiltonian(I);
  const double dt = 1e-3, T = 1.0;

  // Euler-form state in the angle chart, tracked against mu = I omega'
  EulerAngles q0 = geodesic_check_base_angles();
  Eigen::Vector3d w0_lab(0.4, 0.3, 0.5);
  Mat R0 = rotation_from_angles(q0);
  Eigen::Vector3d w0_body = R0 * w0_lab;
  Vec mu0(3);
  mu0 << I.I1 * w0_body[0], I.I2 * w0_body[1], I.I3 * w0_body[2];

  IntegratorConfig cfg;
  cfg.dt = dt;
  auto rhs = [&](double, const Vec& x) { return lie_poisson_rhs(g3, h, x); };
  Trajectory mu_traj = integrate(rhs, mu0, T, cfg);

  // the same motion through the chart: R = a^T maps laboratory to body
  auto chart = liemech::testing::direct_tso3_flow(
      g3, h, {GroupElement{R0.transpose()}, mu0}, T, dt);
  for (size_t k = 0; k < mu_traj.states.size(); k += 100) {
    Eigen::Vector3d mu_chart = chart.states[k].tail(3);
    CHECK((mu_chart - mu_traj.states[k]).lpNorm<Eigen::Infinity>() <= 1e-6);
  }
}

TEST_CASE("gimbal crossing is detected and reported") {
  // spherical inertia spins uniformly about a fixed omega; choosing omega
  // along the bisector of the laboratory z axis and the initial body z axis
  // steers theta through zero within half a turn
  RigidBodyParams sphere(2, 2, 2);
  Mat R0 = rotation_from_angles(geodesic_check_base_angles());
  Eigen::Vector3d body_z_in_lab = R0.row(2).transpose();
  Eigen::Vector3d omega =
      2.0 * (Eigen::Vector3d::UnitZ() + body_z_in_lab).normalized();
  CHECK_THROWS_WITH_AS(geodesic_check(sphere, omega, 3.0, 1e-3),
                       doctest::Contains("gimbal"), std::runtime_error);
}
