#include "liemech/reconstruction.hpp"

#include <cmath>

#include "liemech/linalg.hpp"

namespace liemech {

Vec AlgebraCurve::at(double t) const {
  if (samples.empty()) throw std::invalid_argument("empty algebra curve");
  if (samples.size() == 1) return samples[0];
  double s = (t - t0) / dt;
  if (s <= 0.0) return samples.front();
  if (s >= static_cast<double>(samples.size() - 1)) return samples.back();
  int k = static_cast<int>(std::floor(s));
  double w = s - k;
  return (1.0 - w) * samples[k] + w * samples[k + 1];
}

GroupCurve solve_group_ode(const LieAlgebra& g,
                           const std::function<Vec(double)>& xi, const Mat& a0,
                           double T, double dt) {
  g.require_rep("solve_group_ode");
  if (!(T > 0.0 && dt > 0.0))
    throw std::invalid_argument("solve_group_ode: T and dt must be positive");
  const int steps = std::max(1, static_cast<int>(std::llround(T / dt)));
  GroupCurve out;
  out.t0 = 0.0;
  out.dt = dt;
  out.samples.reserve(steps + 1);
  Mat a = a0;
  out.samples.push_back(a);
  for (int k = 0; k < steps; ++k) {
    const double tm = (k + 0.5) * dt;
    a = a * g.group_exp(xi(tm), dt).matrix;
    out.samples.push_back(a);
  }
  return out;
}

GroupCurve solve_group_ode(const LieAlgebra& g, const AlgebraCurve& xi,
                           const Mat& a0) {
  const double T = xi.dt * (xi.samples.size() - 1);
  return solve_group_ode(
      g, [&xi](double t) { return xi.at(t); }, a0, T, xi.dt);
}

double membership_drift(const LieAlgebra& g, const GroupCurve& c) {
  double worst = 0.0;
  for (const Mat& a : c.samples)
    worst = std::max(worst, g.orthogonality_defect(a));
  return worst;
}

ChartVectorField collective_chart_field(const LieAlgebra& g,
                                        const CollectiveHamiltonian& h) {
  // H(a, mu) = h_c(J^r) = h_c(-mu); the chart flow is
  //   a^-1 a_dot = grad_mu H = -L_{h_c}(-mu),  mu_dot = -coad(grad_mu H, mu).
  auto xi_of = [&g, h](const Vec& mu) -> Vec { return -h.gradient(-mu); };
  ChartVectorField f;
  f.body_velocity = [xi_of](const ChartPoint& p) { return xi_of(p.mu); };
  f.mu_dot = [&g, xi_of](const ChartPoint& p) -> Vec {
    return -g.coad(xi_of(p.mu), p.mu);
  };
  return f;
}

ReconstructionResult reconstruct_collective(const LieAlgebra& g,
                                            const CollectiveHamiltonian& h,
                                            const ChartPoint& m0, double T,
                                            const IntegratorConfig& cfg) {
  g.require_rep("reconstruct_collective");
  g.check_membership(m0.a.matrix);
  g.require_dim(m0.mu, "reconstruct_collective");

  // Reduced trajectory of the chart mu slot, sampled at half steps so the
  // group stepper can use true midpoint values.
  auto xi_of = [&g, &h](const Vec& mu) -> Vec { return -h.gradient(-mu); };
  auto chart_rhs = [&g, xi_of](double, const Vec& mu) -> Vec {
    return -g.coad(xi_of(mu), mu);
  };
  const int steps = std::max(1, static_cast<int>(std::llround(T / cfg.dt)));
  IntegratorConfig half = cfg;
  half.dt = 0.5 * cfg.dt;
  Trajectory reduced_half = integrate(chart_rhs, m0.mu, steps * cfg.dt, half);

  ReconstructionResult out;
  out.t0 = 0.0;
  out.dt = cfg.dt;
  out.group_slot.t0 = 0.0;
  out.group_slot.dt = cfg.dt;

  Mat A = Mat::Identity(g.rep_dim(), g.rep_dim());
  GroupElement Ainv{A};
  for (int k = 0; k <= steps; ++k) {
    if (k > 0) {
      const Vec& mu_mid = reduced_half.states[2 * k - 1];
      A = A * g.group_exp(xi_of(mu_mid), cfg.dt).matrix;
      Ainv.matrix = A.inverse();
    }
    out.group_slot.samples.push_back(m0.a.matrix * A);
    Vec mu_k = k == 0 ? m0.mu : g.coAd(Ainv, m0.mu);
    out.mu_slot.push_back(mu_k);
    out.reduced.push_back(reduced_half.states[2 * k]);
    out.momentum_residual.push_back(
        (mu_k - reduced_half.states[2 * k]).lpNorm<Eigen::Infinity>());
    out.energy.push_back(h.value(-mu_k));
  }
  return out;
}

Mat isotropy_basis(const LieAlgebra& g, const Vec& mu, double rel_cutoff) {
  g.require_dim(mu, "isotropy_basis");
  Mat m(g.dim(), g.dim());
  for (int i = 0; i < g.dim(); ++i)
    m.col(i) = g.coad(Vec::Unit(g.dim(), i), mu);
  return kernel_basis(m, rel_cutoff);
}

namespace {

// Second-order difference of the group samples in body coordinates,
// a^-1 a_dot re-expressed on the basis.
Vec body_velocity_fd(const LieAlgebra& g, const ChartCurve& d, int k,
                     double* residual) {
  const int last = static_cast<int>(d.samples.size()) - 1;
  const Mat& a = d.samples[k].a.matrix;
  Mat da;
  if (k == 0)
    da = (-3.0 * d.samples[0].a.matrix + 4.0 * d.samples[1].a.matrix -
          d.samples[2].a.matrix) /
         (2.0 * d.dt);
  else if (k == last)
    da = (3.0 * d.samples[last].a.matrix - 4.0 * d.samples[last - 1].a.matrix +
          d.samples[last - 2].a.matrix) /
         (2.0 * d.dt);
  else
    da = (d.samples[k + 1].a.matrix - d.samples[k - 1].a.matrix) / (2.0 * d.dt);
  auto [coords, res] = g.coords_of_lenient(a.inverse() * da);
  if (residual) *residual = res;
  return coords;
}

Vec mu_dot_fd(const ChartCurve& d, int k) {
  const int last = static_cast<int>(d.samples.size()) - 1;
  if (k == 0)
    return (-3.0 * d.samples[0].mu + 4.0 * d.samples[1].mu - d.samples[2].mu) /
           (2.0 * d.dt);
  if (k == last)
    return (3.0 * d.samples[last].mu - 4.0 * d.samples[last - 1].mu +
            d.samples[last - 2].mu) /
           (2.0 * d.dt);
  return (d.samples[k + 1].mu - d.samples[k - 1].mu) / (2.0 * d.dt);
}

}  // namespace

LiftResult lift_reduced(const LieAlgebra& g, const Vec& mu_level,
                        const ChartCurve& d, const ChartVectorField& X_H,
                        double level_tol, double solve_tol) {
  g.require_rep("lift_reduced");
  g.require_dim(mu_level, "lift_reduced");
  if (d.samples.size() < 3)
    throw std::invalid_argument("lift_reduced needs at least three samples");

  // companion curve must stay in the J^l level set
  LiftResult out;
  for (const ChartPoint& p : d.samples) {
    double res =
        (moment_left(g, p) - mu_level).lpNorm<Eigen::Infinity>();
    out.max_level_residual = std::max(out.max_level_residual, res);
  }
  if (out.max_level_residual > level_tol)
    throw std::runtime_error("lift_reduced: companion curve leaves the level "
                             "set (residual " +
                             std::to_string(out.max_level_residual) + ")");

  Mat B = isotropy_basis(g, mu_level);
  if (B.cols() == 0)
    throw std::runtime_error("lift_reduced: trivial isotropy basis");

  out.xi.t0 = d.t0;
  out.xi.dt = d.dt;
  const int count = static_cast<int>(d.samples.size());
  for (int k = 0; k < count; ++k) {
    const ChartPoint& p = d.samples[k];
    double fd_res = 0.0;
    Vec beta = body_velocity_fd(g, d, k, &fd_res);
    Vec rhs = X_H.body_velocity(p) - beta;
    // Ad_{a^-1} xi = rhs with xi = B c
    Mat M = g.Ad_matrix_group(GroupElement{p.a.matrix.inverse()}) * B;
    Vec c = lsq_solve(M, rhs);
    double res = (M * c - rhs).lpNorm<Eigen::Infinity>();
    double mu_res =
        (X_H.mu_dot(p) - mu_dot_fd(d, k)).lpNorm<Eigen::Infinity>();
    out.max_solve_residual =
        std::max({out.max_solve_residual, res, mu_res, fd_res});
    out.xi.samples.push_back(B * c);
  }
  if (out.max_solve_residual > solve_tol)
    throw std::runtime_error(
        "lift_reduced: companion curve is inconsistent with the field "
        "(residual " +
        std::to_string(out.max_solve_residual) + ")");

  out.a = solve_group_ode(g, out.xi, Mat::Identity(g.rep_dim(), g.rep_dim()));
  out.c.t0 = d.t0;
  out.c.dt = d.dt;
  for (int k = 0; k < count; ++k)
    out.c.samples.push_back(ChartPoint{
        GroupElement{out.a.samples[k] * d.samples[k].a.matrix},
        d.samples[k].mu});
  return out;
}

}  // namespace liemech
