#include "liemech/dynamics.hpp"

#include <cmath>
#include <numeric>

namespace liemech {

RigidBodyParams::RigidBodyParams(double i1, double i2, double i3)
    : I1(i1), I2(i2), I3(i3) {
  if (!(i1 > 0.0 && i2 > 0.0 && i3 > 0.0))
    throw std::invalid_argument("moments of inertia must be positive");
}

CollectiveHamiltonian rigid_body_hamiltonian(const RigidBodyParams& I) {
  CollectiveHamiltonian h;
  h.analytic_gradient = true;
  h.value = [I](const Vec& mu) {
    return 0.5 * (mu[0] * mu[0] / I.I1 + mu[1] * mu[1] / I.I2 +
                  mu[2] * mu[2] / I.I3);
  };
  h.gradient = [I](const Vec& mu) {
    Vec g(3);
    g << mu[0] / I.I1, mu[1] / I.I2, mu[2] / I.I3;
    return g;
  };
  return h;
}

CollectiveHamiltonian heavy_top_hamiltonian(const RigidBodyParams& I,
                                            const Eigen::Vector3d& chi) {
  CollectiveHamiltonian h;
  h.analytic_gradient = true;
  h.value = [I, chi](const Vec& mu) {
    return 0.5 * (mu[0] * mu[0] / I.I1 + mu[1] * mu[1] / I.I2 +
                  mu[2] * mu[2] / I.I3) +
           chi.dot(mu.segment<3>(3));
  };
  h.gradient = [I, chi](const Vec& mu) {
    Vec g(6);
    g << mu[0] / I.I1, mu[1] / I.I2, mu[2] / I.I3, chi[0], chi[1], chi[2];
    return g;
  };
  return h;
}

CollectiveHamiltonian with_fd_gradient(std::function<double(const Vec&)> value) {
  CollectiveHamiltonian h;
  h.analytic_gradient = false;
  h.value = value;
  h.gradient = [value](const Vec& mu) {
    const double step = 1e-6 * (1.0 + mu.norm());
    Vec g(mu.size());
    for (int i = 0; i < mu.size(); ++i) {
      Vec p = mu, m = mu;
      p[i] += step;
      m[i] -= step;
      g[i] = (value(p) - value(m)) / (2.0 * step);
    }
    return g;
  };
  return h;
}

Vec lie_poisson_rhs(const LieAlgebra& g, const CollectiveHamiltonian& h,
                    const Vec& mu) {
  g.require_dim(mu, "lie_poisson_rhs");
  return kLiePoissonSign * g.coad(h.gradient(mu), mu);
}

Eigen::Vector3d euler_rhs(const RigidBodyParams& I,
                          const Eigen::Vector3d& mu) {
  return {mu[1] * mu[2] * (1.0 / I.I3 - 1.0 / I.I2),
          mu[0] * mu[2] * (1.0 / I.I1 - 1.0 / I.I3),
          mu[0] * mu[1] * (1.0 / I.I2 - 1.0 / I.I1)};
}

namespace {

Vec rk4_step(const std::function<Vec(double, const Vec&)>& f, double t,
             const Vec& x, double dt) {
  Vec k1 = f(t, x);
  Vec k2 = f(t + 0.5 * dt, x + 0.5 * dt * k1);
  Vec k3 = f(t + 0.5 * dt, x + 0.5 * dt * k2);
  Vec k4 = f(t + dt, x + dt * k3);
  return x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Vec midpoint_step(const std::function<Vec(double, const Vec&)>& f, double t,
                  const Vec& x, double dt, const IntegratorConfig& cfg,
                  int step_index) {
  const int n = static_cast<int>(x.size());
  const double tm = t + 0.5 * dt;
  Vec y = rk4_step(f, t, x, dt);  // predictor
  auto residual = [&](const Vec& yy) -> Vec {
    return yy - x - dt * f(tm, 0.5 * (x + yy));
  };
  double best = residual(y).lpNorm<Eigen::Infinity>();
  for (int it = 0; it < cfg.newton_max_iter; ++it) {
    Vec r = residual(y);
    double rn = r.lpNorm<Eigen::Infinity>();
    // converge to machine residual; the nominal tolerance is the floor
    if (rn <= 1e-3 * cfg.newton_tol * (1.0 + x.lpNorm<Eigen::Infinity>()))
      return y;
    Mat J(n, n);
    const double fd = 1e-7 * (1.0 + y.norm());
    for (int c = 0; c < n; ++c) {
      Vec yp = y, ym = y;
      yp[c] += fd;
      ym[c] -= fd;
      J.col(c) = (residual(yp) - residual(ym)) / (2.0 * fd);
    }
    Vec dy = J.partialPivLu().solve(r);
    y -= dy;
    double rn2 = residual(y).lpNorm<Eigen::Infinity>();
    if (rn2 >= best && rn <= cfg.newton_tol) return y;  // stagnated, good enough
    best = std::min(best, rn2);
  }
  if (residual(y).lpNorm<Eigen::Infinity>() > cfg.newton_tol)
    throw std::runtime_error("implicit midpoint: Newton failed at step " +
                             std::to_string(step_index));
  return y;
}

}  // namespace

Trajectory integrate(const std::function<Vec(double, const Vec&)>& rhs,
                     const Vec& x0, double T, const IntegratorConfig& cfg,
                     const std::vector<Observer>& observers) {
  if (!(T > 0.0)) throw std::invalid_argument("integrate: T must be positive");
  if (!(cfg.dt > 0.0)) throw std::invalid_argument("integrate: dt must be positive");
  const int steps = std::max(1, static_cast<int>(std::llround(T / cfg.dt)));

  Trajectory traj;
  traj.t0 = 0.0;
  traj.dt = cfg.dt;
  traj.steps = steps;
  traj.states.reserve(steps + 1);
  for (const auto& obs : observers) traj.diagnostic_names.push_back(obs.first);

  auto record = [&](double t, const Vec& x) {
    traj.states.push_back(x);
    if (!observers.empty()) {
      Vec d(static_cast<int>(observers.size()));
      for (size_t i = 0; i < observers.size(); ++i)
        d[static_cast<int>(i)] = observers[i].second(t, x);
      traj.diagnostics.push_back(d);
    }
  };

  Vec x = x0;
  record(0.0, x);
  for (int k = 0; k < steps; ++k) {
    const double t = k * cfg.dt;
    if (!x.allFinite())
      throw std::runtime_error("integrate: state blew up at step " +
                               std::to_string(k));
    x = cfg.method == Method::Rk4
            ? rk4_step(rhs, t, x, cfg.dt)
            : midpoint_step(rhs, t, x, cfg.dt, cfg, k);
    record(t + cfg.dt, x);
  }
  return traj;
}

CasimirSet casimirs(const LieAlgebra& g, const Vec& mu) {
  g.require_dim(mu, "casimirs");
  if (g.name() == "so3") {
    return {{"mu_sq"}, {mu.squaredNorm()}};
  }
  if (g.name() == "heavy_top3") {
    Eigen::Vector3d m = mu.segment<3>(0), gamma = mu.segment<3>(3);
    return {{"gamma_sq", "mu_dot_gamma"}, {gamma.squaredNorm(), m.dot(gamma)}};
  }
  throw std::runtime_error(
      "casimirs: not implemented for '" + g.name() +
      "' (supported: so3 -> |mu|^2; heavy_top3 -> |Gamma|^2, mu.Gamma)");
}

std::vector<Eigen::Vector3d> critical_points_rigid_body(
    const RigidBodyParams& I, double r) {
  (void)I;
  if (r < 0.0) throw std::invalid_argument("radius must be nonnegative");
  std::vector<Eigen::Vector3d> pts;
  for (int axis = 0; axis < 3; ++axis)
    for (double s : {+1.0, -1.0}) {
      Eigen::Vector3d p = Eigen::Vector3d::Zero();
      p[axis] = s * r;
      pts.push_back(p);
    }
  return pts;
}

EquilibriumType classify_equilibrium(const RigidBodyParams& I,
                                     const Eigen::Vector3d& point) {
  const double r = point.norm();
  if (r == 0.0)
    throw std::invalid_argument("classify_equilibrium: zero point");
  int axis = -1, off_axis = 0;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(point[i]) > 1e-12 * r)
      axis = i;
    else
      ++off_axis;
  }
  if (axis < 0 || off_axis != 2)
    throw std::invalid_argument(
        "classify_equilibrium: point is not a principal-axis equilibrium");

  const double inv[3] = {1.0 / I.I1, 1.0 / I.I2, 1.0 / I.I3};
  const int a = (axis + 1) % 3, b = (axis + 2) % 3;
  // tangent-plane linearization: mu_a' = c_a mu_b, mu_b' = c_b mu_a with
  // eigenvalues +-sqrt(c_a c_b)
  const double mu_axis = point[axis];
  const double c_a = mu_axis * (inv[axis] - inv[b]);
  const double c_b = mu_axis * (inv[a] - inv[axis]);
  const double det = -c_a * c_b;  // char poly: lambda^2 - c_a c_b
  const double scale = mu_axis * mu_axis *
                       (std::abs(inv[0]) + std::abs(inv[1]) + std::abs(inv[2]));
  if (std::abs(c_a * c_b) <= 1e-12 * scale * scale)
    throw std::runtime_error(
        "classify_equilibrium: degenerate inertia, eigenvalues vanish");
  return det > 0.0 ? EquilibriumType::StableCenter : EquilibriumType::Saddle;
}

std::array<double, 3> bifurcation_values(const RigidBodyParams& I, double r) {
  if (r < 0.0) throw std::invalid_argument("radius must be nonnegative");
  std::array<double, 3> e = {r * r / (2.0 * I.I1), r * r / (2.0 * I.I2),
                             r * r / (2.0 * I.I3)};
  std::sort(e.begin(), e.end());
  return e;
}

SphereLevelCounter::SphereLevelCounter(const RigidBodyParams& I, double r,
                                       int grid)
    : grid_(grid) {
  if (grid < 8) throw std::invalid_argument("grid too coarse");
  node_values_.resize(static_cast<size_t>(grid + 1) * grid);
  for (int i = 0; i <= grid; ++i) {
    const double theta = M_PI * i / grid;
    for (int j = 0; j < grid; ++j) {
      const double phi = 2.0 * M_PI * j / grid;
      const double x = r * std::sin(theta) * std::cos(phi);
      const double y = r * std::sin(theta) * std::sin(phi);
      const double z = r * std::cos(theta);
      node_values_[static_cast<size_t>(i) * grid + j] =
          0.5 * (x * x / I.I1 + y * y / I.I2 + z * z / I.I3);
    }
  }
}

int SphereLevelCounter::count(double energy) const {
  const int g = grid_;
  auto node = [&](int i, int j) {
    return node_values_[static_cast<size_t>(i) * g + ((j % g + g) % g)] -
           energy;
  };
  // a cell is marked when its corner values straddle the level
  std::vector<char> marked(static_cast<size_t>(g) * g, 0);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      double v00 = node(i, j), v01 = node(i, j + 1);
      double v10 = node(i + 1, j), v11 = node(i + 1, j + 1);
      double lo = std::min(std::min(v00, v01), std::min(v10, v11));
      double hi = std::max(std::max(v00, v01), std::max(v10, v11));
      if (lo <= 0.0 && hi >= 0.0) marked[static_cast<size_t>(i) * g + j] = 1;
    }
  // union-find over marked cells, 4-adjacency, phi wraps
  std::vector<int> parent(static_cast<size_t>(g) * g);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
  auto cell = [&](int i, int j) { return i * g + ((j % g + g) % g); };
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      if (!marked[cell(i, j)]) continue;
      if (i + 1 < g && marked[cell(i + 1, j)]) unite(cell(i, j), cell(i + 1, j));
      if (marked[cell(i, j + 1)]) unite(cell(i, j), cell(i, j + 1));
    }
  int components = 0;
  for (int c = 0; c < g * g; ++c)
    if (marked[c] && find(c) == c) ++components;
  return components;
}

int level_set_component_count(const RigidBodyParams& I, double r,
                              double energy, int grid) {
  return SphereLevelCounter(I, r, grid).count(energy);
}

}  // namespace liemech
