#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "liemech/algebra.hpp"

namespace liemech {

/// Principal moments of inertia; all positive.
struct RigidBodyParams {
  double I1, I2, I3;
  RigidBodyParams(double i1, double i2, double i3);
};

/// h_c on g* together with its gradient map L_{h_c}: g* -> g defined by
/// <mu_dot, L(mu)> = d/dt h_c(mu + t mu_dot).
struct CollectiveHamiltonian {
  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&)> gradient;
  bool analytic_gradient = false;
};

/// h_c(mu) = sum mu_i^2 / (2 I_i) on so(3)*.
CollectiveHamiltonian rigid_body_hamiltonian(const RigidBodyParams& I);

/// h(mu, Gamma) = sum mu_i^2 / (2 I_i) + chi . Gamma on (so(3) x R^3)*.
CollectiveHamiltonian heavy_top_hamiltonian(const RigidBodyParams& I,
                                            const Eigen::Vector3d& chi);

/// Wraps a value function with a central-difference gradient,
/// step 1e-6 (1 + |mu|).
CollectiveHamiltonian with_fd_gradient(std::function<double(const Vec&)> value);

/// The "minus" Lie-Poisson convention, matching J^r = -mu and the explicit
/// rigid-body bracket.  This constant is the only place the sign lives.
inline constexpr double kLiePoissonSign = -1.0;

/// mu_dot = kLiePoissonSign * coad(L_h(mu), mu); equals mu x grad(h) on so(3).
Vec lie_poisson_rhs(const LieAlgebra& g, const CollectiveHamiltonian& h,
                    const Vec& mu);

/// The three explicit rigid-body equations.
Eigen::Vector3d euler_rhs(const RigidBodyParams& I, const Eigen::Vector3d& mu);

enum class Method { Rk4, ImplicitMidpoint };

struct IntegratorConfig {
  Method method = Method::Rk4;
  double dt = 1e-3;
  double newton_tol = 1e-12;
  int newton_max_iter = 50;
};

struct Trajectory {
  double t0 = 0.0;
  double dt = 0.0;
  int steps = 0;
  std::vector<Vec> states;  // steps + 1 samples
  std::vector<std::string> diagnostic_names;
  std::vector<Vec> diagnostics;  // one row per sample

  double time_at(int k) const { return t0 + k * dt; }
};

using Observer = std::pair<std::string, std::function<double(double, const Vec&)>>;

/// Fixed-step integration; implicit midpoint solves each step by Newton
/// with a finite-difference Jacobian, polished to machine residual.
Trajectory integrate(const std::function<Vec(double, const Vec&)>& rhs,
                     const Vec& x0, double T, const IntegratorConfig& cfg,
                     const std::vector<Observer>& observers = {});

struct CasimirSet {
  std::vector<std::string> names;
  std::vector<double> values;
};

/// |mu|^2 for so(3); (|Gamma|^2, mu . Gamma) for heavy_top3.  Throws for
/// other algebras, listing the supported ones.
CasimirSet casimirs(const LieAlgebra& g, const Vec& mu);

/// The six equilibria (+-r, 0, 0), (0, +-r, 0), (0, 0, +-r).
std::vector<Eigen::Vector3d> critical_points_rigid_body(
    const RigidBodyParams& I, double r);

enum class EquilibriumType { StableCenter, Saddle };

/// Sphere-tangent linearization at a principal-axis point: imaginary pair
/// -> center, real pair -> saddle.  Degenerate inertia is refused.
EquilibriumType classify_equilibrium(const RigidBodyParams& I,
                                     const Eigen::Vector3d& point);

/// Critical energies {r^2/2I_i}, ascending.
std::array<double, 3> bifurcation_values(const RigidBodyParams& I, double r);

/// Connected components of {h_c = energy} on the sphere |mu| = r, counted
/// on a theta x phi grid (sign changes across cell corners, union-find).
int level_set_component_count(const RigidBodyParams& I, double r,
                              double energy, int grid = 400);

/// Precomputed grid of h_c over the sphere for repeated level queries.
class SphereLevelCounter {
 public:
  SphereLevelCounter(const RigidBodyParams& I, double r, int grid = 400);
  int count(double energy) const;

 private:
  int grid_;
  std::vector<double> node_values_;  // (grid+1) x grid nodes
};

}  // namespace liemech
