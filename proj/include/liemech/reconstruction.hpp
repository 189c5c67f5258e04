#pragma once

#include <functional>

#include "liemech/dynamics.hpp"
#include "liemech/moment.hpp"

namespace liemech {

struct GroupCurve {
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<Mat> samples;
};

struct AlgebraCurve {
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<Vec> samples;

  /// Piecewise-linear evaluation, clamped at the ends.
  Vec at(double t) const;
};

/// Left-trivialized group ODE a_dot = a xi(t), stepped by the exponential
/// midpoint rule a_{k+1} = a_k exp(dt xi(t_k + dt/2)).  Membership is
/// preserved by construction.
GroupCurve solve_group_ode(const LieAlgebra& g,
                           const std::function<Vec(double)>& xi, const Mat& a0,
                           double T, double dt);
GroupCurve solve_group_ode(const LieAlgebra& g, const AlgebraCurve& xi,
                           const Mat& a0);

/// max over samples of the orthogonality defect (orthogonal groups).
double membership_drift(const LieAlgebra& g, const GroupCurve& c);

struct ReconstructionResult {
  double t0 = 0.0;
  double dt = 0.0;
  GroupCurve group_slot;          // a_0 A_t
  std::vector<Vec> mu_slot;       // coAd-transported, the group-path route
  std::vector<Vec> reduced;       // integrated chart trajectory of mu
  std::vector<double> momentum_residual;  // |mu_slot - reduced|_inf
  std::vector<double> energy;             // h_c(J^r(m_t))

  ChartPoint chart_at(int k) const {
    return ChartPoint{GroupElement{group_slot.samples[k]}, mu_slot[k]};
  }
};

/// Collective reconstruction on T*G for H = h_c o J^r: integrates the
/// reduced trajectory, drives the group ODE with the chart velocity
/// xi(mu) = -L_{h_c}(-mu), and returns m_t = act_rho(A_t^-1, m_0) so the
/// mu slot travels through the coadjoint transport, independently of the
/// integrated reduced curve.
ReconstructionResult reconstruct_collective(const LieAlgebra& g,
                                            const CollectiveHamiltonian& h,
                                            const ChartPoint& m0, double T,
                                            const IntegratorConfig& cfg);

struct ChartCurve {
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<ChartPoint> samples;
};

/// Chart vector field on T*G in body coordinates: tangent at (a, mu) is
/// (a^-1 a_dot expressed in the basis, mu_dot).
struct ChartVectorField {
  std::function<Vec(const ChartPoint&)> body_velocity;
  std::function<Vec(const ChartPoint&)> mu_dot;
};

/// The flow of H = h_c o J^r in the chart:
///   body velocity -L_{h_c}(-mu),  mu_dot = -coad(-L_{h_c}(-mu), mu).
ChartVectorField collective_chart_field(const LieAlgebra& g,
                                        const CollectiveHamiltonian& h);

/// Orthonormal basis (columns) of the isotropy algebra g_mu,
/// the kernel of xi -> coad(xi, mu).
Mat isotropy_basis(const LieAlgebra& g, const Vec& mu, double rel_cutoff = 1e-9);

struct LiftResult {
  GroupCurve a;        // the reconstructed G_mu curve
  ChartCurve c;        // lambda_{a_t} d_t
  AlgebraCurve xi;     // solved drive in g_mu
  double max_level_residual = 0.0;
  double max_solve_residual = 0.0;
};

/// Reduced-to-full lift: given a companion curve d_t in the J^l level set
/// of mu_level and the chart field X_H, solves the body-velocity matching
/// equation for xi(t) in g_mu by least squares, integrates the group ODE
/// and returns c_t = lambda_{a_t} d_t.  Level-set drift and solve residual
/// above tolerance are rejected.
LiftResult lift_reduced(const LieAlgebra& g, const Vec& mu_level,
                        const ChartCurve& d, const ChartVectorField& X_H,
                        double level_tol = 1e-8, double solve_tol = 1e-8);

}  // namespace liemech
