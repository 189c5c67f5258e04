#pragma once

#include <functional>

#include "liemech/algebra.hpp"

namespace liemech {

/// Point of T*G in the intrinsic chart (a, mu), mu left-trivialized.
struct ChartPoint {
  GroupElement a;
  Vec mu;
};

// -- momentum maps and chart actions on T*G ------------------------------

/// J^l(a, mu) = Ad*_{a^-1} mu = coAd(a, mu).
Vec moment_left(const LieAlgebra& g, const ChartPoint& p);

/// J^r(a, mu) = -mu.
Vec moment_right(const LieAlgebra& g, const ChartPoint& p);

/// lambda_b (h, mu) = (b h, mu).
ChartPoint act_lambda(const LieAlgebra& g, const GroupElement& b,
                      const ChartPoint& p);

/// rho_b (h, mu) = (h b^-1, Ad*_{b^-1} mu).
ChartPoint act_rho(const LieAlgebra& g, const GroupElement& b,
                   const ChartPoint& p);

enum class ActionKind { Lambda, Rho };
enum class MomentKind { Left, Right };

/// max over seeded random (b, p) of |J(Phi_b p) - coAd(b, J(p))|_inf.
double equivariance_residual(const LieAlgebra& g, ActionKind action,
                             MomentKind moment, int samples, unsigned seed);

/// Rank of the differential of the moment map at p, by central differences
/// along the 2n chart directions.  Full rank at sampled points is the
/// numerical stand-in for the regular-value hypotheses of reduction.
int moment_differential_rank(const LieAlgebra& g, MomentKind kind,
                             const ChartPoint& p, double step = 1e-5);

// -- infinitesimal cocycles of moment families ----------------------------

/// A chart with a Poisson bracket evaluated by central finite differences,
/// together with a family of moment components J(xi).  Chart coordinates z
/// are offsets from a stored base point; brackets are taken at z = 0.
struct ChartMomentSystem {
  int chart_dim = 0;
  const LieAlgebra* algebra = nullptr;
  /// J(xi) evaluated at chart offset z.
  std::function<double(const Vec& z, const Vec& xi)> moment;
  /// Poisson bracket {F, G} at z = 0 with finite-difference step h.
  std::function<double(const std::function<double(const Vec&)>&,
                       const std::function<double(const Vec&)>&, double)>
      poisson;
};

/// T*G chart centered at base; group directions are a -> a exp(s e_i).
/// The bracket is the left-trivialized one,
///   {F,G} = dF(gradmu G) - dG(gradmu F) + <mu, [gradmu G, gradmu F]>.
ChartMomentSystem tsg_moment_system(const LieAlgebra& g,
                                    const ChartPoint& base, MomentKind kind);

/// Free particle of the given mass on canonical R^6 = (q, p) with the
/// Galilei moment J(rotation w, boost v, translation x, time tau)
///   = w.(q x p) + m v.q + x.p + tau |p|^2 / (2m).
/// The boost component carries the mass shift that produces the Prop-8
/// style cocycle on boost/translation pairs.
ChartMomentSystem galilei_particle_system(const LieAlgebra& gal, double mass,
                                          const Eigen::Vector3d& q0,
                                          const Eigen::Vector3d& p0);

/// The scalar {J(xi), J(eta)} - J([xi, eta]) at the system's base
/// point.  Zero (to finite-difference accuracy) for equivariant moments.
double infinitesimal_cocycle(const ChartMomentSystem& sys, const Vec& xi,
                             const Vec& eta, double step = 1e-5);

// -- semidirect products --------------------------------------------------

/// Semidirect product data H x V: the algebra of H (with representation)
/// plus the H-action tau on coordinates of V.  xi_V is the induced algebra
/// action; if absent it is computed by differences of tau along exp(t xi).
struct SemidirectData {
  const LieAlgebra* h = nullptr;
  int v_dim = 0;
  std::function<Mat(const Mat& group)> tau;
  std::function<Mat(const Vec& xi)> xi_V;  // optional analytic override
};

struct SemidirectElement {
  Mat h;
  Vec v;
};

/// Algebra action of xi on V (analytic if provided, else differenced).
Mat xi_action_on_v(const SemidirectData& sd, const Vec& xi, double step = 1e-5);

/// (K odot v)(xi) = <K, xi_V(v)> as coordinates on h*.
Vec k_odot_v(const SemidirectData& sd, const Vec& K, const Vec& v);

/// Coadjoint action of (h, v):
///   Ad*_{(h,v)^-1} (mu, K) = (Ad*_{h^-1} mu + (tau*_{h^-1} K) odot v,
///                             tau*_{h^-1} K).
std::pair<Vec, Vec> semidirect_coadjoint(const SemidirectData& sd,
                                         const SemidirectElement& elem,
                                         const Vec& mu, const Vec& K);

/// cm(3) instance: H = SL(3) (given its algebra), V = Sym(3) in the basis
/// (S11, S22, S33, S12, S13, S23), tau_h w = h^-T w h^-1 as in the block
/// embedding; V* coordinates use the flat pairing tr(K w)/2.
SemidirectData cm3_semidirect(const LieAlgebra& sl3);

/// Euclidean instance: H = SO(3), V = R^3, tau_h = h.
SemidirectData euclidean3_semidirect(const LieAlgebra& so3_algebra);

/// V*-coordinates of a symmetric matrix under the cm(3) flat pairing.
Vec cm3_vstar_coords(const Mat& K);
/// V-coordinates of a symmetric matrix on (S11, S22, S33, S12, S13, S23).
Vec cm3_v_coords(const Mat& w);

// -- orbit geometry and the energy-moment map -----------------------------

/// Rank of xi -> coad(xi, F); the dimension of the coadjoint orbit.
int orbit_dimension(const LieAlgebra& g, const Vec& F,
                    double rel_cutoff = 1e-9);

/// (H(p), J(p)) for a scalar field on the chart and a moment map.
std::pair<double, Vec> energy_moment(
    const std::function<double(const ChartPoint&)>& hamiltonian,
    const std::function<Vec(const ChartPoint&)>& moment, const ChartPoint& p);

/// |H(p) - E| and |J(p) - mu|_inf against a level value.
double energy_moment_level_residual(const std::pair<double, Vec>& value,
                                    double energy, const Vec& mu);

/// S^1 reduction on C^n (realized as R^{2n}): returns the moment scalar
/// -|psi|^2/2 and the reduced dimension 2n-2.  psi = 0 is rejected.
std::pair<double, int> s1_reduction_demo(int n, const Vec& psi);

}  // namespace liemech
