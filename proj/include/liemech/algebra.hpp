#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liemech {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// Matrix of a group element in the algebra's representation.
struct GroupElement {
  Mat matrix;
};

/// A finite-dimensional real Lie algebra given by structure constants,
/// optionally carrying a faithful matrix representation.
///
/// Elements of the algebra and of its dual are coordinate vectors: xi in g
/// is expressed on the basis e_i, mu in g* on the dual basis f_i with
/// f_i(e_k) = delta_ik.  Structure constants satisfy
/// [e_i, e_j] = sum_k c[k](i,j) e_k.
class LieAlgebra {
 public:
  LieAlgebra(std::string name, std::vector<std::string> basis_labels,
             std::vector<Mat> structure);

  /// Builds the algebra from a faithful matrix representation; structure
  /// constants are obtained by re-expressing commutators in the basis.
  static LieAlgebra from_representation(std::string name,
                                        std::vector<std::string> basis_labels,
                                        std::vector<Mat> rep,
                                        bool orthogonal_group = false);

  const std::string& name() const { return name_; }
  int dim() const { return static_cast<int>(structure_.size()); }
  const std::vector<std::string>& basis_labels() const { return labels_; }

  /// c[k](i,j) with [e_i, e_j] = sum_k c[k](i,j) e_k.
  double structure(int k, int i, int j) const { return structure_[k](i, j); }
  const std::vector<Mat>& structure_tensors() const { return structure_; }

  bool has_rep() const { return !rep_.empty(); }
  int rep_dim() const { return rep_dim_; }
  const std::vector<Mat>& rep() const { return rep_; }
  bool orthogonal_group() const { return orthogonal_; }

  // -- algebra-level operations ----------------------------------------

  /// [xi, eta] in basis coordinates.  Bilinear, antisymmetric.
  Vec bracket(const Vec& xi, const Vec& eta) const;

  /// Matrix M of ad_xi, i.e. M * (eta coords) = [xi, eta] coords.
  Mat ad_matrix(const Vec& xi) const;

  /// Coadjoint action ad*_xi mu with the convention
  ///   <coad(xi, mu), eta> = -<mu, [xi, eta]>,
  /// i.e. coad(xi, mu) = -ad_matrix(xi)^T mu.  This is the one sign
  /// convention used throughout the library.
  Vec coad(const Vec& xi, const Vec& mu) const;

  /// Cartan-Killing form Tr(ad_xi ad_eta).
  double killing(const Vec& xi, const Vec& eta) const;
  const Mat& killing_matrix() const { return killing_; }

  /// max over basis triples of |sum_cyclic [[e_i,e_j],e_k]| coordinates.
  double jacobi_residual() const;

  /// max over random pairs of |bracket-by-constants - commutator-in-basis|.
  double rep_bracket_residual(int samples, unsigned seed) const;

  // -- representation-level operations ---------------------------------

  /// sum_i xi_i rho(e_i).  Requires a representation.
  Mat rep_matrix(const Vec& xi) const;

  /// Re-expresses a represented algebra element in the basis via the
  /// precomputed pseudo-inverse of the basis-flattening matrix.  Throws if
  /// the least-squares residual exceeds tol (representation closure).
  Vec coords_of(const Mat& rep_element, double tol = 1e-10) const;

  /// Same, but returns the residual instead of throwing.
  std::pair<Vec, double> coords_of_lenient(const Mat& rep_element) const;

  /// exp(t * rho(xi)) by scaling-and-squaring.
  GroupElement group_exp(const Vec& xi, double t = 1.0) const;

  /// Ad_a xi = coords of rho(a) rho(xi) rho(a)^-1.
  Vec Ad(const GroupElement& a, const Vec& xi) const;

  /// n x n matrix of xi -> Ad_a xi in basis coordinates.
  Mat Ad_matrix_group(const GroupElement& a) const;

  /// coAd(a, mu) = Ad*_{a^-1} mu = (Ad-matrix of a^-1)^T mu, so that
  /// <coAd(a, mu), xi> = <mu, Ad(a^-1, xi)>.
  Vec coAd(const GroupElement& a, const Vec& mu) const;

  /// Group membership: ||A A^T - I|| <= tol for orthogonal-group builders,
  /// invertibility otherwise.  Throws on failure.
  void check_membership(const Mat& a, double tol = 1e-9) const;
  double orthogonality_defect(const Mat& a) const;

  void require_dim(const Vec& v, const char* what) const;
  void require_rep(const char* what) const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Mat> structure_;  // structure_[k](i,j) = c^k_{ij}
  std::vector<Mat> rep_;
  int rep_dim_ = 0;
  bool orthogonal_ = false;
  Mat killing_;
  Mat basis_flat_;  // d^2 x n, column i = vec(rho(e_i))
  Eigen::ColPivHouseholderQR<Mat> flat_qr_;

  void finalize();
};

// -- builders -----------------------------------------------------------

/// so(3) with [e_i, e_j] = eps_ijk e_k and the rotation-generator rep.
LieAlgebra so3();

/// sl(n): Cartan elements g_m = e_mm - e_{m+1,m+1} first, then e_pq (p != q).
LieAlgebra sl(int n);

/// gl(n) on the elementary-matrix basis e_pq.
LieAlgebra gl(int n);

/// so(m) compact real form on xi_pq = e_pq - e_qp, p < q.
LieAlgebra so_compact(int m);

/// Split real form so(p,q), |p-q| <= 1, on the f-basis
/// f_ab = e_ab - e_{-b,-a} with indices -n..n (odd total) or +-1..+-n
/// (even total).  Cartan elements f_11..f_nn come first.
LieAlgebra so_split_f(int p, int q);

/// sp(2n) on the A/B/C block basis; Cartan elements A_ii first.
LieAlgebra sp(int two_n);

/// Galilei algebra, basis order (rotations, boosts, translations, time).
LieAlgebra galilei();

/// cm(3) = sl(3) x Sym(3), 14-dimensional, in the block matrix embedding.
LieAlgebra cm3();

/// so(3) x R^3 (rotations + vector slot), heavy-top carrier.
LieAlgebra heavy_top3();

/// Lorentz algebra so(3,1) on the {J_i, K_i} basis.
LieAlgebra so31();

/// Poincare algebra on (J, K, X0, X1..X3).
LieAlgebra poincare();

/// Abelian algebra of dimension n (all brackets zero, no representation).
LieAlgebra abelian(int n);

/// Same algebra on the basis e~_a = sum_i P(i,a) e_i.
LieAlgebra change_basis(const LieAlgebra& g, const Mat& P);

// -- dual-coordinate helpers for the built-in examples -------------------

/// Coordinates of (mu, nu)^flat on the cm3 dual basis, with the pairing
/// <(mu,nu)^flat, (xi,eta)> = (tr(mu^T xi) + tr(nu eta)) / 2.
Vec cm3_dual_coords(const Mat& mu, const Mat& nu);

/// Coordinates of (alpha L3, beta I)^flat, L3 = e12 - e21.
Vec cm3_dual_point(double alpha, double beta);

/// Coordinates of F = p0 X0* - p.X* + kappa.K* + s.J* on the poincare basis.
Vec poincare_dual_coords(double p0, const Eigen::Vector3d& p,
                         const Eigen::Vector3d& kappa,
                         const Eigen::Vector3d& s);

}  // namespace liemech
