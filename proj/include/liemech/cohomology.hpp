#pragma once

#include "liemech/algebra.hpp"

namespace liemech {

/// Chevalley-Eilenberg complex of a Lie algebra in degrees 0..3, with
/// trivial coefficients.
///
/// Cochain storage is packed so antisymmetry holds by construction:
///   degree 1: theta in g*, plain n-vector;
///   degree 2: strict upper triangle, index (i,j) with i < j;
///   degree 3: lexicographic triples i < j < k.
///
/// Sign conventions: (d theta)(x,y) = -theta([x,y]) and
///   (d omega)(x,y,z) = -omega([x,y],z) + omega([x,z],y) - omega([y,z],x),
/// fixed so that d o d = 0.
class CeComplex {
 public:
  explicit CeComplex(const LieAlgebra& g);

  const LieAlgebra& algebra() const { return *g_; }
  int dim1() const { return n_; }
  int dim2() const { return n_ * (n_ - 1) / 2; }
  int dim3() const { return n_ * (n_ - 1) * (n_ - 2) / 6; }

  int pack2(int i, int j) const;          // requires i < j
  int pack3(int i, int j, int k) const;   // requires i < j < k

  /// Signed lookup of a packed 2-cochain at arbitrary (i, j).
  double at2(const Vec& omega, int i, int j) const;

  Mat to_matrix(const Vec& omega2) const;
  Vec from_matrix(const Mat& omega, double antisym_tol = 1e-12) const;

  Vec d1(const Vec& theta) const;
  Vec d2(const Vec& omega2) const;

  const Mat& d1_matrix() const { return d1_; }
  const Mat& d2_matrix() const { return d2_; }

  int h1_dim() const;
  int h2_dim() const;

  bool is_cocycle(const Vec& omega2, double tol = 1e-10) const;
  bool is_coboundary(const Vec& omega2, double tol = 1e-8) const;

  /// Distance of omega2 from the coboundary space (least squares residual).
  double coboundary_residual(const Vec& omega2) const;

  /// Orthonormal representatives of H^2: kernel of d2 projected off im d1.
  std::vector<Mat> h2_witnesses() const;

 private:
  const LieAlgebra* g_;
  int n_;
  Mat d1_, d2_;
};

/// The Galilei mass cocycle: pairs boost i with translation i at value m.
/// Requires the galilei() basis ordering.  Packed degree-2 cochain.
Vec galilei_cocycle(const LieAlgebra& g, double mass);

}  // namespace liemech
