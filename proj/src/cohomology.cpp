#include "liemech/cohomology.hpp"

#include "liemech/linalg.hpp"

namespace liemech {

CeComplex::CeComplex(const LieAlgebra& g) : g_(&g), n_(g.dim()) {
  const int m2 = dim2(), m3 = dim3();

  // d1: (d theta)(e_i, e_j) = -theta([e_i, e_j]) = -sum_k c^k_ij theta_k.
  d1_ = Mat::Zero(m2, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        d1_(pack2(i, j), k) = -g.structure(k, i, j);

  // d2: (d w)(e_i,e_j,e_k) = -w([e_i,e_j],e_k) + w([e_i,e_k],e_j)
  //                          - w([e_j,e_k],e_i).
  d2_ = Mat::Zero(m3, m2);
  auto add_term = [&](int row, double sign, int bi, int bj, int other) {
    // contributes sign * w([e_bi, e_bj], e_other)
    for (int m = 0; m < n_; ++m) {
      double c = g_->structure(m, bi, bj);
      if (c == 0.0 || m == other) continue;
      int a = std::min(m, other), b = std::max(m, other);
      double orient = (m < other) ? 1.0 : -1.0;
      d2_(row, pack2(a, b)) += sign * c * orient;
    }
  };
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      for (int k = j + 1; k < n_; ++k) {
        int row = pack3(i, j, k);
        add_term(row, -1.0, i, j, k);
        add_term(row, +1.0, i, k, j);
        add_term(row, -1.0, j, k, i);
      }
}

int CeComplex::pack2(int i, int j) const {
  if (!(0 <= i && i < j && j < n_))
    throw std::invalid_argument("pack2 requires 0 <= i < j < n");
  // offset of row i in the strict upper triangle
  return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

int CeComplex::pack3(int i, int j, int k) const {
  if (!(0 <= i && i < j && j < k && k < n_))
    throw std::invalid_argument("pack3 requires 0 <= i < j < k < n");
  auto c2 = [](long long x) { return x * (x - 1) / 2; };
  long long base = 0;  // triples whose first index is below i
  for (int a = 0; a < i; ++a) base += c2(n_ - 1 - a);
  long long within = 0;  // pairs (j', k') with i < j' < j
  for (int b = i + 1; b < j; ++b) within += n_ - 1 - b;
  return static_cast<int>(base + within + (k - j - 1));
}

double CeComplex::at2(const Vec& omega, int i, int j) const {
  if (i == j) return 0.0;
  if (i < j) return omega[pack2(i, j)];
  return -omega[pack2(j, i)];
}

Mat CeComplex::to_matrix(const Vec& omega2) const {
  Mat m = Mat::Zero(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      m(i, j) = omega2[pack2(i, j)];
      m(j, i) = -m(i, j);
    }
  return m;
}

Vec CeComplex::from_matrix(const Mat& omega, double antisym_tol) const {
  if (omega.rows() != n_ || omega.cols() != n_)
    throw std::invalid_argument("from_matrix: wrong shape");
  if ((omega + omega.transpose()).lpNorm<Eigen::Infinity>() > antisym_tol)
    throw std::invalid_argument("from_matrix: matrix is not antisymmetric");
  Vec out(dim2());
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) out[pack2(i, j)] = omega(i, j);
  return out;
}

Vec CeComplex::d1(const Vec& theta) const {
  g_->require_dim(theta, "d1");
  return d1_ * theta;
}

Vec CeComplex::d2(const Vec& omega2) const {
  if (omega2.size() != dim2())
    throw std::invalid_argument("d2: wrong packed length");
  return d2_ * omega2;
}

int CeComplex::h1_dim() const { return n_ - svd_rank(d1_); }

int CeComplex::h2_dim() const {
  return (dim2() - svd_rank(d2_)) - svd_rank(d1_);
}

bool CeComplex::is_cocycle(const Vec& omega2, double tol) const {
  return d2(omega2).lpNorm<Eigen::Infinity>() <= tol;
}

double CeComplex::coboundary_residual(const Vec& omega2) const {
  if (omega2.size() != dim2())
    throw std::invalid_argument("coboundary_residual: wrong packed length");
  Vec theta = lsq_solve(d1_, omega2);
  return (d1_ * theta - omega2).norm();
}

bool CeComplex::is_coboundary(const Vec& omega2, double tol) const {
  return coboundary_residual(omega2) <= tol;
}

std::vector<Mat> CeComplex::h2_witnesses() const {
  Mat ker = kernel_basis(d2_);
  // orthonormal basis of im d1
  Eigen::ColPivHouseholderQR<Mat> qr(d1_);
  int r = svd_rank(d1_);
  Mat q = qr.householderQ() * Mat::Identity(dim2(), r);
  Mat proj = ker - q * (q.transpose() * ker);

  std::vector<Mat> out;
  std::vector<Vec> kept;
  for (int c = 0; c < proj.cols(); ++c) {
    Vec v = proj.col(c);
    for (const Vec& u : kept) v -= u.dot(v) * u;
    if (v.norm() > 1e-8) {
      v.normalize();
      kept.push_back(v);
      out.push_back(to_matrix(v));
    }
  }
  return out;
}

Vec galilei_cocycle(const LieAlgebra& g, double mass) {
  if (g.dim() != 10 || g.name() != "galilei")
    throw std::invalid_argument(
        "galilei_cocycle requires the galilei() algebra");
  CeComplex ce(g);
  Vec omega = Vec::Zero(ce.dim2());
  for (int i = 0; i < 3; ++i) omega[ce.pack2(3 + i, 6 + i)] = mass;
  return omega;
}

}  // namespace liemech
