#include "liemech/algebra.hpp"

#include <random>

#include "liemech/expm.hpp"

namespace liemech {

namespace {

Mat elementary(int d, int p, int q) {
  Mat e = Mat::Zero(d, d);
  e(p, q) = 1.0;
  return e;
}

// Rotation generators with [L_i, L_j] = eps_ijk L_k.
std::vector<Mat> rotation_generators() {
  std::vector<Mat> L(3, Mat::Zero(3, 3));
  L[0](1, 2) = -1.0;
  L[0](2, 1) = 1.0;
  L[1](0, 2) = 1.0;
  L[1](2, 0) = -1.0;
  L[2](0, 1) = -1.0;
  L[2](1, 0) = 1.0;
  return L;
}

Mat vec_of(const Mat& m) {
  return Eigen::Map<const Mat>(m.data(), m.size(), 1);
}

}  // namespace

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_labels,
                       std::vector<Mat> structure)
    : name_(std::move(name)),
      labels_(std::move(basis_labels)),
      structure_(std::move(structure)) {
  const int n = dim();
  if (static_cast<int>(labels_.size()) != n)
    throw std::invalid_argument("basis label count does not match dimension");
  for (const Mat& c : structure_)
    if (c.rows() != n || c.cols() != n)
      throw std::invalid_argument("structure tensor slice has wrong shape");
  finalize();
}

LieAlgebra LieAlgebra::from_representation(std::string name,
                                           std::vector<std::string> labels,
                                           std::vector<Mat> rep,
                                           bool orthogonal_group) {
  const int n = static_cast<int>(rep.size());
  if (n == 0) throw std::invalid_argument("empty representation");
  const int d = static_cast<int>(rep[0].rows());
  for (const Mat& r : rep)
    if (r.rows() != d || r.cols() != d)
      throw std::invalid_argument("representation matrices must share shape");

  Mat flat(d * d, n);
  for (int i = 0; i < n; ++i) flat.col(i) = vec_of(rep[i]);
  Eigen::ColPivHouseholderQR<Mat> qr(flat);
  if (qr.rank() < n)
    throw std::invalid_argument("representation basis is linearly dependent");

  std::vector<Mat> structure(n, Mat::Zero(n, n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Mat comm = rep[i] * rep[j] - rep[j] * rep[i];
      Vec coords = qr.solve(vec_of(comm));
      double residual = (flat * coords - vec_of(comm)).norm();
      if (residual > 1e-10 * std::max(1.0, comm.norm()))
        throw std::invalid_argument(
            "commutator leaves the span of the representation basis");
      for (int k = 0; k < n; ++k) {
        // builders have integer constants; drop least-squares noise
        double c = coords[k];
        if (std::abs(c - std::round(c)) <= 1e-12 * std::max(1.0, std::abs(c)))
          c = std::round(c);
        structure[k](i, j) = c;
        structure[k](j, i) = -c;
      }
    }
  }

  LieAlgebra g(std::move(name), std::move(labels), std::move(structure));
  g.rep_ = std::move(rep);
  g.rep_dim_ = d;
  g.orthogonal_ = orthogonal_group;
  g.basis_flat_ = flat;
  g.flat_qr_ = qr;
  return g;
}

void LieAlgebra::finalize() {
  const int n = dim();
  killing_ = Mat::Zero(n, n);
  std::vector<Mat> ad(n);
  for (int i = 0; i < n; ++i) {
    Vec e = Vec::Zero(n);
    e[i] = 1.0;
    ad[i] = ad_matrix(e);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      killing_(i, j) = killing_(j, i) = (ad[i] * ad[j]).trace();
}

void LieAlgebra::require_dim(const Vec& v, const char* what) const {
  if (v.size() != dim())
    throw std::invalid_argument(std::string(what) + ": expected dimension " +
                                std::to_string(dim()) + ", got " +
                                std::to_string(v.size()));
}

void LieAlgebra::require_rep(const char* what) const {
  if (!has_rep())
    throw std::runtime_error(std::string(what) + ": algebra '" + name_ +
                             "' has no matrix representation");
}

Vec LieAlgebra::bracket(const Vec& xi, const Vec& eta) const {
  require_dim(xi, "bracket");
  require_dim(eta, "bracket");
  Vec out(dim());
  for (int k = 0; k < dim(); ++k) out[k] = xi.dot(structure_[k] * eta);
  return out;
}

Mat LieAlgebra::ad_matrix(const Vec& xi) const {
  require_dim(xi, "ad_matrix");
  Mat m(dim(), dim());
  for (int k = 0; k < dim(); ++k) m.row(k) = xi.transpose() * structure_[k];
  return m;
}

Vec LieAlgebra::coad(const Vec& xi, const Vec& mu) const {
  require_dim(xi, "coad");
  require_dim(mu, "coad");
  return -ad_matrix(xi).transpose() * mu;
}

double LieAlgebra::killing(const Vec& xi, const Vec& eta) const {
  require_dim(xi, "killing");
  require_dim(eta, "killing");
  return xi.dot(killing_ * eta);
}

double LieAlgebra::jacobi_residual() const {
  const int n = dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec ei = Vec::Unit(n, i), ej = Vec::Unit(n, j), ek = Vec::Unit(n, k);
        Vec cyc = bracket(bracket(ei, ej), ek) + bracket(bracket(ej, ek), ei) +
                  bracket(bracket(ek, ei), ej);
        worst = std::max(worst, cyc.lpNorm<Eigen::Infinity>());
      }
  return worst;
}

double LieAlgebra::rep_bracket_residual(int samples, unsigned seed) const {
  require_rep("rep_bracket_residual");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    Vec xi(dim()), eta(dim());
    for (int i = 0; i < dim(); ++i) xi[i] = u(rng);
    for (int i = 0; i < dim(); ++i) eta[i] = u(rng);
    Mat comm = rep_matrix(xi) * rep_matrix(eta) - rep_matrix(eta) * rep_matrix(xi);
    Vec via_rep = coords_of(comm, 1e-8);
    worst = std::max(worst,
                     (via_rep - bracket(xi, eta)).lpNorm<Eigen::Infinity>());
  }
  return worst;
}

Mat LieAlgebra::rep_matrix(const Vec& xi) const {
  require_rep("rep_matrix");
  require_dim(xi, "rep_matrix");
  Mat m = Mat::Zero(rep_dim_, rep_dim_);
  for (int i = 0; i < dim(); ++i) m += xi[i] * rep_[i];
  return m;
}

std::pair<Vec, double> LieAlgebra::coords_of_lenient(const Mat& m) const {
  require_rep("coords_of");
  Vec flat = Eigen::Map<const Mat>(m.data(), m.size(), 1);
  Vec coords = flat_qr_.solve(flat);
  double residual = (basis_flat_ * coords - flat).norm();
  return {coords, residual};
}

Vec LieAlgebra::coords_of(const Mat& m, double tol) const {
  auto [coords, residual] = coords_of_lenient(m);
  if (residual > tol * std::max(1.0, m.norm()))
    throw std::runtime_error("coords_of: element is not in the span of the "
                             "represented basis (residual " +
                             std::to_string(residual) + ")");
  return coords;
}

GroupElement LieAlgebra::group_exp(const Vec& xi, double t) const {
  require_rep("group_exp");
  require_dim(xi, "group_exp");
  return GroupElement{expm(t * rep_matrix(xi))};
}

Vec LieAlgebra::Ad(const GroupElement& a, const Vec& xi) const {
  require_rep("Ad");
  require_dim(xi, "Ad");
  Mat ainv = a.matrix.inverse();
  return coords_of(a.matrix * rep_matrix(xi) * ainv);
}

Mat LieAlgebra::Ad_matrix_group(const GroupElement& a) const {
  require_rep("Ad_matrix_group");
  Mat ainv = a.matrix.inverse();
  Mat out(dim(), dim());
  for (int i = 0; i < dim(); ++i)
    out.col(i) = coords_of(a.matrix * rep_[i] * ainv);
  return out;
}

Vec LieAlgebra::coAd(const GroupElement& a, const Vec& mu) const {
  require_dim(mu, "coAd");
  GroupElement ainv{a.matrix.inverse()};
  return Ad_matrix_group(ainv).transpose() * mu;
}

double LieAlgebra::orthogonality_defect(const Mat& a) const {
  return (a * a.transpose() - Mat::Identity(a.rows(), a.cols()))
      .lpNorm<Eigen::Infinity>();
}

void LieAlgebra::check_membership(const Mat& a, double tol) const {
  if (a.rows() != rep_dim_ || a.cols() != rep_dim_)
    throw std::invalid_argument("group element has wrong shape");
  if (orthogonal_) {
    if (orthogonality_defect(a) > tol)
      throw std::runtime_error("group membership failure: |A A^T - I| = " +
                               std::to_string(orthogonality_defect(a)));
  } else {
    Eigen::FullPivLU<Mat> lu(a);
    if (!lu.isInvertible())
      throw std::runtime_error("group membership failure: singular matrix");
  }
}

// -- builders -------------------------------------------------------------

LieAlgebra so3() {
  return LieAlgebra::from_representation("so3", {"e1", "e2", "e3"},
                                         rotation_generators(), true);
}

LieAlgebra sl(int n) {
  if (n < 2) throw std::invalid_argument("sl(n) requires n >= 2");
  std::vector<std::string> labels;
  std::vector<Mat> rep;
  for (int m = 0; m < n - 1; ++m) {
    labels.push_back("g" + std::to_string(m + 1));
    rep.push_back(elementary(n, m, m) - elementary(n, m + 1, m + 1));
  }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (p == q) continue;
      labels.push_back("e" + std::to_string(p + 1) + std::to_string(q + 1));
      rep.push_back(elementary(n, p, q));
    }
  return LieAlgebra::from_representation("sl" + std::to_string(n),
                                         std::move(labels), std::move(rep));
}

LieAlgebra gl(int n) {
  if (n < 1) throw std::invalid_argument("gl(n) requires n >= 1");
  std::vector<std::string> labels;
  std::vector<Mat> rep;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      labels.push_back("e" + std::to_string(p + 1) + std::to_string(q + 1));
      rep.push_back(elementary(n, p, q));
    }
  return LieAlgebra::from_representation("gl" + std::to_string(n),
                                         std::move(labels), std::move(rep));
}

LieAlgebra so_compact(int m) {
  if (m < 2) throw std::invalid_argument("so(m) requires m >= 2");
  std::vector<std::string> labels;
  std::vector<Mat> rep;
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q) {
      labels.push_back("x" + std::to_string(p + 1) + std::to_string(q + 1));
      rep.push_back(elementary(m, p, q) - elementary(m, q, p));
    }
  return LieAlgebra::from_representation("so" + std::to_string(m),
                                         std::move(labels), std::move(rep),
                                         true);
}

LieAlgebra so_split_f(int p, int q) {
  if (p < q) std::swap(p, q);
  if (q < 1 || p - q > 1)
    throw std::invalid_argument("so_split_f requires |p - q| <= 1, p + q >= 3");
  const int m = p + q;
  const bool has_zero = (m % 2 == 1);
  const int n = m / 2;

  std::vector<int> index_set;  // ascending
  for (int i = -n; i <= n; ++i) {
    if (i == 0 && !has_zero) continue;
    index_set.push_back(i);
  }
  auto row_of = [&](int idx) {
    for (size_t r = 0; r < index_set.size(); ++r)
      if (index_set[r] == idx) return static_cast<int>(r);
    throw std::logic_error("bad f index");
  };
  auto f_mat = [&](int a, int b) -> Mat {
    return elementary(m, row_of(a), row_of(b)) -
           elementary(m, row_of(-b), row_of(-a));
  };
  auto label = [](int a, int b) {
    return "f(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };

  std::vector<std::string> labels;
  std::vector<Mat> rep;
  for (int a = 1; a <= n; ++a) {  // Cartan first
    labels.push_back(label(a, a));
    rep.push_back(f_mat(a, a));
  }
  for (int a : index_set)
    for (int b : index_set) {
      if (a + b <= 0) continue;  // representative rule: f_ab = -f_{-b,-a}
      if (a == b) continue;      // Cartan, already placed
      labels.push_back(label(a, b));
      rep.push_back(f_mat(a, b));
    }
  return LieAlgebra::from_representation(
      "sof" + std::to_string(m), std::move(labels), std::move(rep));
}

LieAlgebra sp(int two_n) {
  if (two_n < 2 || two_n % 2 != 0)
    throw std::invalid_argument("sp(2n) requires a positive even argument");
  const int n = two_n / 2;
  auto A = [&](int i, int j) {
    Mat m = Mat::Zero(two_n, two_n);
    m(i, j) = 1.0;
    m(n + j, n + i) = -1.0;
    return m;
  };
  auto B = [&](int i, int j) {
    Mat m = Mat::Zero(two_n, two_n);
    m(i, n + j) += 1.0;
    m(j, n + i) += 1.0;
    return m;
  };
  auto C = [&](int i, int j) {
    Mat m = Mat::Zero(two_n, two_n);
    m(n + i, j) += 1.0;
    m(n + j, i) += 1.0;
    return m;
  };
  std::vector<std::string> labels;
  std::vector<Mat> rep;
  for (int i = 0; i < n; ++i) {
    labels.push_back("A" + std::to_string(i + 1) + std::to_string(i + 1));
    rep.push_back(A(i, i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      labels.push_back("A" + std::to_string(i + 1) + std::to_string(j + 1));
      rep.push_back(A(i, j));
    }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      labels.push_back("B" + std::to_string(i + 1) + std::to_string(j + 1));
      rep.push_back(B(i, j));
    }
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      labels.push_back("C" + std::to_string(i + 1) + std::to_string(j + 1));
      rep.push_back(C(i, j));
    }
  return LieAlgebra::from_representation("sp" + std::to_string(two_n),
                                         std::move(labels), std::move(rep));
}

LieAlgebra galilei() {
  auto L = rotation_generators();
  std::vector<std::string> labels = {"rot1", "rot2", "rot3", "boost1",
                                     "boost2", "boost3", "trans1", "trans2",
                                     "trans3", "time"};
  std::vector<Mat> rep;
  for (int i = 0; i < 3; ++i) {
    Mat m = Mat::Zero(5, 5);
    m.block<3, 3>(0, 0) = L[i];
    rep.push_back(m);
  }
  for (int i = 0; i < 3; ++i) {  // boosts
    Mat m = Mat::Zero(5, 5);
    m(i, 3) = 1.0;
    rep.push_back(m);
  }
  for (int i = 0; i < 3; ++i) {  // translations
    Mat m = Mat::Zero(5, 5);
    m(i, 4) = 1.0;
    rep.push_back(m);
  }
  Mat time = Mat::Zero(5, 5);
  time(3, 4) = 1.0;
  rep.push_back(time);
  return LieAlgebra::from_representation("galilei", std::move(labels),
                                         std::move(rep));
}

namespace {

// Basis of Sym(3) used by cm3: S11, S22, S33, S12, S13, S23.
std::vector<Mat> sym3_basis() {
  std::vector<Mat> s;
  for (int i = 0; i < 3; ++i) s.push_back(elementary(3, i, i));
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (auto& pr : pairs)
    s.push_back(elementary(3, pr[0], pr[1]) + elementary(3, pr[1], pr[0]));
  return s;
}

std::vector<Mat> sl3_block_basis() {
  LieAlgebra s = sl(3);
  return s.rep();
}

}  // namespace

LieAlgebra cm3() {
  std::vector<std::string> labels;
  std::vector<Mat> rep;
  LieAlgebra s3 = sl(3);
  for (int i = 0; i < s3.dim(); ++i) {
    labels.push_back("sl:" + s3.basis_labels()[i]);
    Mat m = Mat::Zero(6, 6);
    m.block<3, 3>(0, 0) = s3.rep()[i];
    m.block<3, 3>(3, 3) = -s3.rep()[i].transpose();
    rep.push_back(m);
  }
  auto sym = sym3_basis();
  std::vector<std::string> sym_names = {"S11", "S22", "S33",
                                        "S12", "S13", "S23"};
  for (int i = 0; i < 6; ++i) {
    labels.push_back("v:" + sym_names[i]);
    Mat m = Mat::Zero(6, 6);
    m.block<3, 3>(3, 0) = sym[i];
    rep.push_back(m);
  }
  return LieAlgebra::from_representation("cm3", std::move(labels),
                                         std::move(rep));
}

LieAlgebra heavy_top3() {
  auto L = rotation_generators();
  std::vector<std::string> labels = {"e1", "e2", "e3", "t1", "t2", "t3"};
  std::vector<Mat> rep;
  for (int i = 0; i < 3; ++i) {
    Mat m = Mat::Zero(4, 4);
    m.block<3, 3>(0, 0) = L[i];
    rep.push_back(m);
  }
  for (int i = 0; i < 3; ++i) {
    Mat m = Mat::Zero(4, 4);
    m(i, 3) = 1.0;
    rep.push_back(m);
  }
  return LieAlgebra::from_representation("heavy_top3", std::move(labels),
                                         std::move(rep));
}

namespace {

// Lorentz generators on (t, x1, x2, x3): (J_i)_kl = eps_ikl on the spatial
// block, (K_i) = e_{0i} + e_{i0}.
std::vector<Mat> lorentz_generators() {
  std::vector<Mat> gen;
  auto eps = [](int i, int j, int k) {
    return (i - j) * (j - k) * (k - i) / 2;
  };
  for (int i = 1; i <= 3; ++i) {
    Mat m = Mat::Zero(4, 4);
    for (int k = 1; k <= 3; ++k)
      for (int l = 1; l <= 3; ++l) m(k, l) = eps(i, k, l);
    gen.push_back(m);
  }
  for (int i = 1; i <= 3; ++i) {
    Mat m = Mat::Zero(4, 4);
    m(0, i) = 1.0;
    m(i, 0) = 1.0;
    gen.push_back(m);
  }
  return gen;
}

}  // namespace

LieAlgebra so31() {
  std::vector<std::string> labels = {"J1", "J2", "J3", "K1", "K2", "K3"};
  return LieAlgebra::from_representation("so31", std::move(labels),
                                         lorentz_generators());
}

LieAlgebra poincare() {
  std::vector<std::string> labels = {"J1", "J2", "J3", "K1", "K2",
                                     "K3", "X0", "X1", "X2", "X3"};
  std::vector<Mat> rep;
  for (const Mat& g : lorentz_generators()) {
    Mat m = Mat::Zero(5, 5);
    m.block<4, 4>(0, 0) = g;
    rep.push_back(m);
  }
  for (int mu = 0; mu < 4; ++mu) {
    Mat m = Mat::Zero(5, 5);
    m(mu, 4) = 1.0;
    rep.push_back(m);
  }
  return LieAlgebra::from_representation("poincare", std::move(labels),
                                         std::move(rep));
}

LieAlgebra abelian(int n) {
  if (n < 1) throw std::invalid_argument("abelian(n) requires n >= 1");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i + 1));
  std::vector<Mat> structure(n, Mat::Zero(n, n));
  return LieAlgebra("abelian" + std::to_string(n), std::move(labels),
                    std::move(structure));
}

LieAlgebra change_basis(const LieAlgebra& g, const Mat& P) {
  const int n = g.dim();
  if (P.rows() != n || P.cols() != n)
    throw std::invalid_argument("change_basis: P has wrong shape");
  Eigen::FullPivLU<Mat> lu(P);
  if (!lu.isInvertible())
    throw std::invalid_argument("change_basis: P is singular");
  Mat Pinv = lu.inverse();

  // [e~_a, e~_b] = sum_ij P_ia P_jb c^k_ij e_k = sum_c (P^-1 c P)_... per slice.
  std::vector<Mat> structure(n, Mat::Zero(n, n));
  for (int c = 0; c < n; ++c) {
    Mat slice = Mat::Zero(n, n);
    for (int k = 0; k < n; ++k)
      slice += Pinv(c, k) * (P.transpose() * g.structure_tensors()[k] * P);
    structure[c] = slice;
  }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i + 1));
  LieAlgebra out(g.name() + "~", std::move(labels), std::move(structure));
  return out;
}

Vec cm3_dual_coords(const Mat& mu, const Mat& nu) {
  auto sl_basis = sl3_block_basis();
  auto sym = sym3_basis();
  Vec out(14);
  for (int i = 0; i < 8; ++i)
    out[i] = 0.5 * (mu.transpose() * sl_basis[i]).trace();
  for (int i = 0; i < 6; ++i) out[8 + i] = 0.5 * (nu * sym[i]).trace();
  return out;
}

Vec cm3_dual_point(double alpha, double beta) {
  Mat L3 = elementary(3, 0, 1) - elementary(3, 1, 0);
  return cm3_dual_coords(alpha * L3, beta * Mat::Identity(3, 3));
}

Vec poincare_dual_coords(double p0, const Eigen::Vector3d& p,
                         const Eigen::Vector3d& kappa,
                         const Eigen::Vector3d& s) {
  Vec out(10);
  out.segment<3>(0) = s;
  out.segment<3>(3) = kappa;
  out[6] = p0;
  out.segment<3>(7) = -p;
  return out;
}

}  // namespace liemech
