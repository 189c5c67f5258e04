#include "liemech/moment.hpp"

#include <random>

#include "liemech/linalg.hpp"

namespace liemech {

Vec moment_left(const LieAlgebra& g, const ChartPoint& p) {
  g.check_membership(p.a.matrix);
  return g.coAd(p.a, p.mu);
}

Vec moment_right(const LieAlgebra& g, const ChartPoint& p) {
  g.require_dim(p.mu, "moment_right");
  return -p.mu;
}

ChartPoint act_lambda(const LieAlgebra& g, const GroupElement& b,
                      const ChartPoint& p) {
  g.check_membership(b.matrix);
  return ChartPoint{GroupElement{b.matrix * p.a.matrix}, p.mu};
}

ChartPoint act_rho(const LieAlgebra& g, const GroupElement& b,
                   const ChartPoint& p) {
  g.check_membership(b.matrix);
  return ChartPoint{GroupElement{p.a.matrix * b.matrix.inverse()},
                    g.coAd(b, p.mu)};
}

double equivariance_residual(const LieAlgebra& g, ActionKind action,
                             MomentKind moment, int samples, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto random_vec = [&] {
    Vec v(g.dim());
    for (int i = 0; i < g.dim(); ++i) v[i] = u(rng);
    return v;
  };
  auto J = [&](const ChartPoint& p) {
    return moment == MomentKind::Left ? moment_left(g, p) : moment_right(g, p);
  };
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    GroupElement b = g.group_exp(random_vec());
    ChartPoint p{g.group_exp(random_vec()), random_vec()};
    ChartPoint moved = action == ActionKind::Lambda ? act_lambda(g, b, p)
                                                    : act_rho(g, b, p);
    Vec lhs = J(moved);
    Vec rhs = g.coAd(b, J(p));
    worst = std::max(worst, (lhs - rhs).lpNorm<Eigen::Infinity>());
  }
  return worst;
}

int moment_differential_rank(const LieAlgebra& g, MomentKind kind,
                             const ChartPoint& p, double step) {
  g.require_rep("moment_differential_rank");
  if (!(step > 1e-12))
    throw std::invalid_argument("finite-difference step underflow");
  const int n = g.dim();
  auto J = [&](const ChartPoint& q) {
    return kind == MomentKind::Left ? moment_left(g, q) : moment_right(g, q);
  };
  Mat jac(n, 2 * n);
  for (int i = 0; i < n; ++i) {  // group directions a exp(s e_i)
    Vec e = Vec::Unit(n, i);
    ChartPoint plus{GroupElement{p.a.matrix * g.group_exp(e, step).matrix},
                    p.mu};
    ChartPoint minus{GroupElement{p.a.matrix * g.group_exp(e, -step).matrix},
                     p.mu};
    jac.col(i) = (J(plus) - J(minus)) / (2.0 * step);
  }
  for (int i = 0; i < n; ++i) {  // fiber directions
    ChartPoint plus{p.a, p.mu + step * Vec::Unit(n, i)};
    ChartPoint minus{p.a, p.mu - step * Vec::Unit(n, i)};
    jac.col(n + i) = (J(plus) - J(minus)) / (2.0 * step);
  }
  return svd_rank(jac, 1e-9);
}

// -- chart moment systems --------------------------------------------------

ChartMomentSystem tsg_moment_system(const LieAlgebra& g,
                                    const ChartPoint& base, MomentKind kind) {
  g.require_rep("tsg_moment_system");
  g.check_membership(base.a.matrix);
  const int n = g.dim();

  ChartMomentSystem sys;
  sys.chart_dim = 2 * n;
  sys.algebra = &g;

  auto point_at = [&g, base, n](const Vec& z) {
    Vec group_off = z.head(n);
    GroupElement a{base.a.matrix * g.group_exp(group_off).matrix};
    return ChartPoint{a, base.mu + z.tail(n)};
  };
  sys.moment = [&g, point_at, kind](const Vec& z, const Vec& xi) {
    ChartPoint p = point_at(z);
    Vec j = kind == MomentKind::Left ? g.coAd(p.a, p.mu) : Vec(-p.mu);
    return j.dot(xi);
  };
  // Left-trivialized bracket at the base point:
  //   {F,G} = dF(grad_mu G) - dG(grad_mu F) + <mu, [grad_mu G, grad_mu F]>,
  // all first derivatives by central differences.
  sys.poisson = [&g, base, n](const std::function<double(const Vec&)>& F,
                              const std::function<double(const Vec&)>& G,
                              double h) {
    if (!(h > 1e-12))
      throw std::invalid_argument("finite-difference step underflow");
    auto grad = [&](const std::function<double(const Vec&)>& f) {
      Vec out(2 * n);
      for (int i = 0; i < 2 * n; ++i) {
        Vec zp = Vec::Zero(2 * n), zm = Vec::Zero(2 * n);
        zp[i] = h;
        zm[i] = -h;
        out[i] = (f(zp) - f(zm)) / (2.0 * h);
      }
      return out;
    };
    Vec dF = grad(F), dG = grad(G);
    Vec dFa = dF.head(n), dFmu = dF.tail(n);
    Vec dGa = dG.head(n), dGmu = dG.tail(n);
    return dFa.dot(dGmu) - dGa.dot(dFmu) +
           base.mu.dot(g.bracket(dGmu, dFmu));
  };
  return sys;
}

ChartMomentSystem galilei_particle_system(const LieAlgebra& gal, double mass,
                                          const Eigen::Vector3d& q0,
                                          const Eigen::Vector3d& p0) {
  if (gal.dim() != 10 || gal.name() != "galilei")
    throw std::invalid_argument(
        "galilei_particle_system requires the galilei() algebra");
  if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");

  ChartMomentSystem sys;
  sys.chart_dim = 6;
  sys.algebra = &gal;
  sys.moment = [mass, q0, p0](const Vec& z, const Vec& xi) {
    Eigen::Vector3d q = q0 + z.head<3>();
    Eigen::Vector3d p = p0 + z.tail<3>();
    Eigen::Vector3d w = xi.segment<3>(0);
    Eigen::Vector3d v = xi.segment<3>(3);
    Eigen::Vector3d x = xi.segment<3>(6);
    double tau = xi[9];
    return w.dot(q.cross(p)) + mass * v.dot(q) + x.dot(p) +
           tau * p.squaredNorm() / (2.0 * mass);
  };
  sys.poisson = [](const std::function<double(const Vec&)>& F,
                   const std::function<double(const Vec&)>& G, double h) {
    if (!(h > 1e-12))
      throw std::invalid_argument("finite-difference step underflow");
    auto part = [&](const std::function<double(const Vec&)>& f, int i) {
      Vec zp = Vec::Zero(6), zm = Vec::Zero(6);
      zp[i] = h;
      zm[i] = -h;
      return (f(zp) - f(zm)) / (2.0 * h);
    };
    double sum = 0.0;
    for (int k = 0; k < 3; ++k)
      sum += part(F, k) * part(G, 3 + k) - part(F, 3 + k) * part(G, k);
    return sum;
  };
  return sys;
}

double infinitesimal_cocycle(const ChartMomentSystem& sys, const Vec& xi,
                             const Vec& eta, double step) {
  const LieAlgebra& g = *sys.algebra;
  g.require_dim(xi, "infinitesimal_cocycle");
  g.require_dim(eta, "infinitesimal_cocycle");
  auto F = [&](const Vec& z) { return sys.moment(z, xi); };
  auto G = [&](const Vec& z) { return sys.moment(z, eta); };
  double pb = sys.poisson(F, G, step);
  return pb - sys.moment(Vec::Zero(sys.chart_dim), g.bracket(xi, eta));
}

// -- semidirect products ---------------------------------------------------

Mat xi_action_on_v(const SemidirectData& sd, const Vec& xi, double step) {
  if (sd.xi_V) return sd.xi_V(xi);
  Mat plus = sd.tau(sd.h->group_exp(xi, step).matrix);
  Mat minus = sd.tau(sd.h->group_exp(xi, -step).matrix);
  return (plus - minus) / (2.0 * step);
}

Vec k_odot_v(const SemidirectData& sd, const Vec& K, const Vec& v) {
  const LieAlgebra& h = *sd.h;
  Vec out(h.dim());
  for (int i = 0; i < h.dim(); ++i)
    out[i] = K.dot(xi_action_on_v(sd, Vec::Unit(h.dim(), i)) * v);
  return out;
}

std::pair<Vec, Vec> semidirect_coadjoint(const SemidirectData& sd,
                                         const SemidirectElement& elem,
                                         const Vec& mu, const Vec& K) {
  const LieAlgebra& h = *sd.h;
  h.require_dim(mu, "semidirect_coadjoint");
  if (K.size() != sd.v_dim || elem.v.size() != sd.v_dim)
    throw std::invalid_argument("semidirect_coadjoint: V-slot size mismatch");
  Mat hinv = elem.h.inverse();
  Vec k_moved = sd.tau(hinv).transpose() * K;  // tau*_{h^-1} K
  Vec mu_moved = h.coAd(GroupElement{elem.h}, mu) + k_odot_v(sd, k_moved, elem.v);
  return {mu_moved, k_moved};
}

Vec cm3_v_coords(const Mat& w) {
  Vec out(6);
  out << w(0, 0), w(1, 1), w(2, 2), w(0, 1), w(0, 2), w(1, 2);
  return out;
}

Vec cm3_vstar_coords(const Mat& K) {
  // coordinates against the S-basis under <K, w> = tr(K w)/2
  Vec out(6);
  out << 0.5 * K(0, 0), 0.5 * K(1, 1), 0.5 * K(2, 2), K(0, 1), K(0, 2),
      K(1, 2);
  return out;
}

namespace {

Mat sym_from_coords(const Vec& v) {
  Mat w(3, 3);
  w << v[0], v[3], v[4], v[3], v[1], v[5], v[4], v[5], v[2];
  return w;
}

}  // namespace

SemidirectData cm3_semidirect(const LieAlgebra& sl3) {
  if (sl3.dim() != 8 || sl3.rep_dim() != 3)
    throw std::invalid_argument("cm3_semidirect requires the sl(3) builder");
  SemidirectData sd;
  sd.h = &sl3;
  sd.v_dim = 6;
  sd.tau = [](const Mat& h) {
    Mat hinv = h.inverse();
    Mat out(6, 6);
    for (int a = 0; a < 6; ++a) {
      Mat s = sym_from_coords(Vec::Unit(6, a));
      out.col(a) = cm3_v_coords(hinv.transpose() * s * hinv);
    }
    return out;
  };
  sd.xi_V = [&sl3](const Vec& xi) {
    Mat x = sl3.rep_matrix(xi);
    Mat out(6, 6);
    for (int a = 0; a < 6; ++a) {
      Mat s = sym_from_coords(Vec::Unit(6, a));
      out.col(a) = cm3_v_coords(-x.transpose() * s - s * x);
    }
    return out;
  };
  return sd;
}

SemidirectData euclidean3_semidirect(const LieAlgebra& so3_algebra) {
  if (so3_algebra.dim() != 3 || so3_algebra.rep_dim() != 3)
    throw std::invalid_argument("euclidean3_semidirect requires so3()");
  SemidirectData sd;
  sd.h = &so3_algebra;
  sd.v_dim = 3;
  sd.tau = [](const Mat& h) { return h; };
  sd.xi_V = [&so3_algebra](const Vec& xi) {
    return so3_algebra.rep_matrix(xi);
  };
  return sd;
}

// -- orbit geometry ---------------------------------------------------------

int orbit_dimension(const LieAlgebra& g, const Vec& F, double rel_cutoff) {
  g.require_dim(F, "orbit_dimension");
  Mat m(g.dim(), g.dim());
  for (int i = 0; i < g.dim(); ++i)
    m.col(i) = g.coad(Vec::Unit(g.dim(), i), F);
  return svd_rank(m, rel_cutoff);
}

std::pair<double, Vec> energy_moment(
    const std::function<double(const ChartPoint&)>& hamiltonian,
    const std::function<Vec(const ChartPoint&)>& moment, const ChartPoint& p) {
  return {hamiltonian(p), moment(p)};
}

double energy_moment_level_residual(const std::pair<double, Vec>& value,
                                    double energy, const Vec& mu) {
  return std::max(std::abs(value.first - energy),
                  (value.second - mu).lpNorm<Eigen::Infinity>());
}

std::pair<double, int> s1_reduction_demo(int n, const Vec& psi) {
  if (n < 1) throw std::invalid_argument("s1_reduction_demo requires n >= 1");
  if (psi.size() != 2 * n)
    throw std::invalid_argument("psi must have 2n real coordinates");
  double norm2 = psi.squaredNorm();
  if (norm2 == 0.0)
    throw std::invalid_argument(
        "psi = 0: the moment value is not regular, no reduced space");
  return {-0.5 * norm2, 2 * n - 2};
}

}  // namespace liemech
