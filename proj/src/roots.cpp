#include "liemech/roots.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "liemech/linalg.hpp"

namespace liemech {

Family family_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
  }
  throw std::invalid_argument("unknown family (expected A, B, C or D)");
}

char family_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

Rational RootSystem::inner(const RationalVec& a, const RationalVec& b) const {
  Rational acc(0);
  for (size_t p = 0; p < a.size(); ++p)
    for (size_t q = 0; q < b.size(); ++q) acc += a[p] * kinv[p][q] * b[q];
  return acc;
}

namespace {

RationalVec int_vec(const std::vector<long long>& v) {
  RationalVec out;
  out.reserve(v.size());
  for (long long x : v) out.emplace_back(x);
  return out;
}

std::string idx_pair(int k, int l) {
  return "(" + std::to_string(k) + "," + std::to_string(l) + ")";
}

// Exact inverse by Gauss-Jordan.
std::vector<std::vector<Rational>> rational_inverse(
    std::vector<std::vector<Rational>> A) {
  const int n = static_cast<int>(A.size());
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!A[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::logic_error("singular Killing block");
    std::swap(A[col], A[pivot]);
    std::swap(inv[col], inv[pivot]);
    Rational d = A[col][col];
    for (int c = 0; c < n; ++c) {
      A[col][c] = A[col][c] / d;
      inv[col][c] = inv[col][c] / d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || A[r][col].is_zero()) continue;
      Rational f = A[r][col];
      for (int c = 0; c < n; ++c) {
        A[r][c] -= f * A[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

std::vector<std::vector<Rational>> diagonal_kinv(int n, long long value) {
  std::vector<std::vector<Rational>> kinv(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) kinv[i][i] = Rational(1, value);
  return kinv;
}

void finish(RootSystem& rs) {
  const int n = rs.rank;
  rs.gram.assign(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rs.gram[i][j] = rs.inner(rs.roots[rs.simple[i]], rs.roots[rs.simple[j]]);
}

RootSystem build_a(int n) {
  RootSystem rs;
  rs.family = Family::A;
  rs.rank = n;
  // (g_p, g_q) = 2(n+1) (2 d_pq - d_{p,q+1} - d_{p+1,q})
  std::vector<std::vector<Rational>> K(n, std::vector<Rational>(n));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      long long v = 2 * (p == q) - (p == q + 1) - (p + 1 == q);
      K[p][q] = Rational(2LL * (n + 1) * v);
    }
  rs.kinv = rational_inverse(std::move(K));
  // alpha_pq(g_m) = delta_mp - delta_mq + delta_{m+1,q} - delta_{m+1,p},
  // indices p, q in 1..n+1, Cartan basis g_1..g_n.
  for (int p = 1; p <= n + 1; ++p)
    for (int q = 1; q <= n + 1; ++q) {
      if (p == q) continue;
      std::vector<long long> v(n, 0);
      for (int m = 1; m <= n; ++m)
        v[m - 1] = (m == p) - (m == q) + (m + 1 == q) - (m + 1 == p);
      rs.labels.push_back("a" + idx_pair(p, q));
      rs.roots.push_back(int_vec(v));
      if (p < q) rs.positive.push_back(static_cast<int>(rs.roots.size()) - 1);
      if (q == p + 1 && p <= n)
        rs.simple.push_back(static_cast<int>(rs.roots.size()) - 1);
    }
  finish(rs);
  return rs;
}

// Shared B/D machinery on the f-basis index set.
RootSystem build_bd(Family fam, int n) {
  const bool has_zero = (fam == Family::B);
  RootSystem rs;
  rs.family = fam;
  rs.rank = n;
  // (f_pp, f_qq) = 2(2n-1) d_pq for B, 4(n-1) d_pq for D
  rs.kinv = diagonal_kinv(n, has_zero ? 2LL * (2 * n - 1) : 4LL * (n - 1));

  std::vector<int> index_set;
  for (int i = -n; i <= n; ++i) {
    if (i == 0 && !has_zero) continue;
    index_set.push_back(i);
  }
  auto root_coords = [&](int k, int l) {
    std::vector<long long> v(n, 0);
    for (int p = 1; p <= n; ++p)
      v[p - 1] = (p == k) - (p == l) + (p == -l) - (p == -k);
    return v;
  };
  auto is_positive = [&](int k, int l) {
    if (has_zero) {
      // {l > k > 0} u {-l < k < 0} u {k = 0, l >= 1}
      if (k > 0 && l > k) return true;
      if (k < 0 && -l < k) return true;
      if (k == 0 && l >= 1) return true;
      return false;
    }
    // D: {l > k > 0} u {-l < k < 0}
    if (k > 0 && l > k) return true;
    if (k < 0 && -l < k) return true;
    return false;
  };

  std::map<std::pair<int, int>, int> pos_of;
  for (int k : index_set)
    for (int l : index_set) {
      if (k == l) continue;
      if (!(k > -l)) continue;  // the root set of the family
      rs.labels.push_back("a" + idx_pair(k, l));
      rs.roots.push_back(int_vec(root_coords(k, l)));
      int idx = static_cast<int>(rs.roots.size()) - 1;
      pos_of[{k, l}] = idx;
      if (is_positive(k, l)) rs.positive.push_back(idx);
    }

  // Simple roots: B: beta_0 = a(0,1), beta_k = a(k,k+1);
  //               D: beta_0 = a(-1,2), beta_k = a(k,k+1).
  if (has_zero) {
    rs.simple.push_back(pos_of.at({0, 1}));
    for (int k = 1; k <= n - 1; ++k) rs.simple.push_back(pos_of.at({k, k + 1}));
  } else {
    rs.simple.push_back(pos_of.at({-1, 2}));
    for (int k = 1; k <= n - 1; ++k) rs.simple.push_back(pos_of.at({k, k + 1}));
  }
  finish(rs);
  return rs;
}

RootSystem build_c(int n) {
  RootSystem rs;
  rs.family = Family::C;
  rs.rank = n;
  // (A_ii, A_jj) = 4(n+1) d_ij
  rs.kinv = diagonal_kinv(n, 4LL * (n + 1));
  // alpha_pq(i) = delta_ip - delta_iq (p != q);
  // alpha'_pq(i) = delta_ip + delta_iq (p <= q) and its negative.
  auto push = [&](const std::string& label, std::vector<long long> v,
                  bool positive) {
    rs.labels.push_back(label);
    rs.roots.push_back(int_vec(v));
    if (positive) rs.positive.push_back(static_cast<int>(rs.roots.size()) - 1);
    return static_cast<int>(rs.roots.size()) - 1;
  };
  std::map<std::pair<int, int>, int> alpha_of;
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q) {
      if (p == q) continue;
      std::vector<long long> v(n, 0);
      v[p - 1] += 1;
      v[q - 1] -= 1;
      int idx = push("a" + idx_pair(p, q), v, p < q);
      alpha_of[{p, q}] = idx;
    }
  std::map<std::pair<int, int>, int> alphap_of;
  for (int p = 1; p <= n; ++p)
    for (int q = p; q <= n; ++q) {
      std::vector<long long> v(n, 0);
      v[p - 1] += 1;
      v[q - 1] += 1;
      int idx = push("a'" + idx_pair(p, q), v, true);
      alphap_of[{p, q}] = idx;
      std::vector<long long> w(n, 0);
      w[p - 1] -= 1;
      w[q - 1] -= 1;
      push("-a'" + idx_pair(p, q), w, false);
    }
  for (int p = 1; p <= n - 1; ++p) rs.simple.push_back(alpha_of.at({p, p + 1}));
  rs.simple.push_back(alphap_of.at({n, n}));
  finish(rs);
  return rs;
}

// Exact solve S x = r for the simple-root expansion (S columns = simple
// root coordinate vectors).  Gaussian elimination over the rationals.
std::vector<Rational> rational_solve(std::vector<std::vector<Rational>> A,
                                     std::vector<Rational> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!A[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::runtime_error("singular simple-root system");
    std::swap(A[col], A[pivot]);
    std::swap(b[col], b[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == col || A[r][col].is_zero()) continue;
      Rational f = A[r][col] / A[col][col];
      for (int c2 = col; c2 < n; ++c2) A[r][c2] -= f * A[col][c2];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
  return x;
}

}  // namespace

RootSystem build_root_system(Family family, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (family == Family::D && rank < 2)
    throw std::invalid_argument("D_n requires rank >= 2");
  RootSystem rs;
  switch (family) {
    case Family::A: rs = build_a(rank); break;
    case Family::B: rs = build_bd(Family::B, rank); break;
    case Family::C: rs = build_c(rank); break;
    case Family::D: rs = build_bd(Family::D, rank); break;
  }
  // cardinality invariants
  const size_t n = static_cast<size_t>(rank);
  size_t expect = 0;
  switch (family) {
    case Family::A: expect = (n + 1) * (n + 1) - (n + 1); break;
    case Family::B:
    case Family::C: expect = 2 * n * n; break;
    case Family::D: expect = 2 * n * (n - 1); break;
  }
  if (rs.roots.size() != expect || rs.positive.size() != expect / 2 ||
      rs.simple.size() != n)
    throw std::logic_error("root system cardinality check failed");
  return rs;
}

Eigen::MatrixXi cartan_matrix(const RootSystem& rs) {
  const int n = rs.rank;
  Eigen::MatrixXi A(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational a = (Rational(2) * rs.gram[i][j]) / rs.gram[i][i];
      if (!a.is_integer())
        throw std::logic_error("non-integer Cartan matrix entry");
      A(i, j) = static_cast<int>(a.num());
    }
  return A;
}

std::vector<long long> simple_root_expansion(const RootSystem& rs,
                                             int root_index) {
  if (root_index < 0 || root_index >= static_cast<int>(rs.roots.size()))
    throw std::out_of_range("root index out of range");
  const int n = rs.rank;
  // columns are the simple roots
  std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) A[r][c] = rs.roots[rs.simple[c]][r];
  std::vector<Rational> b(n);
  for (int r = 0; r < n; ++r) b[r] = rs.roots[root_index][r];
  auto x = rational_solve(std::move(A), std::move(b));
  std::vector<long long> out(n);
  bool nonneg = true, nonpos = true;
  for (int i = 0; i < n; ++i) {
    if (!x[i].is_integer())
      throw std::logic_error("non-integer simple-root expansion");
    out[i] = x[i].num();
    nonneg = nonneg && out[i] >= 0;
    nonpos = nonpos && out[i] <= 0;
  }
  if (!nonneg && !nonpos)
    throw std::logic_error("simple-root expansion has mixed signs");
  return out;
}

DynkinDiagram dynkin(const RootSystem& rs) {
  DynkinDiagram d;
  const int n = rs.rank;
  // node numbering: A and C label nodes 1..n, B and D label from 0
  const int start = (rs.family == Family::A || rs.family == Family::C) ? 1 : 0;
  for (int i = 0; i < n; ++i) d.nodes.push_back(std::to_string(start + i));
  Eigen::MatrixXi A = cartan_matrix(rs);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int mult = A(i, j) * A(j, i);
      if (mult == 0) continue;
      DynkinEdge e{i, j, mult, std::nullopt};
      Rational li = rs.gram[i][i], lj = rs.gram[j][j];
      if (li < lj) e.arrow_to = i;
      else if (lj < li) e.arrow_to = j;
      d.edges.push_back(e);
    }
  return d;
}

std::string render_text(const DynkinDiagram& d) {
  const int n = static_cast<int>(d.nodes.size());
  // adjacency for a chain-or-fork layout
  std::vector<std::vector<int>> adj(n);
  std::map<std::pair<int, int>, const DynkinEdge*> edge_of;
  for (const auto& e : d.edges) {
    adj[e.i].push_back(e.j);
    adj[e.j].push_back(e.i);
    edge_of[{std::min(e.i, e.j), std::max(e.i, e.j)}] = &e;
  }
  auto connector = [&](int a, int b) {
    const DynkinEdge& e = *edge_of.at({std::min(a, b), std::max(a, b)});
    std::string line = (e.multiplicity >= 3)   ? "==="
                       : (e.multiplicity == 2) ? "=="
                                               : "--";
    if (!e.arrow_to) return "-" + line + "-";
    return (*e.arrow_to == a) ? "<" + line + "-" : "-" + line + ">";
  };

  int fork = -1;
  for (int i = 0; i < n; ++i)
    if (adj[i].size() >= 3) fork = i;

  std::ostringstream os;
  if (fork < 0) {
    // walk each path component from its lowest endpoint
    std::vector<char> seen(n, 0);
    bool first_component = true;
    for (int start = 0; start < n; ++start) {
      if (seen[start] || adj[start].size() > 1) continue;
      if (!first_component) os << "\n";
      first_component = false;
      int prev = -1, cur = start;
      os << d.nodes[cur];
      seen[cur] = 1;
      while (true) {
        int next = -1;
        for (int nb : adj[cur])
          if (nb != prev) next = nb;
        if (next < 0) break;
        os << " " << connector(cur, next) << " " << d.nodes[next];
        prev = cur;
        cur = next;
        seen[cur] = 1;
      }
    }
  } else {
    // two branch tips above each other, then the chain from the fork node
    std::vector<int> tips;
    std::vector<int> chain_next;
    for (int nb : adj[fork])
      (adj[nb].size() == 1 && static_cast<int>(tips.size()) < 2 &&
       nb < fork ? tips : chain_next)
          .push_back(nb);
    for (int t : tips) os << d.nodes[t] << " " << connector(t, fork) << "\\\n";
    os << "   " << d.nodes[fork];
    int prev = fork;
    int cur = chain_next.empty() ? -1 : chain_next.front();
    while (cur >= 0) {
      os << " " << connector(prev, cur) << " " << d.nodes[cur];
      int next = -1;
      for (int nb : adj[cur])
        if (nb != prev) next = nb;
      prev = cur;
      cur = next;
    }
  }
  os << "\n";
  return os.str();
}

std::string render_dot(const DynkinDiagram& d) {
  std::ostringstream os;
  os << "graph dynkin {\n  rankdir=LR;\n";
  for (size_t i = 0; i < d.nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << d.nodes[i] << "\", shape=circle];\n";
  for (const auto& e : d.edges) {
    os << "  n" << e.i << " -- n" << e.j << " [label=\"" << e.multiplicity
       << "\"";
    if (e.arrow_to)
      os << ", dir=" << (*e.arrow_to == e.j ? "forward" : "back")
         << ", arrowhead=normal";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::vector<std::vector<long long>> roots_from_adjoint(
    const LieAlgebra& g, const std::vector<int>& cartan_indices,
    double snap_tol) {
  const int n = g.dim();
  const int r = static_cast<int>(cartan_indices.size());
  if (r == 0) return {};
  std::vector<Mat> ad(r);
  for (int a = 0; a < r; ++a) {
    int idx = cartan_indices[a];
    if (idx < 0 || idx >= n)
      throw std::out_of_range("cartan index out of range");
    ad[a] = g.ad_matrix(Vec::Unit(n, idx));
  }
  // commuting check
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      if ((ad[a] * ad[b] - ad[b] * ad[a]).lpNorm<Eigen::Infinity>() > 1e-12)
        throw std::invalid_argument(
            "selected Cartan elements do not commute under ad");

  // integer eigenvalue box from Gershgorin radii
  long long bound = 0;
  for (int a = 0; a < r; ++a) {
    double rowmax = 0.0;
    for (int i = 0; i < n; ++i) rowmax = std::max(rowmax, ad[a].row(i).lpNorm<1>());
    bound = std::max(bound, static_cast<long long>(std::ceil(rowmax)));
  }

  std::vector<std::vector<long long>> found;
  std::vector<long long> tuple(r, -bound);
  while (true) {
    bool zero = true;
    for (long long t : tuple) zero = zero && (t == 0);
    if (!zero) {
      Mat stacked(r * n, n);
      for (int a = 0; a < r; ++a)
        stacked.middleRows(a * n, n) =
            ad[a] - static_cast<double>(tuple[a]) * Mat::Identity(n, n);
      int kdim = n - svd_rank(stacked, snap_tol);
      for (int c = 0; c < kdim; ++c) found.push_back(tuple);
    }
    int pos = r - 1;
    while (pos >= 0 && tuple[pos] == bound) tuple[pos--] = -bound;
    if (pos < 0) break;
    ++tuple[pos];
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace liemech
