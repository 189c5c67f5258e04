#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "liemech/roots.hpp"

using namespace liemech;

namespace {

size_t expected_count(Family f, size_t n) {
  switch (f) {
    case Family::A: return (n + 1) * (n + 1) - (n + 1);
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
  }
  return 0;
}

std::vector<long long> as_ints(const RationalVec& v) {
  std::vector<long long> out;
  for (const Rational& r : v) {
    REQUIRE(r.is_integer());
    out.push_back(r.num());
  }
  return out;
}

}  // namespace

TEST_CASE("cardinalities match the closed formulas for ranks up to 6") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    int lo = f == Family::D ? 2 : 1;
    for (int n = lo; n <= 6; ++n) {
      CAPTURE(family_char(f));
      CAPTURE(n);
      RootSystem rs = build_root_system(f, n);
      CHECK(rs.roots.size() == expected_count(f, n));
      CHECK(rs.positive.size() == expected_count(f, n) / 2);
      CHECK(rs.simple.size() == static_cast<size_t>(n));
    }
  }
  CHECK(build_root_system(Family::A, 3).positive.size() == 6);
  CHECK(build_root_system(Family::B, 2).roots.size() == 8);
  CHECK(build_root_system(Family::D, 3).roots.size() == 12);
}

TEST_CASE("unsupported ranks are rejected") {
  CHECK_THROWS_AS(build_root_system(Family::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_root_system(Family::D, 1), std::invalid_argument);
}

TEST_CASE("every root is a signed integer combination of the simple roots") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    int lo = f == Family::D ? 2 : 1;
    for (int n = lo; n <= 5; ++n) {
      RootSystem rs = build_root_system(f, n);
      for (size_t r = 0; r < rs.roots.size(); ++r) {
        auto coeffs = simple_root_expansion(rs, static_cast<int>(r));
        // reconstruct and compare exactly
        RationalVec acc(n, Rational(0));
        for (int s = 0; s < n; ++s)
          for (int c = 0; c < n; ++c)
            acc[c] += Rational(coeffs[s]) * rs.roots[rs.simple[s]][c];
        for (int c = 0; c < n; ++c) CHECK(acc[c] == rs.roots[r][c]);
      }
    }
  }
}

TEST_CASE("positive roots have nonnegative expansions; negatives mirror them") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    RootSystem rs = build_root_system(f, 4);
    std::set<int> pos(rs.positive.begin(), rs.positive.end());
    for (size_t r = 0; r < rs.roots.size(); ++r) {
      auto coeffs = simple_root_expansion(rs, static_cast<int>(r));
      bool nonneg = std::all_of(coeffs.begin(), coeffs.end(),
                                [](long long c) { return c >= 0; });
      CHECK(nonneg == (pos.count(static_cast<int>(r)) > 0));
    }
  }
}

TEST_CASE("simple-root expansions: closed forms per family") {
  // A_n: alpha_pq = sum_{i=p}^{q-1} beta_i for p < q
  RootSystem a4 = build_root_system(Family::A, 4);
  for (size_t r = 0; r < a4.roots.size(); ++r) {
    const std::string& label = a4.labels[r];
    if (label == "a(1,4)") {
      auto c = simple_root_expansion(a4, static_cast<int>(r));
      CHECK(c == std::vector<long long>{1, 1, 1, 0});
    }
    if (label == "a(2,5)") {
      auto c = simple_root_expansion(a4, static_cast<int>(r));
      CHECK(c == std::vector<long long>{0, 1, 1, 1});
    }
  }

  // any simple root expands to a unit vector
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    RootSystem rs = build_root_system(f, 3);
    for (int s = 0; s < rs.rank; ++s) {
      auto c = simple_root_expansion(rs, rs.simple[s]);
      for (int i = 0; i < rs.rank; ++i)
        CHECK(c[i] == (i == s ? 1 : 0));
    }
  }

  // C_n: alpha'_qq = beta_n + 2 sum_{i=q}^{n-1} beta_i
  RootSystem c3 = build_root_system(Family::C, 3);
  for (size_t r = 0; r < c3.roots.size(); ++r) {
    if (c3.labels[r] == "a'(1,1)") {
      auto c = simple_root_expansion(c3, static_cast<int>(r));
      CHECK(c == std::vector<long long>{2, 2, 1});
    }
    if (c3.labels[r] == "a'(2,2)") {
      auto c = simple_root_expansion(c3, static_cast<int>(r));
      CHECK(c == std::vector<long long>{0, 2, 1});
    }
  }

  // B_n negative-index positives: alpha_kl = sum_{|k|}^{l-1} + 2 sum_0^{|k|-1}
  RootSystem b3 = build_root_system(Family::B, 3);
  for (size_t r = 0; r < b3.roots.size(); ++r) {
    if (b3.labels[r] == "a(-1,2)") {
      auto c = simple_root_expansion(b3, static_cast<int>(r));
      CHECK(c == std::vector<long long>{2, 1, 0});
    }
    if (b3.labels[r] == "a(0,2)") {
      auto c = simple_root_expansion(b3, static_cast<int>(r));
      CHECK(c == std::vector<long long>{1, 1, 0});
    }
  }
}

TEST_CASE("cartan matrices") {
  // A_n: 2 delta - neighbors, exactly
  for (int n = 1; n <= 6; ++n) {
    Eigen::MatrixXi cm = cartan_matrix(build_root_system(Family::A, n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int expect = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
        CHECK(cm(i, j) == expect);
      }
  }
  CHECK(cartan_matrix(build_root_system(Family::A, 1))(0, 0) == 2);

  // diagonals 2, off-diagonals in {0,-1,-2}; B_2 product rule
  for (Family f : {Family::B, Family::C, Family::D}) {
    for (int n = f == Family::D ? 2 : 1; n <= 6; ++n) {
      Eigen::MatrixXi cm = cartan_matrix(build_root_system(f, n));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j)
            CHECK(cm(i, j) == 2);
          else {
            CHECK(cm(i, j) <= 0);
            CHECK(cm(i, j) >= -2);
          }
        }
    }
  }
  Eigen::MatrixXi b2 = cartan_matrix(build_root_system(Family::B, 2));
  CHECK(b2(0, 1) * b2(1, 0) == 2);
}

TEST_CASE("gram matrix on simple roots is symmetric positive definite") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    RootSystem rs = build_root_system(f, 4);
    Mat g(rs.rank, rs.rank);
    for (int i = 0; i < rs.rank; ++i)
      for (int j = 0; j < rs.rank; ++j) {
        CHECK(rs.gram[i][j] == rs.gram[j][i]);
        g(i, j) = rs.gram[i][j].to_double();
      }
    Eigen::SelfAdjointEigenSolver<Mat> es(g);
    CHECK(es.eigenvalues().minCoeff() > 0.0);
  }
}

TEST_CASE("B_n simple-root inner products: closed-form values") {
  for (int n = 2; n <= 5; ++n) {
    RootSystem rs = build_root_system(Family::B, n);
    // (beta_0, beta_0) = 1/(2(2n-1)), (beta_k, beta_k) = 1/(2n-1),
    // (beta_k, beta_k) = -2 (beta_{k-1}, beta_k) for k >= 1
    CHECK(rs.gram[0][0] == Rational(1, 2 * (2 * n - 1)));
    for (int k = 1; k < n; ++k) {
      CHECK(rs.gram[k][k] == Rational(1, 2 * n - 1));
      CHECK(rs.gram[k][k] == Rational(-2) * rs.gram[k - 1][k]);
    }
  }
}

TEST_CASE("C_n and D_n simple-root inner products: closed-form values") {
  for (int n = 2; n <= 5; ++n) {
    RootSystem rs = build_root_system(Family::C, n);
    // (beta_p, beta_q) = (2 d_pq - d_{p,q+1} - d_{p+1,q}) / (4(n+1)),
    // (beta_p, beta_n) = -d_{p,n-1} / (2(n+1)), (beta_n, beta_n) = 1/(n+1)
    for (int p = 0; p < n - 1; ++p)
      for (int q = 0; q < n - 1; ++q) {
        long long v = 2 * (p == q) - (p == q + 1) - (p + 1 == q);
        CHECK(rs.gram[p][q] == Rational(v, 4 * (n + 1)));
      }
    for (int p = 0; p < n - 1; ++p)
      CHECK(rs.gram[p][n - 1] ==
            (p == n - 2 ? Rational(-1, 2 * (n + 1)) : Rational(0)));
    CHECK(rs.gram[n - 1][n - 1] == Rational(1, n + 1));
  }
  for (int n = 3; n <= 5; ++n) {
    RootSystem rs = build_root_system(Family::D, n);
    // (beta_0, beta_0) = (beta_k, beta_k) = -2 (beta_0, beta_2)
    //   = -2 (beta_k, beta_{k+1}) = 1/(2(n-1)), and (beta_0, beta_1) = 0
    Rational len(1, 2 * (n - 1));
    CHECK(rs.gram[0][0] == len);
    CHECK(rs.gram[0][1] == Rational(0));
    CHECK(rs.gram[0][2] == Rational(-1) * len / Rational(2));
    for (int k = 1; k < n; ++k) {
      CHECK(rs.gram[k][k] == len);
      if (k + 1 < n) CHECK(rs.gram[k][k + 1] == Rational(-1) * len / Rational(2));
    }
  }
}

TEST_CASE("closure: every positive non-simple root is a sum of two positives") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int n = f == Family::D ? 2 : 2; n <= 4; ++n) {
      RootSystem rs = build_root_system(f, n);
      std::set<std::vector<long long>> positives;
      for (int p : rs.positive) positives.insert(as_ints(rs.roots[p]));
      std::set<int> simple(rs.simple.begin(), rs.simple.end());
      for (int p : rs.positive) {
        if (simple.count(p)) continue;
        auto target = as_ints(rs.roots[p]);
        bool found = false;
        for (const auto& a : positives) {
          std::vector<long long> b(target.size());
          for (size_t i = 0; i < b.size(); ++i) b[i] = target[i] - a[i];
          if (positives.count(b)) {
            found = true;
            break;
          }
        }
        CAPTURE(rs.labels[p]);
        CHECK(found);
      }
    }
  }
}

TEST_CASE("dynkin diagram shapes per family") {
  // A_4: path on 4 nodes labeled 1..4, all single edges
  DynkinDiagram a4 = dynkin(build_root_system(Family::A, 4));
  CHECK(a4.nodes == std::vector<std::string>{"1", "2", "3", "4"});
  REQUIRE(a4.edges.size() == 3);
  for (const auto& e : a4.edges) {
    CHECK(e.multiplicity == 1);
    CHECK_FALSE(e.arrow_to.has_value());
  }

  // B_3: chain 0-1-2 with a double edge and the arrow toward node 0
  DynkinDiagram b3 = dynkin(build_root_system(Family::B, 3));
  CHECK(b3.nodes.front() == "0");
  int doubles = 0;
  for (const auto& e : b3.edges)
    if (e.multiplicity == 2) {
      ++doubles;
      REQUIRE(e.arrow_to.has_value());
      CHECK(*e.arrow_to == 0);
      CHECK(((e.i == 0 && e.j == 1) || (e.i == 1 && e.j == 0)));
    }
  CHECK(doubles == 1);

  // C_3: double edge at the n end, arrow toward node n-1
  DynkinDiagram c3 = dynkin(build_root_system(Family::C, 3));
  doubles = 0;
  for (const auto& e : c3.edges)
    if (e.multiplicity == 2) {
      ++doubles;
      REQUIRE(e.arrow_to.has_value());
      // nodes are labeled 1..n, positions 0..n-1; the arrow points to n-1
      CHECK(*e.arrow_to == 1);
      CHECK(((e.i == 1 && e.j == 2) || (e.i == 2 && e.j == 1)));
    }
  CHECK(doubles == 1);

  // D_4: exactly one node of degree 3, all single edges
  DynkinDiagram d4 = dynkin(build_root_system(Family::D, 4));
  std::vector<int> degree(4, 0);
  for (const auto& e : d4.edges) {
    CHECK(e.multiplicity == 1);
    CHECK_FALSE(e.arrow_to.has_value());
    ++degree[e.i];
    ++degree[e.j];
  }
  CHECK(std::count(degree.begin(), degree.end(), 3) == 1);

  // D_3 is a path (A_3 in disguise)
  DynkinDiagram d3 = dynkin(build_root_system(Family::D, 3));
  std::vector<int> deg3(3, 0);
  for (const auto& e : d3.edges) {
    ++deg3[e.i];
    ++deg3[e.j];
  }
  CHECK(*std::max_element(deg3.begin(), deg3.end()) == 2);

  // renders exist and mention every node
  std::string txt = render_text(b3);
  std::string dot = render_dot(d4);
  for (const auto& node : b3.nodes)
    CHECK(txt.find(node) != std::string::npos);
  CHECK(dot.find("graph dynkin") == 0);

  // D_2 = A_1 x A_1 is disconnected; both nodes must still be rendered
  DynkinDiagram d2 = dynkin(build_root_system(Family::D, 2));
  CHECK(d2.edges.empty());
  std::string txt2 = render_text(d2);
  CHECK(txt2.find("0") != std::string::npos);
  CHECK(txt2.find("1") != std::string::npos);
}

TEST_CASE("roots_from_adjoint reproduces the constructed systems") {
  struct Case {
    Family f;
    int rank;
    LieAlgebra g;
  };
  std::vector<Case> cases;
  cases.push_back({Family::A, 1, sl(2)});
  cases.push_back({Family::A, 2, sl(3)});
  cases.push_back({Family::A, 3, sl(4)});
  cases.push_back({Family::B, 2, so_split_f(3, 2)});
  cases.push_back({Family::C, 2, sp(4)});
  cases.push_back({Family::D, 3, so_split_f(3, 3)});
  for (auto& c : cases) {
    CAPTURE(c.rank);
    std::vector<int> cartan;
    for (int i = 0; i < c.rank; ++i) cartan.push_back(i);
    auto found = roots_from_adjoint(c.g, cartan);
    RootSystem rs = build_root_system(c.f, c.rank);
    std::vector<std::vector<long long>> expected;
    for (const auto& r : rs.roots) expected.push_back(as_ints(r));
    std::sort(expected.begin(), expected.end());
    CHECK(found == expected);
  }
}

TEST_CASE("so(5): the positive and simple sets are the listed ones") {
  RootSystem b2 = build_root_system(Family::B, 2);
  std::set<std::string> pos;
  for (int p : b2.positive) pos.insert(b2.labels[p]);
  CHECK(pos == std::set<std::string>{"a(-1,2)", "a(0,1)", "a(0,2)", "a(1,2)"});
  CHECK(b2.labels[b2.simple[0]] == "a(0,1)");
  CHECK(b2.labels[b2.simple[1]] == "a(1,2)");
}

TEST_CASE("roots_from_adjoint: sl(2) eigenvalues, abelian gives nothing") {
  auto sl2_roots = roots_from_adjoint(sl(2), {0});
  REQUIRE(sl2_roots.size() == 2);
  CHECK(sl2_roots[0] == std::vector<long long>{-2});
  CHECK(sl2_roots[1] == std::vector<long long>{2});

  auto none = roots_from_adjoint(abelian(3), {0, 1, 2});
  CHECK(none.empty());
}

TEST_CASE("roots_from_adjoint rejects non-commuting selections") {
  CHECK_THROWS_AS(roots_from_adjoint(so3(), {0, 1}), std::invalid_argument);
}
