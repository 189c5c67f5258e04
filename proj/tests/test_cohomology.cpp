#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liemech/cohomology.hpp"
#include "liemech/linalg.hpp"
#include "support/oracles.hpp"

using namespace liemech;
using liemech::testing::random_vec;

TEST_CASE("d1 on so3: theta = f3") {
  LieAlgebra g = so3();
  CeComplex ce(g);
  Vec omega = ce.d1(Vec::Unit(3, 2));
  CHECK(ce.at2(omega, 0, 1) == doctest::Approx(-1.0));  // (e1,e2) slot
  CHECK(ce.at2(omega, 0, 2) == 0.0);
  CHECK(ce.at2(omega, 1, 2) == 0.0);

  CHECK(ce.d1(Vec::Zero(3)).norm() == 0.0);
}

TEST_CASE("abelian algebras: d1 = 0, d2 = 0, h1 = n") {
  for (int n : {2, 4, 5}) {
    LieAlgebra g = abelian(n);
    CeComplex ce(g);
    CHECK(ce.d1_matrix().norm() == 0.0);
    CHECK(ce.d2_matrix().norm() == 0.0);
    CHECK(ce.h1_dim() == n);
  }
}

TEST_CASE("d2 o d1 = 0 exhaustively over basis cochains") {
  for (const LieAlgebra& g :
       {so3(), sl(2), sl(3), sp(4), galilei(), cm3(), heavy_top3()}) {
    CAPTURE(g.name());
    CeComplex ce(g);
    Mat dd = ce.d2_matrix() * ce.d1_matrix();
    CHECK(dd.lpNorm<Eigen::Infinity>() <= 1e-13);
  }
}

TEST_CASE("d2(d1(theta)) = 0 on random cochains") {
  std::mt19937_64 rng(41);
  for (const LieAlgebra& g : {so3(), galilei(), sl(3)}) {
    CeComplex ce(g);
    for (int s = 0; s < 100; ++s) {
      Vec theta = random_vec(g.dim(), rng);
      CHECK(ce.d2(ce.d1(theta)).lpNorm<Eigen::Infinity>() <= 1e-13);
    }
  }
}

TEST_CASE("cohomology dimensions of the semisimple builders vanish") {
  for (const LieAlgebra& g :
       {so3(), sl(2), sl(3), sp(4), so_compact(4), so_compact(5)}) {
    CAPTURE(g.name());
    CeComplex ce(g);
    CHECK(ce.h1_dim() == 0);
    CHECK(ce.h2_dim() == 0);
  }
}

TEST_CASE("galilei: h2 = 1 with the mass cocycle as witness") {
  LieAlgebra g = galilei();
  CeComplex ce(g);
  CHECK(ce.h2_dim() == 1);

  Vec sigma = galilei_cocycle(g, 1.0);
  CHECK(ce.is_cocycle(sigma));
  CHECK(ce.d2(sigma).lpNorm<Eigen::Infinity>() <= 1e-13);
  CHECK_FALSE(ce.is_coboundary(sigma));
  CHECK(ce.coboundary_residual(sigma) > 0.5);

  CHECK(galilei_cocycle(g, 0.0).norm() == 0.0);
  // Sigma(v = e_x, x' = e_x) = m
  Vec s2 = galilei_cocycle(g, 2.0);
  CHECK(ce.at2(s2, 3, 6) == 2.0);
  CHECK(ce.at2(s2, 4, 7) == 2.0);
  CHECK(ce.at2(s2, 3, 7) == 0.0);

  CHECK_THROWS_AS(galilei_cocycle(so3(), 1.0), std::invalid_argument);
}

TEST_CASE("coboundaries are recognized; closed so3 2-cochains are exact") {
  std::mt19937_64 rng(43);
  for (const LieAlgebra& g : {so3(), galilei(), sl(3)}) {
    CeComplex ce(g);
    for (int s = 0; s < 20; ++s) {
      Vec theta = random_vec(g.dim(), rng);
      CHECK(ce.is_coboundary(ce.d1(theta)));
    }
  }
  // h2(so3) = 0: every cocycle is a coboundary
  LieAlgebra g = so3();
  CeComplex ce(g);
  for (int s = 0; s < 20; ++s) {
    Vec omega = random_vec(ce.dim2(), rng);
    if (!ce.is_cocycle(omega)) continue;  // d2 = 0 identically on so3
    CHECK(ce.is_coboundary(omega));
  }
}

TEST_CASE("h2 witnesses: count matches h2 and each is a non-exact cocycle") {
  LieAlgebra g = galilei();
  CeComplex ce(g);
  auto ws = ce.h2_witnesses();
  REQUIRE(static_cast<int>(ws.size()) == ce.h2_dim());
  for (const Mat& w : ws) {
    Vec packed = ce.from_matrix(w);
    CHECK(ce.is_cocycle(packed));
    CHECK_FALSE(ce.is_coboundary(packed));
  }
  CHECK(CeComplex(sl(3)).h2_witnesses().empty());

  // H^2 is one-dimensional, so the witness must be cohomologous to the
  // mass cocycle: sigma = lambda w + d1(theta) for some lambda, theta
  Vec sigma = galilei_cocycle(g, 1.0);
  Vec w_packed = ce.from_matrix(ws[0]);
  Mat aug(ce.dim2(), g.dim() + 1);
  aug.leftCols(g.dim()) = ce.d1_matrix();
  aug.col(g.dim()) = w_packed;
  Vec sol = lsq_solve(aug, sigma);
  CHECK((aug * sol - sigma).lpNorm<Eigen::Infinity>() <= 1e-10);
  CHECK(std::abs(sol[g.dim()]) > 0.1);  // genuinely uses the witness
}

TEST_CASE("h-dimensions are invariant under a change of basis") {
  std::mt19937_64 rng(47);
  for (const LieAlgebra& g : {so3(), galilei(), sl(3)}) {
    CAPTURE(g.name());
    CeComplex ce(g);
    Mat P = Mat::Identity(g.dim(), g.dim());
    for (int i = 0; i < g.dim(); ++i)
      for (int j = 0; j < g.dim(); ++j)
        P(i, j) += 0.3 * random_vec(1, rng)[0];
    LieAlgebra gt = change_basis(g, P);
    CeComplex ct(gt);
    CHECK(ct.h1_dim() == ce.h1_dim());
    CHECK(ct.h2_dim() == ce.h2_dim());
  }
}

TEST_CASE("packed-cochain indexing round trips") {
  LieAlgebra g = galilei();
  CeComplex ce(g);
  std::mt19937_64 rng(53);
  Vec omega = random_vec(ce.dim2(), rng);
  Mat m = ce.to_matrix(omega);
  CHECK((m + m.transpose()).lpNorm<Eigen::Infinity>() == 0.0);
  CHECK((ce.from_matrix(m) - omega).lpNorm<Eigen::Infinity>() == 0.0);
  CHECK(ce.at2(omega, 7, 2) == -ce.at2(omega, 2, 7));
  CHECK_THROWS_AS(ce.from_matrix(Mat::Ones(10, 10)), std::invalid_argument);
}
