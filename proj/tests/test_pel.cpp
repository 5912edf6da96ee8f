#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shimura/report/pipeline.hpp"
#include "shimura/exactfield/parse.hpp"
#include "shimura/intlat/linalg.hpp"
#include "support.hpp"

using namespace shimura;
using test::approx;

namespace {

const Pipeline& pipeline() {
  static const Pipeline p(128);
  return p;
}

bool same(const ComplexBall& b, const TowerElem& x) {
  // the exact value's embedding must overlap the ball
  ComplexBall d = b - embed(x, b.precision());
  return d.contains_zero();
}

}  // namespace

TEST_CASE("trace pair inversion") {
  CHECK(solve_trace_pair(0, -1) == parse_tower("1/3 + 2/3*rho"));
  CHECK(solve_trace_pair(1, 1) == -TowerElem::rho());
  CHECK(solve_trace_pair(2, -1) == TowerElem(1));
  std::mt19937 g(21);
  for (int k = 0; k < 200; ++k) {
    TowerElem x = test::random_k(g);
    auto [g0, g1] = trace_pair(x);
    // traces from the complex embedding: tr(y) = 2 Re(y)
    CHECK(std::abs(g0.get_d() - 2 * static_cast<double>(approx(x).real())) < 1e-9);
    CHECK(std::abs(g1.get_d() - 2 * static_cast<double>(approx(TowerElem::rho() * x).real())) < 1e-9);
    CHECK(solve_trace_pair(g0, g1) == x);
  }
}

TEST_CASE("module, pairing blocks and T") {
  const Pipeline& p = pipeline();
  IntMat m = p.module.m3;
  CHECK(is_zero_matrix(IntMat(mul(m, m) + m + identity<Integer>(6))));
  CHECK(abs(det_bareiss(p.module.l)) == 1);
  CHECK(equal(p.pairing.g0(), example::displayed_pairing_block()));
  CHECK(equal(p.pairing.g1(), example::displayed_rho_pairing_block()));
  CHECK(equal(p.t.matrix(), example::displayed_T()));
  CHECK(equal(adjoint(p.t.matrix()), TowerMat(-p.t.matrix())));
}

TEST_CASE("solve_T reproduces random skew-Hermitian matrices") {
  std::mt19937 g(4);
  int done = 0;
  while (done < 50) {
    TowerMat t(3, 3);
    for (int i = 0; i < 3; ++i) {
      // diagonal entries are purely imaginary in K: multiples of rho - rho^2 = sqrt(-3)
      t(i, i) = TowerElem(test::random_rational(g)) * (TowerElem::rho() - TowerElem::rho() * TowerElem::rho());
      for (int j = i + 1; j < 3; ++j) {
        t(i, j) = test::random_k(g);
        t(j, i) = -conj(t(i, j));
      }
    }
    if (is_zero(determinant(t))) continue;
    ++done;
    SkewHermitian3 s(t);
    RatMat g0(3, 3), g1(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        auto [a, b] = trace_pair(t(i, j));
        g0(i, j) = a;
        g1(i, j) = b;
      }
    CHECK(equal(solve_T(g0, g1).matrix(), t));
  }
}

TEST_CASE("skew-Hermitian validation") {
  TowerMat h = identity<TowerElem>(3);
  CHECK_THROWS_AS(SkewHermitian3{h}, NotSkewHermitian);
  TowerMat a = pipeline().t.matrix();
  a(0, 1) = TowerElem::alpha();
  a(1, 0) = -TowerElem::alpha();
  CHECK_THROWS_AS(SkewHermitian3{a}, std::invalid_argument);
  TowerMat b = pipeline().t.matrix();
  b(0, 2) = TowerElem(1);
  CHECK_THROWS_AS(SkewHermitian3{b}, NotSkewHermitian);
}

TEST_CASE("signature and integrality") {
  const Pipeline& p = pipeline();
  Signature s = signature(p.t, 128);
  CHECK(s.verdict == Verdict::pass);
  CHECK(s.positive == 2);
  CHECK(s.negative == 1);
  Signature n = signature(-p.t, 128);
  CHECK(n.positive == 1);
  CHECK(n.negative == 2);

  IntegralityResult r = integrality_check(p.t, p.pairing.g);
  CHECK(r.holds());
  IntegralityResult half = integrality_check(p.t.scaled(make_rational(1, 2)), p.pairing.g);
  CHECK_FALSE(half.integral);
  CHECK_FALSE(half.offending.empty());
}

TEST_CASE("Hermitian congruence on random matrices") {
  std::mt19937 g(8);
  for (int k = 0; k < 40; ++k) {
    TowerMat h(3, 3);
    for (int i = 0; i < 3; ++i) {
      h(i, i) = TowerElem(test::random_rational(g));
      for (int j = i + 1; j < 3; ++j) {
        h(i, j) = k % 4 == 0 ? TowerElem(0) : test::random_k(g);
        h(j, i) = conj(h(i, j));
      }
    }
    if (k % 5 == 0) h(0, 0) = 0;
    Congruence<TowerElem> c = hermitian_congruence(h);
    TowerMat d = diagonal(c.d);
    CHECK(equal(mul(adjoint(c.q), mul(d, c.q)), h));
    for (const auto& x : c.d) CHECK(x.is_real());
  }
}

TEST_CASE("diagonalization routes agree") {
  const Pipeline& p = pipeline();
  REQUIRE(p.diag.exact);
  CHECK(defw_holds(p.t, *p.diag.exact));
  CHECK(p.diag.ball_residual_contains_zero);
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j) CHECK(same(p.diag.ball(i, j), (*p.diag.exact)(i, j)));
  CHECK(defw_holds(p.t, p.anchored_w));
  CHECK_FALSE(defw_holds(p.t, example::displayed_W()));
  CHECK_FALSE(is_zero_matrix(defw_residual(p.t, example::displayed_W())));
}

TEST_CASE("conventions resolve uniquely") {
  const Pipeline& p = pipeline();
  REQUIRE(p.search.chosen);
  CHECK_FALSE(p.search.ambiguous);
  const Conventions& c = p.conventions();
  CHECK(c.embedding == Embedding::sigma);
  CHECK(c.i2 == I2Reading::identity);
  CHECK(c.order == ColumnOrder::standard);
  CHECK(p.search.best().defw_holds);
  CHECK(p.search.best().anchor_columns);
  for (const auto& o : p.search.outcomes)
    if (o.w_name == "displayed") CHECK_FALSE(o.defw_holds);
}

TEST_CASE("family column of u1") {
  const AffineMat& f = pipeline().family();
  CHECK(f(0, 0) == parse_affine("3^(-1/4)*z2"));
  CHECK(f(1, 0) == AffineForm());
  CHECK(f(2, 0) == parse_affine("3^(-1/4)"));
}

TEST_CASE("endomorphism and polarization identities") {
  const Pipeline& p = pipeline();
  CHECK(endomorphism_check(p.family(), rho_in_u_basis(p.module), p.conventions()).holds);
  for (const ExactPoint& pt : example::ball_sample_points())
    CHECK(polarization_identity_check(p.family(), p.pairing.g, BallPoint::embed(pt, 256), 256) == Verdict::pass);
}

TEST_CASE("special point and matching constants") {
  const Pipeline& p = pipeline();
  REQUIRE(p.match);
  example::MatchValues want = example::displayed_match();
  CHECK(p.match->z1 == want.z1);
  CHECK(p.match->z2 == want.z2);
  CHECK(p.match->c11 == want.c11);
  CHECK(p.match->c22 == want.c22);
  CHECK(p.match->c23 == want.c23);
  CHECK(p.match->c32 == want.c32);
  CHECK(p.match->c33 == want.c33);
  TowerElem norm = p.match->z1 * conj(p.match->z1) + p.match->z2 * conj(p.match->z2);
  CHECK(norm == TowerElem(2) - TowerElem(2) * TowerElem::sqrt3() * TowerElem(make_rational(1, 3)));
  // high-precision value computed separately
  CHECK(std::abs(static_cast<double>(approx(norm).real()) - 0.8452994616207484709817) < 1e-15);
  CHECK(equal(evaluate(matched_family(*p.match, p.family()), p.match->point()), p.target()));
}

TEST_CASE("self-match recovers a random point with identity constants") {
  const AffineMat& f = pipeline().family();
  std::mt19937 g(13);
  for (int k = 0; k < 10; ++k) {
    TowerElem z1 = test::gaussian(make_rational(std::uniform_int_distribution<int>(-3, 3)(g), 10),
                                  make_rational(std::uniform_int_distribution<int>(-3, 3)(g), 10));
    TowerElem z2 = test::gaussian(make_rational(std::uniform_int_distribution<int>(-3, 3)(g), 10),
                                  make_rational(std::uniform_int_distribution<int>(-3, 3)(g), 10));
    ExactPoint pt;
    pt.set(Param::z1, z1).set(Param::z2, z2);
    MatchResult m = match_solver(f, evaluate(f, pt));
    CHECK(m.z1 == z1);
    CHECK(m.z2 == z2);
    CHECK(equal(m.c(), identity<TowerElem>(3)));
  }
}

TEST_CASE("match failure on an inconsistent target") {
  const AffineMat& f = pipeline().family();
  TowerMat target = pipeline().target();
  target(1, 2) += TowerElem(1);
  CHECK_THROWS_AS(match_solver(f, target), MatchFailure);
}

TEST_CASE("Prym and genus-4 families at the special point") {
  const Pipeline& p = pipeline();
  REQUIRE(p.prym);
  REQUIRE(p.genus4);
  CHECK(identically_zero(riemann_first_relation(*p.prym)));
  CHECK(identically_zero(riemann_first_relation(*p.genus4)));
  CHECK(equal(evaluate(p.prym->entries(), p.match->point()), example::z3special()));
  CHECK(equal(p.genus4->substitute(p.match->point()).entries(), example::genus4_period_matrix()));
  for (const ExactPoint& pt : example::ball_sample_points())
    CHECK(riemann_positivity(*p.prym, BallPoint::embed(pt, 128), 128).verdict == Verdict::pass);
}

TEST_CASE("module rejects a degenerate basis choice") {
  auto u = example::u_choice();
  u[1] = u[0];
  CHECK_THROWS_AS(build_module(example::m3(), u), ModuleRejected);
  CHECK_THROWS(build_module(identity<Integer>(6), example::u_choice()));
  try {
    build_module(example::m3(), u);
  } catch (const ModuleRejected& e) {
    CHECK(e.evidence.rank() < 6);
  }
}
