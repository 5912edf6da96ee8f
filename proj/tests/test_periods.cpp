#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shimura/data/genus4.hpp"
#include "shimura/intlat/lattice.hpp"
#include "shimura/intlat/linalg.hpp"
#include "shimura/intlat/smith.hpp"
#include "shimura/periods/automorphism.hpp"
#include "shimura/periods/isogeny.hpp"
#include "shimura/periods/period_matrix.hpp"
#include "support.hpp"

using namespace shimura;
using test::approx;
using test::cd;

namespace {

PeriodMatrix genus4() { return PeriodMatrix(example::genus4_period_matrix(), AlternatingForm(standard_symplectic(4))); }
PeriodMatrix z3() { return PeriodMatrix(to_affine(example::z3special()), AlternatingForm(example::j3())); }

BallPoint tau_at(const TowerElem& t, mpfr_prec_t prec = 128) {
  return BallPoint::embed(ExactPoint().set(Param::tau, t), prec);
}

IntMat columns(const IntMat& m, std::initializer_list<Eigen::Index> idx) {
  IntMat r(m.rows(), static_cast<Eigen::Index>(idx.size()));
  Eigen::Index k = 0;
  for (auto j : idx) r.col(k++) = m.col(j);
  return r;
}

}  // namespace

TEST_CASE("first relation holds identically for the genus-4 matrix") {
  CHECK(identically_zero(riemann_first_relation(genus4())));
  CHECK(identically_zero(riemann_first_relation(z3())));
}

TEST_CASE("first relation detects a perturbed entry") {
  for (Eigen::Index j : {0, 3, 6}) {
    AffineMat e = example::genus4_period_matrix();
    e(1, j) += AffineForm(1);
    CHECK_FALSE(identically_zero(riemann_first_relation(PeriodMatrix(e, AlternatingForm(standard_symplectic(4))))));
  }
  CHECK_FALSE(identically_zero(
      riemann_first_relation(PeriodMatrix(to_affine(example::z3special_as_printed()), AlternatingForm(example::j3())))));
}

TEST_CASE("first relation agrees with a floating evaluation") {
  std::mt19937 g(5);
  AffineMat e = example::genus4_period_matrix();
  for (int trial = 0; trial < 20; ++trial) {
    TowerElem t = test::gaussian(test::random_rational(g), test::random_rational(g));
    TowerMat v = evaluate(e, ExactPoint().set(Param::tau, t));
    // E = J, so Pi J^-1 Pi^T = -Pi J Pi^T
    Eigen::Matrix<cd, 4, 8> pi;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 8; ++j) pi(i, j) = approx(v(i, j));
    Eigen::Matrix<cd, 8, 8> jm = Eigen::Matrix<cd, 8, 8>::Zero();
    for (int k = 0; k < 4; ++k) {
      jm(k, 4 + k) = 1;
      jm(4 + k, k) = -1;
    }
    Eigen::Matrix<cd, 4, 4> rel = pi * jm * pi.transpose();
    CHECK(rel.cwiseAbs().maxCoeff() < 1e-12L);
  }
}

TEST_CASE("positivity in the upper half plane") {
  PeriodMatrix p = genus4();
  CHECK(riemann_positivity(p, tau_at(test::gaussian(0, 2)), 128).verdict == Verdict::pass);
  CHECK(riemann_positivity(p, tau_at(test::gaussian(0, -1)), 128).verdict == Verdict::fail);
  CHECK(riemann_positivity(p, tau_at(test::gaussian(0, 2)), 128, -1).verdict == Verdict::fail);
  std::mt19937 g(9);
  for (int k = 0; k < 20; ++k) {
    Rational re = test::random_rational(g), im = make_rational(std::uniform_int_distribution<int>(1, 40)(g), 8);
    CHECK(riemann_positivity(p, tau_at(test::gaussian(re, im)), 128).verdict == Verdict::pass);
    CHECK(riemann_positivity(p, tau_at(test::gaussian(re, -im)), 128).verdict == Verdict::fail);
  }
  auto r = riemann_positivity(z3(), BallPoint(), 128);
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.minors.size() == 3);
}

TEST_CASE("positivity near the real axis needs precision") {
  Rational tiny = make_rational(1, Integer(1) << 200);
  auto r = riemann_positivity(genus4(), tau_at(test::gaussian(0, tiny), 32), 32);
  CHECK(r.verdict == Verdict::inconclusive);
}

TEST_CASE("isogeny split into an elliptic curve and the Prym") {
  IsogenySplit s = isogeny_split(genus4());
  CHECK(s.block_diagonal);
  CHECK(s.index() == 9);
  CHECK(s.varying_rows == std::vector<Eigen::Index>{0});
  CHECK(s.constant_rows.size() == 3);
  CHECK(same_lattice(s.lambda_e, columns(example::base_change(), {0, 4})));
  CHECK(s.lambda_p.cols() == 6);
  // the elliptic row carries 3 tau and 3 tau + 3 in the two elliptic columns, in either order
  AffineForm a = s.product(0, 0), b = s.product(0, 4), t3 = AffineForm::variable(Param::tau, 3);
  CHECK(((a == t3 && b == t3 + AffineForm(3)) || (b == t3 && a == t3 + AffineForm(3))));
}

TEST_CASE("genus-4 matrix rebuilt from the elliptic block and the Prym") {
  PeriodMatrix f = genus4_family(standard_elliptic_block(), z3(), example::base_change());
  CHECK(equal(f.entries(), example::genus4_period_matrix()));
  CHECK(equal(f.polarization().gram(), standard_symplectic(4)));
}

TEST_CASE("real and imaginary parts") {
  std::mt19937 g(2);
  for (int k = 0; k < 200; ++k) {
    TowerElem x = test::random_elem(g);
    TowerElem re = real_part(x), im = imag_part(x);
    CHECK(re.is_real());
    CHECK(im.is_real());
    CHECK(re + TowerElem::imag_unit() * im == x);
  }
}

TEST_CASE("exactly one automorphism convention holds for the Prym") {
  TowerMat a = example::automorphism_diagonal();
  RatMat m = to_rational(example::m3());
  RatMat minv = *inverse(m);
  AffineMat pi = to_affine(example::z3special());
  RatMat mt = m.transpose();
  int holding = 0;
  for (const RatMat& r : {m, minv, mt, RatMat(*inverse(mt))}) holding += automorphism_check(a, pi, r).holds ? 1 : 0;
  CHECK(holding == 1);
  CHECK(automorphism_check(a, pi, m).holds);
  auto bad = automorphism_check(a, pi, minv);
  CHECK_FALSE(bad.mismatches.empty());
}

TEST_CASE("intertwiner solved from the period matrix") {
  auto r = solve_intertwiner(example::automorphism_diagonal(), to_affine(example::z3special()));
  REQUIRE(r);
  CHECK(equal(*r, to_rational(example::m3())));

  // an order-6 deck element on the genus-4 matrix
  TowerMat a = diagonal({TowerElem::zeta(6), TowerElem::zeta(8), TowerElem::zeta(10), TowerElem::zeta(10)});
  auto r4 = solve_intertwiner(a, example::genus4_period_matrix());
  REQUIRE(r4);
  IntMat ri = to_integer(*r4);
  CHECK(equal(mul(IntMat(ri.transpose()), mul(standard_symplectic(4), ri)), standard_symplectic(4)));
  CHECK(automorphism_check(a, example::genus4_period_matrix(), *r4).holds);
  IntMat p6 = identity<Integer>(8);
  for (int k = 0; k < 6; ++k) p6 = mul(p6, ri);
  CHECK(equal(p6, identity<Integer>(8)));

  // a non-intertwining action has no rational solution
  CHECK_FALSE(solve_intertwiner(diagonal({TowerElem::zeta(1), TowerElem::zeta(1), TowerElem::zeta(1)}),
                                to_affine(example::z3special())));
}

TEST_CASE("period matrix validation") {
  CHECK_THROWS(PeriodMatrix(example::genus4_period_matrix(), AlternatingForm(standard_symplectic(3))));
  CHECK_THROWS(AlternatingForm(int_matrix({{0, 1}, {1, 0}})));
  CHECK(genus4().params() == std::vector<Param>{Param::tau});
  CHECK(genus4().genus() == 4);
}
