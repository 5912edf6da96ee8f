#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shimura/exactfield/ball.hpp"
#include "shimura/exactfield/parse.hpp"
#include "shimura/exactfield/tower.hpp"

#include <complex>
#include <random>

using namespace shimura;
using cd = std::complex<long double>;

namespace {

// independent floating evaluation: zeta = e^{i pi/6}, alpha = 3^{1/4}
cd approx(const TowerElem& x) {
  const long double pi = 3.141592653589793238462643383279502884L;
  cd z = std::polar(1.0L, pi / 6), a = std::pow(3.0L, 0.25L), acc = 0, p = 1;
  for (int k = 0; k < 4; ++k, p *= z) {
    acc += p * static_cast<long double>(x.base()[k].get_d());
    acc += p * a * static_cast<long double>(x.alpha_part()[k].get_d());
  }
  return acc;
}

TowerElem random_elem(std::mt19937& g, bool with_alpha = true) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::array<Rational, 4> b, a;
  for (int k = 0; k < 4; ++k) {
    b[static_cast<std::size_t>(k)] = make_rational(num(g), den(g));
    a[static_cast<std::size_t>(k)] = with_alpha ? make_rational(num(g), den(g)) : Rational(0);
  }
  return TowerElem(CycloElem(b), CycloElem(a));
}

bool close(cd a, cd b, long double tol = 1e-9L) { return std::abs(a - b) <= tol * (1 + std::abs(a) + std::abs(b)); }

}  // namespace

TEST_CASE("cyclotomic relations") {
  TowerElem z = TowerElem::zeta();
  CHECK(pow(z, 12) == TowerElem(1));
  CHECK(pow(z, 6) == TowerElem(-1));
  CHECK(pow(z, 4) == pow(z, 2) - TowerElem(1));
  CHECK(TowerElem::rho() * TowerElem::rho() + TowerElem::rho() + TowerElem(1) == TowerElem());
  CHECK(TowerElem::imag_unit() * TowerElem::imag_unit() == TowerElem(-1));
  CHECK(TowerElem::sqrt3() * TowerElem::sqrt3() == TowerElem(3));
  CHECK(pow(TowerElem::alpha(), 2) == TowerElem::sqrt3());
  CHECK(pow(TowerElem::alpha(), 4) == TowerElem(3));
  CHECK(TowerElem::alpha(-1) * TowerElem::alpha() == TowerElem(1));
  CHECK(z.conj() == pow(z, 11));
  CHECK(TowerElem::alpha().conj() == TowerElem::alpha());
}

TEST_CASE("field axioms and the complex embedding on random elements") {
  std::mt19937 g(7);
  for (int k = 0; k < 1000; ++k) {
    TowerElem a = random_elem(g), b = random_elem(g), c = random_elem(g, k % 2 == 0);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(a.conj().conj() == a);
    CHECK(close(approx(a * b), approx(a) * approx(b)));
    CHECK(close(approx(a.conj()), std::conj(approx(a))));
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == TowerElem(1));
      CHECK(close(approx(a.inverse()), 1.0L / approx(a)));
    }
  }
}

TEST_CASE("subfield predicates and traces") {
  TowerElem r = TowerElem::rho();
  CHECK(r.in_K());
  CHECK_FALSE(TowerElem::zeta().in_K());
  CHECK(trace_K(TowerElem(make_rational(1, 3)) + TowerElem(make_rational(2, 3)) * r) == Rational(0));
  CHECK(trace_K(r) == Rational(-1));
  CHECK_THROWS_AS(trace_K(TowerElem::zeta()), std::domain_error);
  CHECK(TowerElem::sqrt3().is_real());
  CHECK_FALSE(TowerElem::imag_unit().is_real());
}

TEST_CASE("exact square roots of real monomials") {
  auto r = sqrt_real_monomial(TowerElem(make_rational(1, 1)) / TowerElem::sqrt3());
  REQUIRE(r);
  CHECK(*r * *r * TowerElem::sqrt3() == TowerElem(1));
  auto s = sqrt_real_monomial(TowerElem(3) * TowerElem::sqrt3());
  REQUIRE(s);
  CHECK(*s == pow(TowerElem::alpha(), 3));
  CHECK_FALSE(sqrt_real_monomial(TowerElem(2)));
}

TEST_CASE("parser") {
  CHECK(parse_tower("(1/2)+(-1)*zeta^3") == TowerElem(make_rational(1, 2)) - TowerElem::zeta(3));
  CHECK(parse_tower("3^(-1/4)") == TowerElem::alpha(-1));
  CHECK(parse_tower("3^(3/4)*(zeta^3+zeta^2-1)") == TowerElem::alpha(3) * (TowerElem::zeta(3) + TowerElem::zeta(2) - 1));
  CHECK(parse_tower("\xCE\xB6^4 \xE2\x88\x92 1") == TowerElem::zeta(4) - 1);
  CHECK(parse_tower("rho") == TowerElem::zeta(4));
  CHECK(parse_tower("sqrt3") == TowerElem::sqrt3());
  CHECK(parse_complex_value("0.5,-1.25") == TowerElem(make_rational(1, 2)) - TowerElem(make_rational(5, 4)) * TowerElem::imag_unit());
  CHECK(parse_rational("-3/4") == make_rational(-3, 4));
  CHECK(parse_rational("0.125") == make_rational(1, 8));
  CHECK(parse_rational("010") == Rational(10));
  CHECK(parse_rational("-07/010") == make_rational(-7, 10));
  CHECK_THROWS_AS(parse_tower("1/0"), ParseError);
  CHECK_THROWS_AS(parse_tower("zeta +"), ParseError);
  CHECK_THROWS_AS(parse_tower("foo"), ParseError);
  CHECK_THROWS_AS(parse_tower("2^(1/2)"), ParseError);
  CHECK_THROWS_AS(parse_tower("(1"), ParseError);

  std::mt19937 g(11);
  for (int k = 0; k < 1000; ++k) {
    TowerElem a = random_elem(g);
    CHECK(parse_tower(a.to_string()) == a);
  }
}

TEST_CASE("linear expressions") {
  auto c = parse_linear("3*tau+3", {"tau"});
  CHECK(c[0] == TowerElem(3));
  CHECK(c[1] == TowerElem(3));
  CHECK_THROWS_AS(parse_linear("tau*tau", {"tau"}), ParseError);
  CHECK_THROWS_AS(parse_linear("1/tau", {"tau"}), ParseError);
}

TEST_CASE("ball enclosures contain the exact values") {
  std::mt19937 g(3);
  for (int k = 0; k < 300; ++k) {
    TowerElem a = random_elem(g), b = random_elem(g);
    ComplexBall ea = embed(a, 96), eb = embed(b, 96);
    cd va = approx(a * b);
    ComplexBall p = ea * eb;
    CHECK(std::abs(p.real().to_double() - static_cast<double>(va.real())) < 1e-9 * (1 + std::abs(va)));
    // exact rational arithmetic stays inside the ball
    Rational x = a.base()[0], y = b.base()[1];
    RealBall rx(x, 64), ry(y, 64);
    CHECK((rx * ry).contains(x * y));
    CHECK((rx + ry).contains(x + y));
    if (sgn(y) != 0) CHECK(ry.inverse().contains(1 / y));
  }
  RealBall s = RealBall::sqrt3(128);
  CHECK((s * s).contains(Rational(3)));
  CHECK_THROWS_AS(RealBall(Rational(0), 64).inverse(), BallContainsZero);
  CHECK_THROWS(embed(TowerElem(1), 8));
}

TEST_CASE("low precision leaves signs undecided") {
  RealBall a = RealBall::sqrt3(16) * RealBall::sqrt3(16) - RealBall(Rational(3), 16);
  CHECK(a.contains_zero());
  CHECK_FALSE(a.certainly_positive());
  CHECK_FALSE(a.certainly_negative());
}
