#pragma once

#include "shimura/exactfield/tower.hpp"

#include <complex>
#include <random>

namespace test {

using cd = std::complex<long double>;

// floating evaluation independent of the ball code: zeta = e^{i pi/6}, alpha = 3^{1/4}
inline cd approx(const shimura::TowerElem& x) {
  const long double pi = 3.141592653589793238462643383279502884L;
  cd z = std::polar(1.0L, pi / 6), a = std::pow(3.0L, 0.25L), acc = 0, p = 1;
  for (int k = 0; k < 4; ++k, p *= z) {
    acc += p * static_cast<long double>(x.base()[k].get_d());
    acc += p * a * static_cast<long double>(x.alpha_part()[k].get_d());
  }
  return acc;
}

inline shimura::Rational random_rational(std::mt19937& g, int range = 9, int den = 5) {
  std::uniform_int_distribution<int> num(-range, range), d(1, den);
  return shimura::make_rational(num(g), d(g));
}

inline shimura::TowerElem random_elem(std::mt19937& g, bool with_alpha = true) {
  std::array<shimura::Rational, 4> b, a;
  for (std::size_t k = 0; k < 4; ++k) {
    b[k] = random_rational(g);
    a[k] = with_alpha ? random_rational(g) : shimura::Rational(0);
  }
  return shimura::TowerElem(shimura::CycloElem(b), shimura::CycloElem(a));
}

inline shimura::TowerElem random_k(std::mt19937& g) {
  return shimura::TowerElem(random_rational(g)) + shimura::TowerElem(random_rational(g)) * shimura::TowerElem::rho();
}

// a + b i
inline shimura::TowerElem gaussian(const shimura::Rational& a, const shimura::Rational& b) {
  return shimura::TowerElem(a) + shimura::TowerElem(b) * shimura::TowerElem::imag_unit();
}

}  // namespace test
