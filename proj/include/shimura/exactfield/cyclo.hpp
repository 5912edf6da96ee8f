#pragma once

#include "shimura/exactfield/rational.hpp"

#include <array>
#include <string>

namespace shimura {

// c0 + c1*zeta + c2*zeta^2 + c3*zeta^3 with zeta^4 = zeta^2 - 1
class CycloElem {
 public:
  CycloElem() = default;
  CycloElem(const Rational& r) { c_[0] = r; }
  CycloElem(long r) { c_[0] = r; }
  explicit CycloElem(const std::array<Rational, 4>& c) : c_(c) {}

  static CycloElem zeta_pow(long k);

  const Rational& operator[](int k) const { return c_[k]; }
  const std::array<Rational, 4>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // lies in Q(rho) = Q + Q*zeta^2
  bool in_quadratic_subfield() const;

  // zeta -> zeta^k for k coprime to 12
  CycloElem galois(int k) const;
  CycloElem conj() const { return galois(11); }
  Rational norm() const;
  CycloElem inverse() const;

  CycloElem operator-() const;
  CycloElem& operator+=(const CycloElem& o);
  CycloElem& operator-=(const CycloElem& o);
  CycloElem& operator*=(const CycloElem& o);

  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
  friend bool operator==(const CycloElem& a, const CycloElem& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  std::array<Rational, 4> c_{};
};

}  // namespace shimura
