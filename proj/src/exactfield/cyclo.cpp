#include "shimura/exactfield/cyclo.hpp"

#include <numeric>
#include <sstream>

namespace shimura {

CycloElem CycloElem::zeta_pow(long k) {
  long m = ((k % 12) + 12) % 12;
  Rational sign = 1;
  if (m >= 6) {
    sign = -1;
    m -= 6;
  }
  std::array<Rational, 4> c{};
  switch (m) {
    case 4:  // zeta^2 - 1
      c[2] = sign;
      c[0] = -sign;
      break;
    case 5:  // zeta^3 - zeta
      c[3] = sign;
      c[1] = -sign;
      break;
    default:
      c[m] = sign;
  }
  return CycloElem(c);
}

bool CycloElem::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool CycloElem::is_rational() const {
  return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool CycloElem::in_quadratic_subfield() const {
  return sgn(c_[1]) == 0 && sgn(c_[3]) == 0;
}

CycloElem CycloElem::galois(int k) const {
  if (std::gcd(k, 12) != 1) throw std::invalid_argument("galois exponent must be coprime to 12");
  CycloElem r;
  for (int j = 0; j < 4; ++j) {
    if (sgn(c_[j]) == 0) continue;
    CycloElem t = zeta_pow(static_cast<long>(j) * k);
    for (auto& x : t.c_) x *= c_[j];
    r += t;
  }
  return r;
}

Rational CycloElem::norm() const {
  CycloElem n = *this * galois(5) * galois(7) * galois(11);
  return n.c_[0];
}

CycloElem CycloElem::inverse() const {
  if (is_zero()) throw DivisionByZero();
  CycloElem others = galois(5) * galois(7) * galois(11);
  Rational n = (*this * others).c_[0];
  for (auto& x : others.c_) x /= n;
  return others;
}

CycloElem CycloElem::operator-() const {
  CycloElem r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
  for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
  for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& o) {
  std::array<Rational, 7> r{};
  for (int i = 0; i < 4; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (int j = 0; j < 4; ++j)
      if (sgn(o.c_[j]) != 0) r[i + j] += c_[i] * o.c_[j];
  }
  // zeta^k = zeta^(k-2) - zeta^(k-4)
  for (int k = 6; k >= 4; --k) {
    r[k - 2] += r[k];
    r[k - 4] -= r[k];
  }
  for (int k = 0; k < 4; ++k) c_[k] = r[k];
  return *this;
}

std::string CycloElem::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    if (sgn(c_[k]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    bool plain = c_[k].get_den() == 1 && sgn(c_[k]) > 0;
    if (k == 0) {
      if (plain) os << c_[k].get_str();
      else os << "(" << c_[k].get_str() << ")";
      continue;
    }
    if (c_[k] != 1) {
      if (plain) os << c_[k].get_str() << "*";
      else os << "(" << c_[k].get_str() << ")*";
    }
    os << "zeta";
    if (k > 1) os << "^" << k;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace shimura
