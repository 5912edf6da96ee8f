#pragma once

#include "shimura/exactfield/cyclo.hpp"

#include <array>
#include <optional>
#include <string>

namespace shimura {

// base + alpha_part * alpha with alpha^2 = 2*zeta - zeta^3 = sqrt(3)
class TowerElem {
 public:
  TowerElem() = default;
  TowerElem(const Rational& r) : base_(r) {}
  TowerElem(long r) : base_(r) {}
  TowerElem(int r) : base_(static_cast<long>(r)) {}
  TowerElem(const CycloElem& base) : base_(base) {}
  TowerElem(const CycloElem& base, const CycloElem& alpha_part) : base_(base), alpha_(alpha_part) {}

  static TowerElem zeta(long k = 1) { return TowerElem(CycloElem::zeta_pow(k)); }
  static TowerElem rho() { return zeta(4); }
  static TowerElem imag_unit() { return zeta(3); }
  static TowerElem sqrt3() { return zeta(1) * 2 - zeta(3); }
  // 3^(k/4)
  static TowerElem alpha(long k = 1);

  const CycloElem& base() const { return base_; }
  const CycloElem& alpha_part() const { return alpha_; }

  bool is_zero() const { return base_.is_zero() && alpha_.is_zero(); }
  bool is_rational() const { return alpha_.is_zero() && base_.is_rational(); }
  bool in_K() const { return alpha_.is_zero() && base_.in_quadratic_subfield(); }
  bool is_real() const { return conj() == *this; }
  Rational rational_value() const;

  TowerElem conj() const { return TowerElem(base_.conj(), alpha_.conj()); }
  TowerElem inverse() const;

  TowerElem operator-() const { return TowerElem(-base_, -alpha_); }
  TowerElem& operator+=(const TowerElem& o);
  TowerElem& operator-=(const TowerElem& o);
  TowerElem& operator*=(const TowerElem& o);
  TowerElem& operator/=(const TowerElem& o) { return *this *= o.inverse(); }

  friend TowerElem operator+(TowerElem a, const TowerElem& b) { return a += b; }
  friend TowerElem operator-(TowerElem a, const TowerElem& b) { return a -= b; }
  friend TowerElem operator*(TowerElem a, const TowerElem& b) { return a *= b; }
  friend TowerElem operator/(TowerElem a, const TowerElem& b) { return a /= b; }
  friend bool operator==(const TowerElem& a, const TowerElem& b) {
    return a.base_ == b.base_ && a.alpha_ == b.alpha_;
  }

  // parseable rendering, e.g. "(-1/3) + (2/3)*zeta^2 + (1 + zeta)*alpha"
  std::string to_string() const;

 private:
  CycloElem base_;
  CycloElem alpha_;
};

inline const CycloElem& alpha_squared() {
  static const CycloElem a2 = CycloElem::zeta_pow(1) * CycloElem(2) - CycloElem::zeta_pow(3);
  return a2;
}

inline bool is_zero(const TowerElem& x) { return x.is_zero(); }
inline TowerElem conj(const TowerElem& x) { return x.conj(); }

// rational coordinates in the basis zeta^k, zeta^k*alpha (k = 0..3)
std::array<Rational, 8> coordinates(const TowerElem& x);

std::optional<TowerElem> checked_div(const TowerElem& a, const TowerElem& b);

TowerElem pow(const TowerElem& x, long k);

// x + conj(x) for x in K = Q(rho); throws std::domain_error otherwise
Rational trace_K(const TowerElem& x);

// exact square root of r * 3^(k/4) (r rational, r > 0) when it lies in the tower
std::optional<TowerElem> sqrt_real_monomial(const TowerElem& x);

}  // namespace shimura

namespace Eigen {

template <>
struct NumTraits<shimura::TowerElem> : GenericNumTraits<shimura::TowerElem> {
  using Real = shimura::TowerElem;
  using NonInteger = shimura::TowerElem;
  using Nested = shimura::TowerElem;
  using Literal = shimura::TowerElem;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 64,
    MulCost = 512
  };
};

}  // namespace Eigen
