#pragma once

#include "shimura/exactfield/ball.hpp"
#include "shimura/exactfield/tower.hpp"
#include "shimura/intlat/matrix.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace shimura {

enum class Param { tau = 0, z1 = 1, z2 = 2 };
inline constexpr int kParamCount = 3;
inline constexpr std::array<Param, 3> kAllParams{Param::tau, Param::z1, Param::z2};

std::string_view param_name(Param p);
std::optional<Param> param_from_name(std::string_view name);

// exact values for some of the parameters
struct ExactPoint {
  std::array<std::optional<TowerElem>, kParamCount> value;
  ExactPoint& set(Param p, TowerElem v) {
    value[static_cast<std::size_t>(p)] = std::move(v);
    return *this;
  }
};

struct BallPoint {
  std::array<std::optional<ComplexBall>, kParamCount> value;
  BallPoint& set(Param p, ComplexBall v) {
    value[static_cast<std::size_t>(p)] = std::move(v);
    return *this;
  }
  static BallPoint embed(const ExactPoint& p, mpfr_prec_t prec);
};

// constant + sum_p coefficient_p * p over p in {tau, z1, z2}
class AffineForm {
 public:
  AffineForm() = default;
  AffineForm(const TowerElem& c) : const_(c) {}
  AffineForm(long c) : const_(c) {}
  AffineForm(int c) : const_(static_cast<long>(c)) {}

  static AffineForm variable(Param p, const TowerElem& coefficient = 1);

  const TowerElem& constant() const { return const_; }
  const TowerElem& coefficient(Param p) const { return coef_[static_cast<std::size_t>(p)]; }
  void set_constant(TowerElem c) { const_ = std::move(c); }
  void set_coefficient(Param p, TowerElem c) { coef_[static_cast<std::size_t>(p)] = std::move(c); }
  std::vector<Param> params() const;

  bool is_zero() const;
  bool is_constant() const;

  TowerElem evaluate(const ExactPoint& p) const;
  ComplexBall evaluate(const BallPoint& p, mpfr_prec_t prec) const;
  AffineForm substitute(const ExactPoint& p) const;

  AffineForm operator-() const;
  AffineForm& operator+=(const AffineForm& o);
  AffineForm& operator-=(const AffineForm& o);
  AffineForm& operator*=(const TowerElem& s);

  friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
  friend AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
  friend AffineForm operator*(AffineForm a, const TowerElem& s) { return a *= s; }
  friend AffineForm operator*(const TowerElem& s, AffineForm a) { return a *= s; }
  friend bool operator==(const AffineForm& a, const AffineForm& b) {
    return a.const_ == b.const_ && a.coef_ == b.coef_;
  }

  std::string to_string() const;

 private:
  TowerElem const_;
  std::array<TowerElem, kParamCount> coef_{};
};

inline bool is_zero(const AffineForm& f) { return f.is_zero(); }

// degree <= 2 polynomial in the parameters; appears only inside relation checks
class QuadraticForm {
 public:
  QuadraticForm() = default;
  bool is_zero() const;
  const TowerElem& constant() const { return const_; }
  const TowerElem& linear(Param p) const { return lin_[static_cast<std::size_t>(p)]; }
  // coefficient of p*q (p <= q)
  const TowerElem& quadratic(Param p, Param q) const;

  QuadraticForm& operator+=(const QuadraticForm& o);
  friend QuadraticForm operator+(QuadraticForm a, const QuadraticForm& b) { return a += b; }
  friend QuadraticForm operator*(const AffineForm& a, const AffineForm& b);
  friend QuadraticForm operator*(QuadraticForm a, const TowerElem& s);
  std::string to_string() const;

 private:
  static std::size_t slot(Param p, Param q);
  TowerElem const_;
  std::array<TowerElem, kParamCount> lin_{};
  std::array<TowerElem, 6> quad_{};
};

QuadraticForm operator*(const AffineForm& a, const AffineForm& b);
QuadraticForm operator*(QuadraticForm a, const TowerElem& s);
inline bool is_zero(const QuadraticForm& q) { return q.is_zero(); }

using AffineMat = Mat<AffineForm>;
using TowerMat = Mat<TowerElem>;

template <>
struct ProductType<AffineForm, TowerElem> {
  using type = AffineForm;
};
template <>
struct ProductType<TowerElem, AffineForm> {
  using type = AffineForm;
};
template <>
struct ProductType<AffineForm, AffineForm> {
  using type = QuadraticForm;
};

// e.g. "3^(-1/4)*(zeta^2+3*zeta+1)*z2" or "3*tau+3"
AffineForm parse_affine(std::string_view text);
AffineMat parse_affine_rows(const std::vector<std::vector<std::string>>& rows);
TowerMat parse_tower_rows(const std::vector<std::vector<std::string>>& rows);

TowerMat evaluate(const AffineMat& m, const ExactPoint& p);
Mat<ComplexBall> evaluate(const AffineMat& m, const BallPoint& p, mpfr_prec_t prec);
AffineMat substitute(const AffineMat& m, const ExactPoint& p);
Mat<ComplexBall> embed(const TowerMat& m, mpfr_prec_t prec);
TowerMat to_tower(const RatMat& m);
TowerMat to_tower(const IntMat& m);
AffineMat to_affine(const TowerMat& m);

}  // namespace shimura

namespace Eigen {

template <>
struct NumTraits<shimura::AffineForm> : GenericNumTraits<shimura::AffineForm> {
  using Real = shimura::AffineForm;
  using NonInteger = shimura::AffineForm;
  using Nested = shimura::AffineForm;
  using Literal = shimura::AffineForm;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 64,
    AddCost = 256,
    MulCost = 2048
  };
};

template <>
struct NumTraits<shimura::QuadraticForm> : GenericNumTraits<shimura::QuadraticForm> {
  using Real = shimura::QuadraticForm;
  using NonInteger = shimura::QuadraticForm;
  using Nested = shimura::QuadraticForm;
  using Literal = shimura::QuadraticForm;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 64,
    AddCost = 512,
    MulCost = 4096
  };
};

}  // namespace Eigen
