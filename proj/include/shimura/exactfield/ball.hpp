#pragma once

#include "shimura/exactfield/tower.hpp"

#include <mpfr.h>

#include <stdexcept>
#include <string>

namespace shimura {

class BallContainsZero : public std::runtime_error {
 public:
  BallContainsZero() : std::runtime_error("ball contains zero at current precision") {}
  explicit BallContainsZero(const std::string& what) : std::runtime_error(what) {}
};

// midpoint-radius real interval; midpoint at `prec` bits, radius rounded upward
class RealBall {
 public:
  explicit RealBall(mpfr_prec_t prec = 128);
  RealBall(const Rational& q, mpfr_prec_t prec);
  RealBall(const RealBall& o);
  RealBall(RealBall&& o) noexcept;
  RealBall& operator=(const RealBall& o);
  RealBall& operator=(RealBall&& o) noexcept;
  ~RealBall();

  static RealBall sqrt3(mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(mid_); }
  mpfr_srcptr mid() const { return mid_; }
  mpfr_srcptr rad() const { return rad_; }

  Rational mid_rational() const;
  Rational rad_rational() const;
  Rational lower() const { return mid_rational() - rad_rational(); }
  Rational upper() const { return mid_rational() + rad_rational(); }
  bool is_exact() const { return mpfr_zero_p(rad_) != 0; }
  bool contains(const Rational& q) const;
  bool contains_zero() const { return contains(Rational(0)); }
  bool certainly_positive() const { return sgn(lower()) > 0; }
  bool certainly_negative() const { return sgn(upper()) < 0; }
  // upper bound of |x| as a rational
  Rational magnitude() const;
  double to_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }

  RealBall operator-() const;
  friend RealBall operator+(const RealBall& a, const RealBall& b);
  friend RealBall operator-(const RealBall& a, const RealBall& b);
  friend RealBall operator*(const RealBall& a, const RealBall& b);
  RealBall inverse() const;
  RealBall sqrt() const;
  RealBall abs() const;
  RealBall with_extra_radius(const Rational& r) const;

  // "mid +/- rad" with `digits` significant digits
  std::string to_string(int digits) const;
  // midpoint only, fixed digits
  std::string mid_string(int digits) const;

 private:
  void add_rounding_error(int inexact);
  mpfr_t mid_;
  mpfr_t rad_;
};

class ComplexBall {
 public:
  explicit ComplexBall(mpfr_prec_t prec = 128) : re_(prec), im_(prec) {}
  ComplexBall(RealBall re, RealBall im) : re_(std::move(re)), im_(std::move(im)) {}
  ComplexBall(const Rational& re, const Rational& im, mpfr_prec_t prec) : re_(re, prec), im_(im, prec) {}

  const RealBall& real() const { return re_; }
  const RealBall& imag() const { return im_; }
  mpfr_prec_t precision() const { return std::max(re_.precision(), im_.precision()); }
  // bound on the larger of the two radii
  Rational radius() const;

  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
  bool certainly_nonzero() const { return !contains_zero(); }
  bool contains(const Rational& re, const Rational& im) const { return re_.contains(re) && im_.contains(im); }
  RealBall abs2() const { return re_ * re_ + im_ * im_; }

  ComplexBall conj() const { return ComplexBall(re_, -im_); }
  ComplexBall operator-() const { return ComplexBall(-re_, -im_); }
  ComplexBall times_i() const { return ComplexBall(-im_, re_); }
  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
    return ComplexBall(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
    return ComplexBall(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
    return ComplexBall(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend ComplexBall operator*(const RealBall& a, const ComplexBall& b) {
    return ComplexBall(a * b.re_, a * b.im_);
  }
  ComplexBall& operator+=(const ComplexBall& o) { return *this = *this + o; }
  ComplexBall& operator-=(const ComplexBall& o) { return *this = *this - o; }
  ComplexBall& operator*=(const ComplexBall& o) { return *this = *this * o; }
  ComplexBall inverse() const;
  friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) { return a * b.inverse(); }
  ComplexBall& operator/=(const ComplexBall& o) { return *this = *this / o; }

  std::string to_string(int digits) const;

 private:
  RealBall re_;
  RealBall im_;
};

inline ComplexBall conj(const ComplexBall& x) { return x.conj(); }

// zeta -> exp(i*pi/6), alpha -> +3^(1/4)
ComplexBall embed(const TowerElem& a, mpfr_prec_t prec);

// decimal digits carried by a binary precision
int decimal_digits(mpfr_prec_t prec);

}  // namespace shimura

namespace Eigen {

template <>
struct NumTraits<shimura::ComplexBall> : GenericNumTraits<shimura::ComplexBall> {
  using Real = shimura::ComplexBall;
  using NonInteger = shimura::ComplexBall;
  using Nested = shimura::ComplexBall;
  using Literal = shimura::ComplexBall;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 16,
    AddCost = 64,
    MulCost = 256
  };
};

}  // namespace Eigen
