#include "shimura/exactfield/ball.hpp"

#include <algorithm>
#include <cmath>

namespace shimura {

namespace {

constexpr mpfr_prec_t kRadPrec = 64;

struct Tmp {
  explicit Tmp(mpfr_prec_t p = kRadPrec) { mpfr_init2(v, p); mpfr_set_zero(v, 1); }
  ~Tmp() { mpfr_clear(v); }
  Tmp(const Tmp&) = delete;
  Tmp& operator=(const Tmp&) = delete;
  mpfr_t v;
};

Rational to_rational(mpfr_srcptr x) {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), x);
  return q;
}

mpfr_prec_t join(const RealBall& a, const RealBall& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

RealBall::RealBall(mpfr_prec_t prec) {
  mpfr_init2(mid_, prec);
  mpfr_init2(rad_, kRadPrec);
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

RealBall::RealBall(const Rational& q, mpfr_prec_t prec) : RealBall(prec) {
  int inexact = mpfr_set_q(mid_, q.get_mpq_t(), MPFR_RNDN);
  add_rounding_error(inexact);
}

RealBall::RealBall(const RealBall& o) {
  mpfr_init2(mid_, o.precision());
  mpfr_init2(rad_, kRadPrec);
  mpfr_set(mid_, o.mid_, MPFR_RNDN);
  mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

RealBall::RealBall(RealBall&& o) noexcept : RealBall(o.precision()) {
  mpfr_swap(mid_, o.mid_);
  mpfr_swap(rad_, o.rad_);
}

RealBall& RealBall::operator=(const RealBall& o) {
  if (this != &o) {
    mpfr_set_prec(mid_, o.precision());
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
  }
  return *this;
}

RealBall& RealBall::operator=(RealBall&& o) noexcept {
  mpfr_swap(mid_, o.mid_);
  mpfr_swap(rad_, o.rad_);
  return *this;
}

RealBall::~RealBall() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

void RealBall::add_rounding_error(int inexact) {
  if (inexact == 0) return;
  // half an ulp of the midpoint is at most |mid| * 2^-prec
  Tmp e;
  mpfr_abs(e.v, mid_, MPFR_RNDU);
  mpfr_mul_2si(e.v, e.v, -static_cast<long>(precision()), MPFR_RNDU);
  mpfr_add(rad_, rad_, e.v, MPFR_RNDU);
}

RealBall RealBall::sqrt3(mpfr_prec_t prec) {
  RealBall r(prec);
  int inexact = mpfr_sqrt_ui(r.mid_, 3, MPFR_RNDN);
  r.add_rounding_error(inexact);
  return r;
}

Rational RealBall::mid_rational() const { return to_rational(mid_); }
Rational RealBall::rad_rational() const { return to_rational(rad_); }

bool RealBall::contains(const Rational& q) const {
  Rational d = mid_rational() - q;
  return ::abs(d) <= rad_rational();
}

Rational RealBall::magnitude() const { return Rational(::abs(mid_rational()) + rad_rational()); }

RealBall RealBall::operator-() const {
  RealBall r(*this);
  mpfr_neg(r.mid_, r.mid_, MPFR_RNDN);
  return r;
}

RealBall operator+(const RealBall& a, const RealBall& b) {
  RealBall r(join(a, b));
  int inexact = mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  mpfr_add(r.rad_, a.rad_, b.rad_, MPFR_RNDU);
  r.add_rounding_error(inexact);
  return r;
}

RealBall operator-(const RealBall& a, const RealBall& b) { return a + (-b); }

RealBall operator*(const RealBall& a, const RealBall& b) {
  RealBall r(join(a, b));
  int inexact = mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  Tmp t, u;
  mpfr_abs(t.v, a.mid_, MPFR_RNDU);
  mpfr_mul(t.v, t.v, b.rad_, MPFR_RNDU);
  mpfr_abs(u.v, b.mid_, MPFR_RNDU);
  mpfr_mul(u.v, u.v, a.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, t.v, u.v, MPFR_RNDU);
  mpfr_mul(t.v, a.rad_, b.rad_, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, t.v, MPFR_RNDU);
  r.add_rounding_error(inexact);
  return r;
}

RealBall RealBall::inverse() const {
  Tmp lo;
  mpfr_abs(lo.v, mid_, MPFR_RNDD);
  mpfr_sub(lo.v, lo.v, rad_, MPFR_RNDD);
  if (mpfr_sgn(lo.v) <= 0) throw BallContainsZero();
  RealBall r(precision());
  int inexact = mpfr_ui_div(r.mid_, 1, mid_, MPFR_RNDN);
  if (!mpfr_zero_p(rad_)) {
    // |1/x - 1/m| <= rad / (|m| (|m| - rad))
    Tmp m;
    mpfr_abs(m.v, mid_, MPFR_RNDD);
    mpfr_mul(m.v, m.v, lo.v, MPFR_RNDD);
    mpfr_div(r.rad_, rad_, m.v, MPFR_RNDU);
  }
  r.add_rounding_error(inexact);
  return r;
}

RealBall RealBall::sqrt() const {
  RealBall r(precision());
  if (mpfr_zero_p(rad_)) {
    if (mpfr_sgn(mid_) < 0) throw std::domain_error("square root of a negative ball");
    int inexact = mpfr_sqrt(r.mid_, mid_, MPFR_RNDN);
    r.add_rounding_error(inexact);
    return r;
  }
  Tmp lo;
  mpfr_sub(lo.v, mid_, rad_, MPFR_RNDD);
  if (mpfr_sgn(lo.v) <= 0) throw BallContainsZero();
  int inexact = mpfr_sqrt(r.mid_, mid_, MPFR_RNDN);
  // |sqrt(x) - sqrt(m)| <= rad / sqrt(m - rad)
  mpfr_sqrt(lo.v, lo.v, MPFR_RNDD);
  mpfr_div(r.rad_, rad_, lo.v, MPFR_RNDU);
  r.add_rounding_error(inexact);
  return r;
}

RealBall RealBall::abs() const {
  RealBall r(*this);
  mpfr_abs(r.mid_, r.mid_, MPFR_RNDN);
  return r;
}

RealBall RealBall::with_extra_radius(const Rational& e) const {
  RealBall r(*this);
  Tmp t;
  mpfr_set_q(t.v, e.get_mpq_t(), MPFR_RNDU);
  mpfr_abs(t.v, t.v, MPFR_RNDU);
  mpfr_add(r.rad_, r.rad_, t.v, MPFR_RNDU);
  return r;
}

std::string RealBall::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re +/- %.3Re", digits, mid_, rad_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string RealBall::mid_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits, mid_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

Rational ComplexBall::radius() const {
  Rational a = re_.rad_rational(), b = im_.rad_rational();
  return a < b ? b : a;
}

ComplexBall ComplexBall::inverse() const {
  RealBall n = abs2().inverse();
  return ComplexBall(re_ * n, -(im_ * n));
}

std::string ComplexBall::to_string(int digits) const {
  return "(" + re_.to_string(digits) + ") + i*(" + im_.to_string(digits) + ")";
}

ComplexBall embed(const TowerElem& a, mpfr_prec_t prec) {
  if (prec < 16) throw std::invalid_argument("embedding precision must be at least 16 bits");
  if (a.is_zero()) return ComplexBall(prec);
  RealBall s3 = RealBall::sqrt3(prec);
  RealBall half(Rational(1, 2), prec);
  RealBall h3 = s3 * half;
  RealBall zero(prec), one(Rational(1), prec);
  // powers zeta^0..zeta^3
  const ComplexBall powers[4] = {ComplexBall(one, zero), ComplexBall(h3, half), ComplexBall(half, h3),
                                 ComplexBall(zero, one)};
  auto eval = [&](const CycloElem& c) {
    ComplexBall r(prec);
    for (int k = 0; k < 4; ++k)
      if (sgn(c[k]) != 0) r += RealBall(c[k], prec) * powers[k];
    return r;
  };
  ComplexBall r = eval(a.base());
  if (!a.alpha_part().is_zero()) r += s3.sqrt() * eval(a.alpha_part());
  return r;
}

int decimal_digits(mpfr_prec_t prec) {
  return std::max(1, static_cast<int>(std::floor(static_cast<double>(prec) * 0.30102999566398120)));
}

}  // namespace shimura
