#include "shimura/exactfield/tower.hpp"

#include <sstream>

namespace shimura {

TowerElem TowerElem::alpha(long k) {
  long q = k >= 0 ? k / 4 : -((-k + 3) / 4);
  long r = k - 4 * q;
  Rational scale = 1;
  Integer three_q;
  mpz_ui_pow_ui(three_q.get_mpz_t(), 3, static_cast<unsigned long>(q >= 0 ? q : -q));
  scale = q >= 0 ? Rational(three_q) : Rational(1, 1) / Rational(three_q);
  switch (r) {
    case 0: return TowerElem(scale);
    case 1: return TowerElem(CycloElem(), CycloElem(scale));
    case 2: return TowerElem(alpha_squared() * CycloElem(scale));
    default: return TowerElem(CycloElem(), alpha_squared() * CycloElem(scale));
  }
}

Rational TowerElem::rational_value() const {
  if (!is_rational()) throw std::domain_error("tower element is not rational");
  return base_[0];
}

TowerElem TowerElem::inverse() const {
  if (is_zero()) throw DivisionByZero();
  // (b + a*alpha)^-1 = (b - a*alpha) / (b^2 - a^2 alpha^2)
  CycloElem n = base_ * base_ - alpha_ * alpha_ * alpha_squared();
  CycloElem ni = n.inverse();
  return TowerElem(base_ * ni, -(alpha_ * ni));
}

TowerElem& TowerElem::operator+=(const TowerElem& o) {
  base_ += o.base_;
  alpha_ += o.alpha_;
  return *this;
}

TowerElem& TowerElem::operator-=(const TowerElem& o) {
  base_ -= o.base_;
  alpha_ -= o.alpha_;
  return *this;
}

TowerElem& TowerElem::operator*=(const TowerElem& o) {
  CycloElem b = base_ * o.base_;
  if (!alpha_.is_zero() && !o.alpha_.is_zero()) b += alpha_ * o.alpha_ * alpha_squared();
  CycloElem a = base_ * o.alpha_ + alpha_ * o.base_;
  base_ = std::move(b);
  alpha_ = std::move(a);
  return *this;
}

std::string TowerElem::to_string() const {
  if (alpha_.is_zero()) return base_.to_string();
  std::ostringstream os;
  if (!base_.is_zero()) os << base_.to_string() << " + ";
  os << "(" << alpha_.to_string() << ")*alpha";
  return os.str();
}

std::array<Rational, 8> coordinates(const TowerElem& x) {
  std::array<Rational, 8> c;
  for (int k = 0; k < 4; ++k) {
    c[static_cast<std::size_t>(k)] = x.base()[k];
    c[static_cast<std::size_t>(k + 4)] = x.alpha_part()[k];
  }
  return c;
}

std::optional<TowerElem> checked_div(const TowerElem& a, const TowerElem& b) {
  if (b.is_zero()) return std::nullopt;
  return a / b;
}

TowerElem pow(const TowerElem& x, long k) {
  if (k < 0) return pow(x.inverse(), -k);
  TowerElem r = 1, b = x;
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

Rational trace_K(const TowerElem& x) {
  if (!x.in_K()) throw std::domain_error("trace_K: element not in Q(rho): " + x.to_string());
  // c0 + c2*zeta^2 + conj = 2*c0 + c2
  return 2 * x.base()[0] + x.base()[2];
}

namespace {

bool rational_sqrt(const Rational& r, Rational& out) {
  if (sgn(r) < 0) return false;
  Integer n = r.get_num(), d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  out = Rational(sn, sd);
  out.canonicalize();
  return true;
}

// recognises r * alpha^k, k in 0..3
bool as_monomial(const TowerElem& x, Rational& r, int& k) {
  const CycloElem& b = x.base();
  const CycloElem& a = x.alpha_part();
  const CycloElem& a2 = alpha_squared();
  if (a.is_zero() && b.is_rational()) {
    r = b[0];
    k = 0;
    return true;
  }
  if (b.is_zero() && a.is_rational()) {
    r = a[0];
    k = 1;
    return true;
  }
  if (a.is_zero() && b == a2 * CycloElem(b[1] / 2) && sgn(b[1]) != 0) {
    r = b[1] / 2;
    k = 2;
    return true;
  }
  if (b.is_zero() && a == a2 * CycloElem(a[1] / 2) && sgn(a[1]) != 0) {
    r = a[1] / 2;
    k = 3;
    return true;
  }
  return false;
}

}  // namespace

std::optional<TowerElem> sqrt_real_monomial(const TowerElem& x) {
  Rational r;
  int k = 0;
  if (x.is_zero()) return TowerElem();
  if (!as_monomial(x, r, k) || sgn(r) <= 0 || k % 2 != 0) return std::nullopt;
  Rational s;
  if (rational_sqrt(r, s)) return TowerElem(s) * TowerElem::alpha(k / 2);
  if (rational_sqrt(r / 3, s)) return TowerElem(s) * TowerElem::alpha((k + 4) / 2);
  return std::nullopt;
}

}  // namespace shimura
