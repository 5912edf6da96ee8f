#include "shimura/pel/skew_hermitian.hpp"

#include "shimura/intlat/linalg.hpp"

namespace shimura {

SkewHermitian3::SkewHermitian3(TowerMat t) : t_(std::move(t)) {
  if (t_.rows() != 3 || t_.cols() != 3) throw std::invalid_argument("SkewHermitian3: must be 3x3");
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j) {
      if (!t_(i, j).in_K()) throw std::invalid_argument("SkewHermitian3: entry outside Q(rho)");
      if (!(t_(i, j).conj() == -t_(j, i))) throw NotSkewHermitian("SkewHermitian3: T^* != -T");
    }
  if (determinant(t_).is_zero()) throw std::invalid_argument("SkewHermitian3: degenerate");
}

SkewHermitian3 SkewHermitian3::scaled(const Rational& s) const {
  TowerMat r = t_;
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j) r(i, j) *= TowerElem(s);
  return SkewHermitian3(r);
}

TowerElem solve_trace_pair(const Rational& g0, const Rational& g1) {
  Rational p = (g0 - g1) / 3;
  Rational q = 2 * p - g0;
  return TowerElem(p) + TowerElem(q) * TowerElem::rho();
}

std::pair<Rational, Rational> trace_pair(const TowerElem& x) {
  return {trace_K(x), trace_K(TowerElem::rho() * x)};
}

SkewHermitian3 solve_T(const RatMat& g0, const RatMat& g1) {
  if (g0.rows() != 3 || g0.cols() != 3 || g1.rows() != 3 || g1.cols() != 3)
    throw std::invalid_argument("solve_T: expected 3x3 data");
  TowerMat t(3, 3);
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j) t(i, j) = solve_trace_pair(g0(i, j), g1(i, j));
  return SkewHermitian3(t);
}

RatMat trace_pairing(const SkewHermitian3& t) {
  const TowerElem mult[2] = {TowerElem(1), TowerElem::rho()};
  RatMat out(6, 6);
  for (Eigen::Index a = 0; a < 6; ++a)
    for (Eigen::Index b = 0; b < 6; ++b)
      out(a, b) = trace_K(mult[a / 3] * t(a % 3, b % 3) * mult[b / 3].conj());
  return out;
}

IntegralityResult integrality_check(const SkewHermitian3& t, const IntMat& expected) {
  IntegralityResult r;
  r.pairing = trace_pairing(t);
  r.integral = true;
  r.matches = expected.rows() == 6 && expected.cols() == 6;
  for (Eigen::Index a = 0; a < 6; ++a)
    for (Eigen::Index b = 0; b < 6; ++b) {
      bool integral = is_integer(r.pairing(a, b));
      bool same = r.matches && r.pairing(a, b) == Rational(expected(a, b));
      if (!integral) r.integral = false;
      if (!integral || !same) r.offending.emplace_back(a, b);
    }
  if (r.matches)
    for (auto [a, b] : r.offending)
      if (!(r.pairing(a, b) == Rational(expected(a, b)))) r.matches = false;
  return r;
}

}  // namespace shimura
