#pragma once

#include "shimura/exactfield/verdict.hpp"
#include "shimura/pel/module.hpp"
#include "shimura/periods/affine_form.hpp"

#include <utility>

namespace shimura {

// 3x3 over K = Q(rho) with T^* = -T and det T != 0
class SkewHermitian3 {
 public:
  explicit SkewHermitian3(TowerMat t);
  const TowerMat& matrix() const { return t_; }
  const TowerElem& operator()(Eigen::Index i, Eigen::Index j) const { return t_(i, j); }
  SkewHermitian3 operator-() const { return SkewHermitian3(TowerMat(-t_)); }
  SkewHermitian3 scaled(const Rational& s) const;

 private:
  TowerMat t_;
};

class NotSkewHermitian : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// x = p + q*rho with tr(x) = g0 and tr(rho x) = g1
TowerElem solve_trace_pair(const Rational& g0, const Rational& g1);
std::pair<Rational, Rational> trace_pair(const TowerElem& x);

SkewHermitian3 solve_T(const RatMat& g0, const RatMat& g1);

// tr(a^T T conj(b)) on the basis e1, e2, e3, rho e1, rho e2, rho e3
RatMat trace_pairing(const SkewHermitian3& t);

struct IntegralityResult {
  RatMat pairing;
  bool integral = false;
  bool matches = false;  // equals the expected intersection matrix
  std::vector<std::pair<Eigen::Index, Eigen::Index>> offending;
  bool holds() const { return integral && matches; }
};

IntegralityResult integrality_check(const SkewHermitian3& t, const IntMat& expected);

}  // namespace shimura
