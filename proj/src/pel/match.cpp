#include "shimura/pel/match.hpp"

#include "shimura/intlat/linalg.hpp"
#include "shimura/intlat/smith.hpp"

namespace shimura {

TowerMat MatchResult::c() const {
  TowerMat m = TowerMat::Constant(3, 3, TowerElem());
  m(0, 0) = c11;
  m(1, 1) = c22;
  m(1, 2) = c23;
  m(2, 1) = c32;
  m(2, 2) = c33;
  return m;
}

ExactPoint MatchResult::point() const {
  ExactPoint p;
  p.set(Param::z1, z1).set(Param::z2, z2);
  return p;
}

MatchResult match_solver(const AffineMat& family, const TowerMat& target) {
  if (family.rows() != 3 || target.rows() != 3 || family.cols() != target.cols())
    throw std::invalid_argument("match_solver: shape mismatch");
  const Eigen::Index n = family.cols();
  MatchResult m;

  // row 1: const*Y + a*X1 + b*X2 = t with X = c11 z, Y = c11
  TowerMat a(n, 3);
  Vec<TowerElem> rhs(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    a(j, 0) = family(0, j).coefficient(Param::z1);
    a(j, 1) = family(0, j).coefficient(Param::z2);
    a(j, 2) = family(0, j).constant();
    rhs(j) = target(0, j);
    if (!family(0, j).coefficient(Param::tau).is_zero()) throw std::invalid_argument("match_solver: family depends on tau");
  }
  LinearSolution<TowerElem> row1 = solve_linear(a, rhs);
  if (row1.status == SolveStatus::none) throw MatchFailure("match_solver: row 1 is inconsistent");
  if (row1.status == SolveStatus::multiple) throw MatchFailure("match_solver: row 1 has multiple solutions");
  m.c11 = row1.x(2);
  if (m.c11.is_zero()) throw MatchFailure("match_solver: c11 = 0");
  m.z1 = row1.x(0) / m.c11;
  m.z2 = row1.x(1) / m.c11;
  ExactPoint z = m.point();

  // a column whose row 2 vanishes and row 3 is a nonzero constant fixes c23 and c33
  std::optional<TowerElem> c23, c33;
  for (Eigen::Index j = 0; j < n && !c23; ++j)
    if (family(1, j).is_zero() && family(2, j).is_constant() && !family(2, j).is_zero()) {
      c23 = target(1, j) / family(2, j).constant();
      c33 = target(2, j) / family(2, j).constant();
    }
  m.used_constant_column = c23.has_value();

  TowerMat f(n, 2);
  for (Eigen::Index j = 0; j < n; ++j) {
    f(j, 0) = family(1, j).evaluate(z);
    f(j, 1) = family(2, j).evaluate(z);
  }
  for (Eigen::Index r = 1; r < 3; ++r) {
    Vec<TowerElem> t(n);
    for (Eigen::Index j = 0; j < n; ++j) t(j) = target(r, j);
    LinearSolution<TowerElem> s = solve_linear(f, t);
    if (s.status == SolveStatus::none)
      throw MatchFailure("match_solver: row " + std::to_string(r + 1) + " is inconsistent");
    if (s.status == SolveStatus::multiple)
      throw MatchFailure("match_solver: row " + std::to_string(r + 1) + " has multiple solutions");
    (r == 1 ? m.c22 : m.c32) = s.x(0);
    (r == 1 ? m.c23 : m.c33) = s.x(1);
  }
  if (c23 && (!(*c23 == m.c23) || !(*c33 == m.c33)))
    throw MatchFailure("match_solver: constant column disagrees with the linear solve");

  TowerMat check = mul(m.c(), evaluate(family, z));
  std::vector<std::pair<Eigen::Index, Eigen::Index>> bad;
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (!(check(i, j) == target(i, j))) bad.emplace_back(i, j);
  if (!bad.empty()) throw MatchFailure("match_solver: system inconsistent at " + std::to_string(bad.size()) + " entries", bad);
  return m;
}

AffineMat matched_family(const MatchResult& m, const AffineMat& family) { return mul(m.c(), family); }

PeriodMatrix prym_family(const MatchResult& m, const AffineMat& family, const IntMat& l, const AlternatingForm& j) {
  DetInverse di = exact_det_inv(l);
  if (!di.inverse) throw std::invalid_argument("prym_family: singular base change");
  return PeriodMatrix(mul(matched_family(m, family), to_tower(*di.inverse)), j);
}

}  // namespace shimura
