#pragma once

#include "shimura/intlat/matrix.hpp"

#include <optional>
#include <vector>

namespace shimura {

// Gauss-Jordan helpers over an exact field (Rational, TowerElem).

template <class F>
struct RowEchelon {
  Mat<F> reduced;                   // reduced row echelon form
  std::vector<Eigen::Index> pivots;  // pivot column per nonzero row
};

template <class F>
RowEchelon<F> rref(Mat<F> a) {
  RowEchelon<F> out;
  Eigen::Index row = 0;
  for (Eigen::Index c = 0; c < a.cols() && row < a.rows(); ++c) {
    Eigen::Index p = row;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    if (p != row) a.row(p).swap(a.row(row));
    F inv = F(1) / a(row, c);
    for (Eigen::Index j = c; j < a.cols(); ++j)
      if (!is_zero(a(row, j))) a(row, j) = a(row, j) * inv;
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || is_zero(a(i, c))) continue;
      F f = a(i, c);
      for (Eigen::Index j = c; j < a.cols(); ++j)
        if (!is_zero(a(row, j))) a(i, j) = a(i, j) - f * a(row, j);
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

template <class F>
Eigen::Index rank(const Mat<F>& a) {
  return static_cast<Eigen::Index>(rref(a).pivots.size());
}

enum class SolveStatus { unique, none, multiple };

template <class F>
struct LinearSolution {
  SolveStatus status = SolveStatus::none;
  Vec<F> x;                      // a particular solution (free variables set to 0) when solvable
  std::vector<bool> determined;  // variable fixed by the system regardless of free choices
};

// Solves A x = b exactly; overdetermined systems are checked for consistency.
template <class F>
LinearSolution<F> solve_linear(const Mat<F>& a, const Vec<F>& b) {
  const Eigen::Index n = a.cols();
  Mat<F> aug(a.rows(), n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  RowEchelon<F> e = rref(aug);
  LinearSolution<F> s;
  s.determined.assign(static_cast<std::size_t>(n), false);
  for (Eigen::Index p : e.pivots)
    if (p == n) return s;
  s.x = Vec<F>(n);
  for (Eigen::Index j = 0; j < n; ++j) s.x(j) = F(0);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Eigen::Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    Eigen::Index p = e.pivots[r];
    s.x(p) = e.reduced(static_cast<Eigen::Index>(r), n);
    bool fixed = true;
    for (Eigen::Index j = 0; j < n; ++j)
      if (!is_pivot[static_cast<std::size_t>(j)] && !is_zero(e.reduced(static_cast<Eigen::Index>(r), j)))
        fixed = false;
    s.determined[static_cast<std::size_t>(p)] = fixed;
  }
  s.status = static_cast<Eigen::Index>(e.pivots.size()) == n ? SolveStatus::unique : SolveStatus::multiple;
  return s;
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
  const Eigen::Index n = a.rows();
  Mat<F> aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = identity<F>(n);
  RowEchelon<F> e = rref(aug);
  if (static_cast<Eigen::Index>(e.pivots.size()) < n || e.pivots[static_cast<std::size_t>(n - 1)] >= n)
    return std::nullopt;
  return Mat<F>(e.reduced.rightCols(n));
}

template <class F>
F determinant(Mat<F> a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  F det = F(1);
  const Eigen::Index n = a.rows();
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && is_zero(a(p, c))) ++p;
    if (p == n) return F(0);
    if (p != c) {
      a.row(p).swap(a.row(c));
      det = -det;
    }
    det = det * a(c, c);
    F inv = F(1) / a(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (is_zero(a(i, c))) continue;
      F f = a(i, c) * inv;
      for (Eigen::Index j = c; j < n; ++j) a(i, j) = a(i, j) - f * a(c, j);
    }
  }
  return det;
}

}  // namespace shimura
