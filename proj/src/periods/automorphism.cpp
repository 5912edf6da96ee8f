#include "shimura/periods/automorphism.hpp"

#include "shimura/intlat/linalg.hpp"

namespace shimura {

TowerMat diagonal(const std::vector<TowerElem>& entries) {
  const auto n = static_cast<Eigen::Index>(entries.size());
  TowerMat d = TowerMat::Constant(n, n, TowerElem());
  for (Eigen::Index i = 0; i < n; ++i) d(i, i) = entries[static_cast<std::size_t>(i)];
  return d;
}

IntertwiningResult automorphism_check(const TowerMat& a, const AffineMat& pi, const RatMat& r) {
  if (a.rows() != a.cols() || a.cols() != pi.rows() || r.rows() != pi.cols() || r.cols() != pi.cols())
    throw std::invalid_argument("automorphism_check: dimension mismatch");
  IntertwiningResult out;
  out.residual = mul(a, pi) - mul(pi, to_tower(r));
  for (Eigen::Index i = 0; i < pi.rows(); ++i)
    for (Eigen::Index j = 0; j < pi.cols(); ++j)
      if (!out.residual(i, j).is_zero()) out.mismatches.emplace_back(i, j);
  out.holds = out.mismatches.empty();
  return out;
}

std::optional<RatMat> solve_intertwiner(const TowerMat& a, const AffineMat& pi) {
  const Eigen::Index g = pi.rows(), n = pi.cols();
  AffineMat lhs = mul(a, pi);
  RatMat r(n, n);
  // column j of R: sum_k Pi(i,k) R(k,j) = (A Pi)(i,j), split into rational coordinates
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index eqs = g * (1 + kParamCount) * 8;
    RatMat m(eqs, n);
    Vec<Rational> rhs(eqs);
    Eigen::Index row = 0;
    for (Eigen::Index i = 0; i < g; ++i)
      for (int part = -1; part < kParamCount; ++part) {
        auto pick = [&](const AffineForm& f) -> const TowerElem& {
          return part < 0 ? f.constant() : f.coefficient(static_cast<Param>(part));
        };
        std::vector<std::array<Rational, 8>> cols;
        for (Eigen::Index k = 0; k < n; ++k) cols.push_back(coordinates(pick(pi(i, k))));
        std::array<Rational, 8> b = coordinates(pick(lhs(i, j)));
        for (std::size_t c = 0; c < 8; ++c, ++row) {
          for (Eigen::Index k = 0; k < n; ++k) m(row, k) = cols[static_cast<std::size_t>(k)][c];
          rhs(row) = b[c];
        }
      }
    LinearSolution<Rational> s = solve_linear(m, rhs);
    if (s.status != SolveStatus::unique) return std::nullopt;
    r.col(j) = s.x;
  }
  return r;
}

}  // namespace shimura
