#include "shimura/periods/isogeny.hpp"

#include "shimura/intlat/lattice.hpp"
#include "shimura/intlat/smith.hpp"

namespace shimura {

TowerElem real_part(const TowerElem& x) { return (x + x.conj()) * TowerElem(make_rational(1, 2)); }

TowerElem imag_part(const TowerElem& x) {
  return (x - x.conj()) * (TowerElem::imag_unit() * TowerElem(make_rational(-1, 2)));
}

Integer IsogenySplit::index() const { return abs(det_bareiss(bc)); }

namespace {

// one rational row per (entry part, coordinate); columns follow the period matrix
void append_coordinate_rows(std::vector<std::array<Rational, 8>>& scratch, std::vector<Vec<Rational>>& out,
                            const std::vector<TowerElem>& row) {
  const auto n = static_cast<Eigen::Index>(row.size());
  for (int part = 0; part < 2; ++part) {
    scratch.clear();
    for (const TowerElem& x : row) scratch.push_back(coordinates(part == 0 ? real_part(x) : imag_part(x)));
    for (std::size_t c = 0; c < 8; ++c) {
      Vec<Rational> v(n);
      bool nonzero = false;
      for (Eigen::Index j = 0; j < n; ++j) {
        v(j) = scratch[static_cast<std::size_t>(j)][c];
        nonzero = nonzero || sgn(v(j)) != 0;
      }
      if (nonzero) out.push_back(v);
    }
  }
}

RatMat stack(const std::vector<Vec<Rational>>& rows, Eigen::Index n) {
  RatMat m(static_cast<Eigen::Index>(rows.size()), n);
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  return m;
}

}  // namespace

IsogenySplit isogeny_split(const PeriodMatrix& p, std::array<Eigen::Index, 2> elliptic_columns) {
  const AffineMat& pi = p.entries();
  const Eigen::Index n = pi.cols();
  IsogenySplit s;
  for (Eigen::Index i = 0; i < pi.rows(); ++i) {
    bool varying = false;
    for (Eigen::Index j = 0; j < n; ++j) varying = varying || !pi(i, j).is_constant();
    (varying ? s.varying_rows : s.constant_rows).push_back(i);
  }

  std::vector<std::array<Rational, 8>> scratch;
  std::vector<Vec<Rational>> e_rows, p_rows;
  for (Eigen::Index i : s.constant_rows) {
    std::vector<TowerElem> row;
    for (Eigen::Index j = 0; j < n; ++j) row.push_back(pi(i, j).constant());
    append_coordinate_rows(scratch, e_rows, row);
  }
  for (Eigen::Index i : s.varying_rows) {
    std::vector<TowerElem> row;
    for (Eigen::Index j = 0; j < n; ++j) row.push_back(pi(i, j).constant());
    append_coordinate_rows(scratch, p_rows, row);
    for (Param q : kAllParams) {
      row.clear();
      for (Eigen::Index j = 0; j < n; ++j) row.push_back(pi(i, j).coefficient(q));
      append_coordinate_rows(scratch, p_rows, row);
    }
  }
  s.lambda_e = integer_kernel(stack(e_rows, n));
  s.lambda_p = integer_kernel(stack(p_rows, n));
  const Eigen::Index ke = s.lambda_e.cols(), kp = s.lambda_p.cols();
  if (ke != 2 || kp != n - 2)
    throw KernelRankError("isogeny_split: kernel ranks " + std::to_string(ke) + " and " + std::to_string(kp) +
                              ", expected 2 and " + std::to_string(n - 2),
                          ke, kp);

  s.bc = IntMat(n, n);
  Eigen::Index next_e = 0, next_p = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (j == elliptic_columns[0] || j == elliptic_columns[1])
      s.bc.col(j) = s.lambda_e.col(next_e++);
    else
      s.bc.col(j) = s.lambda_p.col(next_p++);
  }
  s.product = mul(pi, to_tower(s.bc));
  s.block_diagonal = true;
  for (Eigen::Index i = 0; i < pi.rows(); ++i) {
    bool varying = std::find(s.varying_rows.begin(), s.varying_rows.end(), i) != s.varying_rows.end();
    for (Eigen::Index j = 0; j < n; ++j) {
      bool elliptic = j == elliptic_columns[0] || j == elliptic_columns[1];
      if (varying != elliptic && !s.product(i, j).is_zero()) s.block_diagonal = false;
    }
  }
  return s;
}

EllipticBlock standard_elliptic_block() {
  EllipticBlock b;
  b.first = AffineForm::variable(Param::tau, 3);
  b.second = AffineForm::variable(Param::tau, 3) + AffineForm(3);
  return b;
}

PeriodMatrix genus4_family(const EllipticBlock& elliptic, const PeriodMatrix& prym, const IntMat& bc) {
  const Eigen::Index g = prym.genus() + 1, n = 2 * g;
  if (bc.rows() != n || bc.cols() != n) throw std::invalid_argument("genus4_family: change of basis has wrong size");
  DetInverse di = exact_det_inv(bc);
  if (!di.inverse) throw std::invalid_argument("genus4_family: change of basis is singular");
  AffineMat block = AffineMat::Constant(g, n, AffineForm());
  block(0, elliptic.columns[0]) = elliptic.first;
  block(0, elliptic.columns[1]) = elliptic.second;
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (j == elliptic.columns[0] || j == elliptic.columns[1]) continue;
    for (Eigen::Index i = 1; i < g; ++i) block(i, j) = prym.entries()(i - 1, k);
    ++k;
  }
  return PeriodMatrix(mul(block, to_tower(*di.inverse)), AlternatingForm(standard_symplectic(g)));
}

}  // namespace shimura
