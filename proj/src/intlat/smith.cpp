#include "shimura/intlat/smith.hpp"

#include "shimura/intlat/linalg.hpp"

namespace shimura {

namespace {

void add_row(IntMat& m, Eigen::Index dst, Eigen::Index src, const Integer& f) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

void add_col(IntMat& m, Eigen::Index dst, Eigen::Index src, const Integer& f) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

}  // namespace

std::vector<Integer> SmithForm::divisors() const {
  std::vector<Integer> d;
  for (Eigen::Index k = 0; k < std::min(D.rows(), D.cols()); ++k)
    if (sgn(D(k, k)) != 0) d.push_back(D(k, k));
  return d;
}

Eigen::Index SmithForm::rank() const { return static_cast<Eigen::Index>(divisors().size()); }

SmithForm smith_normal_form(const IntMat& a) {
  const Eigen::Index m = a.rows(), n = a.cols();
  SmithForm s{identity<Integer>(m), a, identity<Integer>(n)};
  IntMat& D = s.D;
  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < m; ++i)
        for (Eigen::Index j = t; j < n; ++j)
          if (sgn(D(i, j)) != 0 && (pi < 0 || abs(D(i, j)) < abs(D(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) return s;
      if (pi != t) {
        D.row(pi).swap(D.row(t));
        s.U.row(pi).swap(s.U.row(t));
      }
      if (pj != t) {
        D.col(pj).swap(D.col(t));
        s.V.col(pj).swap(s.V.col(t));
      }
      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        if (sgn(D(i, t)) == 0) continue;
        Integer q = -floor_div(D(i, t), D(t, t));
        add_row(D, i, t, q);
        add_row(s.U, i, t, q);
        if (sgn(D(i, t)) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        if (sgn(D(t, j)) == 0) continue;
        Integer q = -floor_div(D(t, j), D(t, t));
        add_col(D, j, t, q);
        add_col(s.V, j, t, q);
        if (sgn(D(t, j)) != 0) clean = false;
      }
      if (!clean) continue;
      // enforce d_t | every remaining entry
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (sgn(D(i, j)) != 0 && !mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      add_row(D, t, bad, 1);
      add_row(s.U, t, bad, 1);
    }
    if (sgn(D(t, t)) < 0) {
      D.row(t) = -D.row(t);
      s.U.row(t) = -s.U.row(t);
    }
  }
  return s;
}

Integer det_bareiss(const IntMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  IntMat m = a;
  Integer prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (sgn(m(k, k)) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      m.row(p).swap(m.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

DetInverse exact_det_inv(const IntMat& a) {
  DetInverse r{det_bareiss(a), std::nullopt};
  if (sgn(r.det) != 0) r.inverse = inverse(to_rational(a));
  return r;
}

}  // namespace shimura
