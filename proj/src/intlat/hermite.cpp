#include "shimura/intlat/lattice.hpp"

namespace shimura {

IntMat hermite_normal_form(const IntMat& basis) {
  // rows of h are the lattice generators
  IntMat h = basis.transpose();
  const Eigen::Index m = h.rows(), n = h.cols();
  Eigen::Index row = 0;
  for (Eigen::Index c = 0; c < n && row < m; ++c) {
    // gcd-combine column c over rows row..m-1
    for (Eigen::Index i = row + 1; i < m; ++i) {
      if (sgn(h(i, c)) == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(row, c).get_mpz_t(), h(i, c).get_mpz_t());
      Integer a = h(row, c) / g, b = h(i, c) / g;
      for (Eigen::Index j = 0; j < n; ++j) {
        Integer x = h(row, j), y = h(i, j);
        h(row, j) = s * x + t * y;
        h(i, j) = -b * x + a * y;
      }
    }
    if (sgn(h(row, c)) == 0) continue;
    if (sgn(h(row, c)) < 0) h.row(row) = -h.row(row);
    for (Eigen::Index i = 0; i < row; ++i) {
      Integer q = floor_div(h(i, c), h(row, c));
      if (sgn(q) != 0)
        for (Eigen::Index j = 0; j < n; ++j) h(i, j) -= q * h(row, j);
    }
    ++row;
  }
  return IntMat(h.topRows(row).transpose());
}

bool same_lattice(const IntMat& a, const IntMat& b) {
  if (a.rows() != b.rows()) return false;
  return equal(hermite_normal_form(a), hermite_normal_form(b));
}

bool is_alternating(const IntMat& a) {
  if (a.rows() != a.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != -a(j, i)) return false;
  return true;
}

AlternatingForm::AlternatingForm(IntMat gram) : gram_(std::move(gram)) {
  if (!is_alternating(gram_)) throw std::invalid_argument("matrix is not alternating");
}

IntMat to_integer(const RatMat& a) {
  IntMat r(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (!is_integer(a(i, j))) throw std::domain_error("matrix entry is not an integer");
      r(i, j) = a(i, j).get_num();
    }
  return r;
}

}  // namespace shimura
