#include "shimura/intlat/lattice.hpp"
#include "shimura/intlat/smith.hpp"

namespace shimura {

IntMat integer_kernel(const RatMat& a) {
  IntMat z(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Integer l = 1;
    for (Eigen::Index j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (Eigen::Index j = 0; j < a.cols(); ++j) z(i, j) = Rational(a(i, j) * l).get_num();
  }
  SmithForm s = smith_normal_form(z);
  // U A V = D, so v = V w lies in the kernel iff w vanishes on the first rank coordinates
  Eigen::Index r = s.rank();
  return IntMat(s.V.rightCols(a.cols() - r));
}

}  // namespace shimura
