#include "shimura/periods/period_matrix.hpp"

#include "shimura/intlat/smith.hpp"

namespace shimura {

PeriodMatrix::PeriodMatrix(AffineMat entries, AlternatingForm polarization)
    : entries_(std::move(entries)), polarization_(std::move(polarization)) {
  if (entries_.cols() != 2 * entries_.rows()) throw std::invalid_argument("period matrix must be g x 2g");
  if (polarization_.dim() != entries_.cols()) throw std::invalid_argument("polarization size does not match");
  if (sgn(det_bareiss(polarization_.gram())) == 0) throw std::invalid_argument("polarization is degenerate");
}

std::vector<Param> PeriodMatrix::params() const {
  std::vector<Param> out;
  for (Param p : kAllParams) {
    bool used = false;
    for (Eigen::Index i = 0; i < entries_.rows() && !used; ++i)
      for (Eigen::Index j = 0; j < entries_.cols() && !used; ++j)
        used = !entries_(i, j).coefficient(p).is_zero();
    if (used) out.push_back(p);
  }
  return out;
}

PeriodMatrix PeriodMatrix::substitute(const ExactPoint& p) const {
  return PeriodMatrix(shimura::substitute(entries_, p), polarization_);
}

}  // namespace shimura
