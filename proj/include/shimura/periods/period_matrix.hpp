#pragma once

#include "shimura/exactfield/verdict.hpp"
#include "shimura/periods/affine_form.hpp"

#include <vector>

namespace shimura {

// g x 2g matrix of affine forms with an alternating polarization on Z^{2g}
class PeriodMatrix {
 public:
  PeriodMatrix(AffineMat entries, AlternatingForm polarization);

  Eigen::Index genus() const { return entries_.rows(); }
  const AffineMat& entries() const { return entries_; }
  const AlternatingForm& polarization() const { return polarization_; }
  std::vector<Param> params() const;

  PeriodMatrix substitute(const ExactPoint& p) const;

 private:
  AffineMat entries_;
  AlternatingForm polarization_;
};

// Pi E^-1 Pi^T; the first bilinear relation holds iff every entry vanishes identically
Mat<QuadraticForm> riemann_first_relation(const PeriodMatrix& p);
bool identically_zero(const Mat<QuadraticForm>& residual);

struct PositivityResult {
  Verdict verdict = Verdict::inconclusive;
  std::vector<RealBall> minors;  // leading principal minors
  int sign = 1;
  std::string detail;
};

// s * i * Pi E^-1 conj(Pi)^T positive definite, certified through its leading principal minors
PositivityResult riemann_positivity(const PeriodMatrix& p, const BallPoint& point, mpfr_prec_t prec, int sign = 1);

}  // namespace shimura
