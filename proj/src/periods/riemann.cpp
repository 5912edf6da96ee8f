#include "shimura/periods/period_matrix.hpp"

#include "shimura/intlat/smith.hpp"

namespace shimura {

namespace {

RatMat polarization_inverse(const PeriodMatrix& p) {
  DetInverse di = exact_det_inv(p.polarization().gram());
  return *di.inverse;
}

}  // namespace

Mat<QuadraticForm> riemann_first_relation(const PeriodMatrix& p) {
  AffineMat left = mul(p.entries(), to_tower(polarization_inverse(p)));
  AffineMat right = p.entries().transpose();
  return mul(left, right);
}

bool identically_zero(const Mat<QuadraticForm>& residual) { return is_zero_matrix(residual); }

PositivityResult riemann_positivity(const PeriodMatrix& p, const BallPoint& point, mpfr_prec_t prec, int sign) {
  PositivityResult r;
  r.sign = sign;
  Mat<ComplexBall> pi = evaluate(p.entries(), point, prec);
  Mat<ComplexBall> einv = embed(to_tower(polarization_inverse(p)), prec);
  Mat<ComplexBall> h = mul(mul(pi, einv), Mat<ComplexBall>(conj(pi).transpose()));
  const Eigen::Index g = h.rows();
  for (Eigen::Index i = 0; i < g; ++i)
    for (Eigen::Index j = 0; j < g; ++j) h(i, j) = sign > 0 ? h(i, j).times_i() : (-h(i, j)).times_i();

  RealBall minor(Rational(1), prec);
  for (Eigen::Index k = 0; k < g; ++k) {
    RealBall pivot = h(k, k).real();
    minor = minor * pivot;
    r.minors.push_back(minor);
    if (pivot.certainly_negative()) {
      r.verdict = Verdict::fail;
      r.detail = "leading minor " + std::to_string(k + 1) + " is negative";
      return r;
    }
    if (!pivot.certainly_positive()) {
      r.verdict = Verdict::inconclusive;
      r.detail = "sign of leading minor " + std::to_string(k + 1) + " not certified at " + std::to_string(prec) +
                 " bits";
      return r;
    }
    RealBall inv = pivot.inverse();
    for (Eigen::Index i = k + 1; i < g; ++i)
      for (Eigen::Index j = k + 1; j < g; ++j) h(i, j) -= inv * (h(i, k) * h(k, j));
  }
  r.verdict = Verdict::pass;
  r.detail = "all " + std::to_string(g) + " leading minors certified positive";
  return r;
}

}  // namespace shimura
