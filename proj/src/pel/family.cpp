#include "shimura/pel/family.hpp"

namespace shimura {

std::string_view name(Embedding e) { return e == Embedding::sigma ? "sigma" : "sigma-bar"; }
std::string_view name(I2Reading r) { return r == I2Reading::identity ? "identity" : "i-identity"; }
std::string_view name(ColumnOrder o) { return o == ColumnOrder::standard ? "standard" : "interleaved"; }

AffineMat family_periods(const TowerMat& w, const Conventions& c) {
  const TowerElem mults[2] = {TowerElem(1), TowerElem::rho()};
  const TowerElem i = TowerElem::imag_unit();
  TowerMat wc = conj(w);
  AffineMat f(3, 6);
  for (Eigen::Index col = 0; col < 6; ++col) {
    Eigen::Index k = c.order == ColumnOrder::standard ? col % 3 : col / 2;
    const TowerElem& m = mults[c.order == ColumnOrder::standard ? col / 3 : col % 2];
    TowerElem s1 = c.embedding == Embedding::sigma ? m : m.conj();
    TowerElem s2 = s1.conj();
    AffineForm r1 = AffineForm(w(2, k)) + AffineForm::variable(Param::z1, w(0, k)) +
                    AffineForm::variable(Param::z2, w(1, k));
    TowerElem k2 = wc(0, k), k3 = wc(1, k);
    if (c.i2 == I2Reading::i_identity) {
      k2 = i * k2;
      k3 = i * k3;
    }
    AffineForm r2 = AffineForm(k2) + AffineForm::variable(Param::z1, wc(2, k));
    AffineForm r3 = AffineForm(k3) + AffineForm::variable(Param::z2, wc(2, k));
    f(0, col) = r1 * s1;
    f(1, col) = r2 * s2;
    f(2, col) = r3 * s2;
  }
  return f;
}

ConventionSearch resolve_conventions(const SkewHermitian3& t, const std::vector<NamedW>& candidates,
                                     const AffineMat& displayed) {
  ConventionSearch s;
  for (const NamedW& cand : candidates) {
    bool ok = defw_holds(t, cand.w);
    for (Embedding e : {Embedding::sigma, Embedding::sigma_bar})
      for (I2Reading r : {I2Reading::identity, I2Reading::i_identity})
        for (ColumnOrder o : {ColumnOrder::standard, ColumnOrder::interleaved}) {
          CandidateOutcome out;
          out.w_name = cand.name;
          out.conventions.embedding = e;
          out.conventions.i2 = r;
          out.conventions.order = o;
          out.defw_holds = ok;
          out.family = family_periods(cand.w, out.conventions);
          for (Eigen::Index i = 0; i < 3; ++i)
            for (Eigen::Index j = 0; j < 6; ++j) {
              bool same = out.family(i, j) == displayed(i, j);
              out.agreement[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = same;
              out.agree_count += same;
            }
          out.anchor_columns = true;
          for (std::size_t i = 0; i < 3; ++i) out.anchor_columns = out.anchor_columns && out.agreement[i][0] && out.agreement[i][3];
          s.outcomes.push_back(std::move(out));
        }
  }
  for (std::size_t k = 0; k < s.outcomes.size(); ++k) {
    const CandidateOutcome& o = s.outcomes[k];
    if (!o.defw_holds || !o.anchor_columns) continue;
    if (!s.chosen || o.agree_count > s.outcomes[*s.chosen].agree_count) {
      s.chosen = k;
      s.ambiguous = false;
    } else if (o.agree_count == s.outcomes[*s.chosen].agree_count && !equal(o.family, s.outcomes[*s.chosen].family)) {
      s.ambiguous = true;
    }
  }
  return s;
}

TowerMat rho_action(const Conventions& c) {
  TowerElem r = c.embedding == Embedding::sigma ? TowerElem::rho() : TowerElem::rho().conj();
  return diagonal({r, r.conj(), r.conj()});
}

IntertwiningResult endomorphism_check(const AffineMat& family, const IntMat& rho_u, const Conventions& c) {
  return automorphism_check(rho_action(c), family, to_rational(rho_u));
}

Verdict polarization_identity_check(const AffineMat& family, const IntMat& g, const BallPoint& point,
                                    mpfr_prec_t prec) {
  if (!point.value[1] || !point.value[2]) throw std::invalid_argument("polarization_identity_check: z1, z2 required");
  const ComplexBall& z1 = *point.value[1];
  const ComplexBall& z2 = *point.value[2];
  const RealBall one(Rational(1), prec);
  const RealBall zero(Rational(0), prec);
  const ComplexBall cone(one, zero), czero(zero, zero);
  RealBall norm = one - z1.abs2() - z2.abs2();
  if (!norm.certainly_positive()) return Verdict::inconclusive;

  // (I2 - conj(z) z^T)^-1 via the 2x2 adjugate
  ComplexBall m00 = cone - z1.conj() * z1, m01 = czero - z1.conj() * z2;
  ComplexBall m10 = czero - z2.conj() * z1, m11 = cone - z2.conj() * z2;
  ComplexBall det = m00 * m11 - m01 * m10;
  if (det.contains_zero()) return Verdict::inconclusive;
  ComplexBall dinv = det.inverse();
  Mat<ComplexBall> h = Mat<ComplexBall>::Constant(3, 3, czero);
  const RealBall two(Rational(2), prec);
  h(0, 0) = ComplexBall(two * norm.inverse(), zero);
  h(1, 1) = two * (m11 * dinv);
  h(1, 2) = two * ((czero - m01) * dinv);
  h(2, 1) = two * ((czero - m10) * dinv);
  h(2, 2) = two * (m00 * dinv);

  Mat<ComplexBall> f = evaluate(family, point, prec);
  Mat<ComplexBall> ft = f.transpose();
  Mat<ComplexBall> p = mul(mul(ft, h), conj(f));
  Verdict v = Verdict::pass;
  for (Eigen::Index i = 0; i < p.rows(); ++i)
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
      if (!p(i, j).imag().contains(Rational(g(i, j)))) return Verdict::fail;
    }
  return v;
}

}  // namespace shimura
