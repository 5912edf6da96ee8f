#include "shimura/pel/diagonalize.hpp"

#include <algorithm>
#include <functional>

namespace shimura {

namespace {

bool nonzero(const TowerElem& x) { return !x.is_zero(); }
bool nonzero(const ComplexBall& x) { return x.certainly_nonzero(); }

template <class S>
S unit(bool imaginary);
template <>
TowerElem unit<TowerElem>(bool imaginary) {
  return imaginary ? TowerElem::imag_unit() : TowerElem(1);
}

template <class S>
Congruence<S> congruence(Mat<S> a, const std::function<S(bool)>& unit_of) {
  const Eigen::Index n = a.rows();
  // p = Q^*, updated by the inverse of every row operation applied to a
  const S one = unit_of(false);
  const S zero = one - one;
  Mat<S> p = Mat<S>::Constant(n, n, zero);
  for (Eigen::Index i = 0; i < n; ++i) p(i, i) = one;

  auto add_row = [&](Eigen::Index dst, Eigen::Index src, const S& c) {  // row dst += c row src, col dst += c̄ col src
    for (Eigen::Index j = 0; j < n; ++j) a(dst, j) += c * a(src, j);
    S cc = conj(c);
    for (Eigen::Index i = 0; i < n; ++i) a(i, dst) += cc * a(i, src);
    for (Eigen::Index i = 0; i < n; ++i) p(i, src) -= c * p(i, dst);
  };

  for (Eigen::Index k = 0; k < n; ++k) {
    if (!nonzero(a(k, k))) {
      Eigen::Index j = k + 1;
      while (j < n && !nonzero(a(j, j))) ++j;
      if (j < n) {
        a.row(k).swap(a.row(j));
        a.col(k).swap(a.col(j));
        p.col(k).swap(p.col(j));
      } else {
        j = k + 1;
        while (j < n && !nonzero(a(j, k))) ++j;
        if (j == n) continue;
        S re2 = a(j, k) + conj(a(j, k));
        add_row(k, j, unit_of(!nonzero(re2)));
        if (!nonzero(a(k, k))) throw std::runtime_error("hermitian_congruence: pivot combination vanished");
      }
    }
    S inv = a(k, k).inverse();
    for (Eigen::Index i = k + 1; i < n; ++i) add_row(i, k, -(a(i, k) * inv));
  }
  Congruence<S> c;
  c.q = adjoint(p);
  for (Eigen::Index k = 0; k < n; ++k) c.d.push_back(a(k, k));
  return c;
}

int sign_of(const TowerElem& d, mpfr_prec_t prec) {
  RealBall r = embed(d, prec).real();
  if (r.certainly_positive()) return 1;
  if (r.certainly_negative()) return -1;
  return 0;
}

int sign_of(const ComplexBall& d) {
  if (d.real().certainly_positive()) return 1;
  if (d.real().certainly_negative()) return -1;
  return 0;
}

// rows ordered so that the signs read (+, +, -)
std::vector<Eigen::Index> sign_order(const std::vector<int>& signs) {
  std::vector<Eigen::Index> order;
  for (int want : {1, -1})
    for (std::size_t k = 0; k < signs.size(); ++k)
      if (signs[k] == want) order.push_back(static_cast<Eigen::Index>(k));
  return order;
}

TowerMat i_conj(const SkewHermitian3& t) {
  TowerMat h = conj(t.matrix());
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j) h(i, j) = TowerElem::imag_unit() * h(i, j);
  return h;
}

}  // namespace

Congruence<TowerElem> hermitian_congruence(const TowerMat& h) {
  return congruence<TowerElem>(h, [](bool im) { return unit<TowerElem>(im); });
}

Congruence<ComplexBall> hermitian_congruence(const Mat<ComplexBall>& h) {
  const mpfr_prec_t prec = h(0, 0).precision();
  return congruence<ComplexBall>(h, [prec](bool im) {
    return im ? ComplexBall(RealBall(Rational(0), prec), RealBall(Rational(1), prec))
              : ComplexBall(RealBall(Rational(1), prec), RealBall(Rational(0), prec));
  });
}

Signature signature(const SkewHermitian3& t, mpfr_prec_t prec) {
  TowerMat h = t.matrix();
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j) h(i, j) = -(TowerElem::imag_unit() * h(i, j));
  Congruence<TowerElem> c = hermitian_congruence(h);
  Signature s;
  s.verdict = Verdict::pass;
  for (const TowerElem& d : c.d) {
    int sg = sign_of(d, prec);
    if (sg > 0) ++s.positive;
    else if (sg < 0) ++s.negative;
    else s.verdict = Verdict::inconclusive;
  }
  return s;
}

TowerMat defw_diagonal() {
  TowerMat d = TowerMat::Constant(3, 3, TowerElem());
  d(0, 0) = TowerElem::imag_unit();
  d(1, 1) = TowerElem::imag_unit();
  d(2, 2) = -TowerElem::imag_unit();
  return d;
}

TowerMat defw_residual(const SkewHermitian3& t, const TowerMat& w) {
  TowerMat wt = w.transpose();
  return mul(mul(wt, defw_diagonal()), conj(w)) - t.matrix();
}

Mat<ComplexBall> defw_residual(const SkewHermitian3& t, const Mat<ComplexBall>& w, mpfr_prec_t prec) {
  Mat<ComplexBall> wt = w.transpose();
  return mul(mul(wt, embed(defw_diagonal(), prec)), conj(w)) - embed(t.matrix(), prec);
}

bool defw_holds(const SkewHermitian3& t, const TowerMat& w) { return is_zero_matrix(defw_residual(t, w)); }

Diagonalization diagonalize_W(const SkewHermitian3& t, mpfr_prec_t prec) {
  Diagonalization out;
  out.signature = signature(t, prec);
  if (out.signature.verdict != Verdict::pass)
    throw BallContainsZero("diagonalize_W: signature not certified at " + std::to_string(prec) + " bits");
  if (out.signature.positive != 2 || out.signature.negative != 1)
    throw SignatureMismatch("diagonalize_W: signature (" + std::to_string(out.signature.positive) + "," +
                            std::to_string(out.signature.negative) + "), expected (2,1)");

  // i conj(T) = W^* diag(1, 1, -1) W
  TowerMat h = i_conj(t);

  Congruence<TowerElem> ce = hermitian_congruence(h);
  std::vector<int> signs;
  for (const TowerElem& d : ce.d) signs.push_back(sign_of(d, prec));
  std::vector<Eigen::Index> order = sign_order(signs);
  TowerMat w(3, 3);
  bool exact = true;
  for (Eigen::Index r = 0; r < 3 && exact; ++r) {
    Eigen::Index k = order[static_cast<std::size_t>(r)];
    TowerElem mag = signs[static_cast<std::size_t>(k)] > 0 ? ce.d[static_cast<std::size_t>(k)]
                                                            : -ce.d[static_cast<std::size_t>(k)];
    std::optional<TowerElem> root = sqrt_real_monomial(mag);
    if (!root) {
      exact = false;
      break;
    }
    for (Eigen::Index j = 0; j < 3; ++j) w(r, j) = *root * ce.q(k, j);
  }
  if (exact) out.exact = w;

  Congruence<ComplexBall> cb = hermitian_congruence(embed(h, prec));
  std::vector<int> bsigns;
  for (const ComplexBall& d : cb.d) bsigns.push_back(sign_of(d));
  if (std::count(bsigns.begin(), bsigns.end(), 0) > 0)
    throw BallContainsZero("diagonalize_W: ball pivot sign not certified");
  std::vector<Eigen::Index> border = sign_order(bsigns);
  out.ball = Mat<ComplexBall>(3, 3);
  for (Eigen::Index r = 0; r < 3; ++r) {
    Eigen::Index k = border[static_cast<std::size_t>(r)];
    RealBall mag = cb.d[static_cast<std::size_t>(k)].real().abs().sqrt();
    for (Eigen::Index j = 0; j < 3; ++j) out.ball(r, j) = mag * cb.q(k, j);
  }
  Mat<ComplexBall> res = defw_residual(t, out.ball, prec);
  out.ball_residual_contains_zero = true;
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j)
      if (!res(i, j).contains_zero()) out.ball_residual_contains_zero = false;
  return out;
}

TowerMat w_from_family_row(const AffineMat& family) {
  TowerMat w(3, 3);
  for (Eigen::Index k = 0; k < 3; ++k) {
    w(0, k) = family(0, k).coefficient(Param::z1);
    w(1, k) = family(0, k).coefficient(Param::z2);
    w(2, k) = family(0, k).constant();
  }
  return w;
}

}  // namespace shimura
