#pragma once

#include "shimura/pel/skew_hermitian.hpp"

#include <optional>

namespace shimura {

// H = Q^* diag(d) Q for Hermitian H
template <class S>
struct Congruence {
  Mat<S> q;
  std::vector<S> d;
};

Congruence<TowerElem> hermitian_congruence(const TowerMat& h);
// same elimination in ball arithmetic; throws BallContainsZero when a pivot cannot be certified
Congruence<ComplexBall> hermitian_congruence(const Mat<ComplexBall>& h);

struct Signature {
  int positive = 0, negative = 0;
  Verdict verdict = Verdict::inconclusive;
};

// eigenvalue signs of the Hermitian matrix -iT
Signature signature(const SkewHermitian3& t, mpfr_prec_t prec);

// diag(i, i, -i)
TowerMat defw_diagonal();

// W^T D conj(W) - T
TowerMat defw_residual(const SkewHermitian3& t, const TowerMat& w);
Mat<ComplexBall> defw_residual(const SkewHermitian3& t, const Mat<ComplexBall>& w, mpfr_prec_t prec);
bool defw_holds(const SkewHermitian3& t, const TowerMat& w);

struct Diagonalization {
  std::optional<TowerMat> exact;  // present when every rescaling lands in the tower
  Mat<ComplexBall> ball;          // computed independently in ball arithmetic
  Signature signature;
  bool ball_residual_contains_zero = false;
};

class SignatureMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Diagonalization diagonalize_W(const SkewHermitian3& t, mpfr_prec_t prec);

// W read off row 1 of a family: column k of row 1 is (z1, z2, 1) W e_k
TowerMat w_from_family_row(const AffineMat& family);

}  // namespace shimura
