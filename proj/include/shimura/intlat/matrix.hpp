#pragma once

#include "shimura/exactfield/rational.hpp"

#include <Eigen/Core>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

namespace shimura {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMat = Mat<Integer>;
using RatMat = Mat<Rational>;
using IntVec = Vec<Integer>;

template <class Scalar>
Mat<Scalar> from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
  Mat<Scalar> m(static_cast<Eigen::Index>(rows.size()),
                rows.size() ? static_cast<Eigen::Index>(rows.begin()->size()) : 0);
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    if (static_cast<Eigen::Index>(r.size()) != m.cols()) throw std::invalid_argument("ragged matrix literal");
    Eigen::Index j = 0;
    for (const auto& x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline IntMat int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  IntMat m(static_cast<Eigen::Index>(rows.size()),
           rows.size() ? static_cast<Eigen::Index>(rows.begin()->size()) : 0);
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    if (static_cast<Eigen::Index>(r.size()) != m.cols()) throw std::invalid_argument("ragged matrix literal");
    Eigen::Index j = 0;
    for (long x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

template <class Scalar>
Mat<Scalar> identity(Eigen::Index n) {
  Mat<Scalar> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Scalar(i == j ? 1 : 0);
  return m;
}

template <class Scalar>
Mat<Scalar> zeros(Eigen::Index r, Eigen::Index c) {
  Mat<Scalar> m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Scalar(0);
  return m;
}

// [[0, I_g], [-I_g, 0]]
inline IntMat standard_symplectic(Eigen::Index g) {
  IntMat j = zeros<Integer>(2 * g, 2 * g);
  for (Eigen::Index k = 0; k < g; ++k) {
    j(k, g + k) = 1;
    j(g + k, k) = -1;
  }
  return j;
}

inline RatMat to_rational(const IntMat& a) { return a.cast<Rational>(); }

// exact integer matrix from a rational one; throws if some entry is fractional
IntMat to_integer(const RatMat& a);

template <class Scalar>
bool is_zero_matrix(const Mat<Scalar>& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j))) return false;
  return true;
}

template <class Scalar>
bool equal(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

// Plain triple-loop product for mixed scalar types (Eigen's GEMM requires a closed scalar).
template <class A, class B>
struct ProductType {
  using type = std::decay_t<decltype(std::declval<A>() * std::declval<B>())>;
};
template <>
struct ProductType<Integer, Integer> {
  using type = Integer;
};
template <>
struct ProductType<Rational, Rational> {
  using type = Rational;
};

template <class A, class B>
Mat<typename ProductType<A, B>::type> mul(const Mat<A>& a, const Mat<B>& b) {
  using R = typename ProductType<A, B>::type;
  if (a.cols() != b.rows()) throw std::invalid_argument("mul: dimension mismatch");
  Mat<R> r(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      R acc{};
      for (Eigen::Index k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  return r;
}

template <class Scalar>
Mat<Scalar> conj(const Mat<Scalar>& a) {
  Mat<Scalar> r(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r(i, j) = conj(a(i, j));
  return r;
}

template <class Scalar>
Mat<Scalar> adjoint(const Mat<Scalar>& a) {
  return conj(Mat<Scalar>(a.transpose()));
}

class AlternatingForm {
 public:
  explicit AlternatingForm(IntMat gram);
  const IntMat& gram() const { return gram_; }
  Eigen::Index dim() const { return gram_.rows(); }

 private:
  IntMat gram_;
};

bool is_alternating(const IntMat& a);

}  // namespace shimura
