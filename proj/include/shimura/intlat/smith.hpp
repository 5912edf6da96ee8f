#pragma once

#include "shimura/intlat/matrix.hpp"

#include <optional>
#include <vector>

namespace shimura {

struct SmithForm {
  IntMat U, D, V;  // U * A * V = D
  std::vector<Integer> divisors() const;  // nonzero diagonal entries
  Eigen::Index rank() const;
};

SmithForm smith_normal_form(const IntMat& a);

// fraction-free (Bareiss) determinant
Integer det_bareiss(const IntMat& a);

struct DetInverse {
  Integer det;
  std::optional<RatMat> inverse;
};

DetInverse exact_det_inv(const IntMat& a);

}  // namespace shimura
