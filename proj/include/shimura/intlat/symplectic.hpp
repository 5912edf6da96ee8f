#pragma once

#include "shimura/intlat/matrix.hpp"

#include <stdexcept>
#include <vector>

namespace shimura {

class DegenerateForm : public std::runtime_error {
 public:
  DegenerateForm(IntMat radical)
      : std::runtime_error("alternating form is degenerate"), radical_(std::move(radical)) {}
  const IntMat& radical() const { return radical_; }

 private:
  IntMat radical_;
};

struct SymplecticBasis {
  IntMat S;                   // columns e_1..e_g, f_1..f_g
  std::vector<Integer> d;     // S^T E S = [[0, D], [-D, 0]], d_1 | d_2 | ...
  IntMat frobenius() const;   // [[0, D], [-D, 0]]
};

SymplecticBasis symplectic_basis(const AlternatingForm& e);

}  // namespace shimura
