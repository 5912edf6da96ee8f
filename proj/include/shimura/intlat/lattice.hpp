#pragma once

#include "shimura/intlat/matrix.hpp"

namespace shimura {

// Z-basis (as columns) of {v in Z^n : A v = 0}; saturated by construction
IntMat integer_kernel(const RatMat& a);

// Row-style Hermite normal form of the lattice spanned by the columns of `basis`;
// returned as columns, zero columns dropped. Canonical: equal lattices give equal forms.
IntMat hermite_normal_form(const IntMat& basis);

bool same_lattice(const IntMat& a, const IntMat& b);

}  // namespace shimura
