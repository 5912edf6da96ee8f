#pragma once

#include "shimura/intlat/matrix.hpp"
#include "shimura/intlat/smith.hpp"

#include <array>

namespace shimura {

class ModuleRejected : public std::runtime_error {
 public:
  ModuleRejected(const std::string& what, SmithForm evidence)
      : std::runtime_error(what), evidence(std::move(evidence)) {}
  SmithForm evidence;  // Smith form of the assembled L
};

// Z^6 with a rho-action M3 and a Z[rho]-basis u1, u2, u3; L = [u | M3 u]
struct PELModule {
  IntMat m3;
  std::array<IntVec, 3> u;
  IntMat l;
};

PELModule build_module(const IntMat& m3, const std::array<IntVec, 3>& u);

// L^T J L and L^T M3^T J L, and their upper-left 3x3 blocks
struct PairingData {
  IntMat g, g_rho;
  IntMat g0() const { return g.topLeftCorner(3, 3); }
  IntMat g1() const { return g_rho.topLeftCorner(3, 3); }
};

PairingData pairing_data(const PELModule& m, const AlternatingForm& j);

// L^-1 M3 L: the rho-action in the u-basis
IntMat rho_in_u_basis(const PELModule& m);

}  // namespace shimura
