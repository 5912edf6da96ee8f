#include "shimura/pel/module.hpp"

namespace shimura {

PELModule build_module(const IntMat& m3, const std::array<IntVec, 3>& u) {
  if (m3.rows() != 6 || m3.cols() != 6) throw std::invalid_argument("build_module: M3 must be 6x6");
  IntMat rel = m3 * m3 + m3 + identity<Integer>(6);
  if (!is_zero_matrix(rel)) throw std::invalid_argument("build_module: M3^2 + M3 + 1 != 0");
  PELModule m{m3, u, IntMat(6, 6)};
  for (int k = 0; k < 3; ++k) {
    if (u[static_cast<std::size_t>(k)].size() != 6) throw std::invalid_argument("build_module: u-vectors must have length 6");
    m.l.col(k) = u[static_cast<std::size_t>(k)];
    m.l.col(k + 3) = m3 * u[static_cast<std::size_t>(k)];
  }
  Integer det = det_bareiss(m.l);
  if (abs(det) != 1) {
    SmithForm s = smith_normal_form(m.l);
    throw ModuleRejected("build_module: u and M3 u do not form a Z-basis (det L = " + det.get_str() + ")", s);
  }
  return m;
}

PairingData pairing_data(const PELModule& m, const AlternatingForm& j) {
  IntMat lt = m.l.transpose();
  IntMat g = lt * j.gram() * m.l;
  IntMat m3t = m.m3.transpose();
  IntMat g_rho = lt * m3t * j.gram() * m.l;
  return {g, g_rho};
}

IntMat rho_in_u_basis(const PELModule& m) {
  DetInverse di = exact_det_inv(m.l);
  return to_integer(mul(*di.inverse, to_rational(IntMat(m.m3 * m.l))));
}

}  // namespace shimura
