#pragma once

#include "shimura/periods/period_matrix.hpp"

#include <array>

namespace shimura {

class KernelRankError : public std::runtime_error {
 public:
  KernelRankError(const std::string& what, Eigen::Index elliptic_rank, Eigen::Index prym_rank)
      : std::runtime_error(what), elliptic_rank(elliptic_rank), prym_rank(prym_rank) {}
  Eigen::Index elliptic_rank, prym_rank;
};

// Columns of the change of basis that carry the elliptic factor (0-based).
inline constexpr std::array<Eigen::Index, 2> kEllipticColumns{0, 4};

struct IsogenySplit {
  IntMat lambda_e;  // columns span the elliptic sublattice
  IntMat lambda_p;  // columns span the complementary (Prym) sublattice
  IntMat bc;        // assembled change of basis
  AffineMat product;  // P * bc
  std::vector<Eigen::Index> varying_rows, constant_rows;
  bool block_diagonal = false;
  Integer index() const;  // |det bc|
};

// varying rows: rows with a parameter-dependent entry
IsogenySplit isogeny_split(const PeriodMatrix& p, std::array<Eigen::Index, 2> elliptic_columns = kEllipticColumns);

// real and imaginary parts, both as real tower elements
TowerElem real_part(const TowerElem& x);
TowerElem imag_part(const TowerElem& x);

struct EllipticBlock {
  AffineForm first, second;
  std::array<Eigen::Index, 2> columns = kEllipticColumns;
};

// blockdiag(elliptic, prym) * bc^-1 with the standard principal polarization
PeriodMatrix genus4_family(const EllipticBlock& elliptic, const PeriodMatrix& prym, const IntMat& bc);

// the elliptic block (3 tau, 3 tau + 3)
EllipticBlock standard_elliptic_block();

}  // namespace shimura
