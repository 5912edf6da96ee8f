#pragma once

#include "shimura/periods/period_matrix.hpp"

#include <utility>

namespace shimura {

class MatchFailure : public std::runtime_error {
 public:
  MatchFailure(const std::string& what, std::vector<std::pair<Eigen::Index, Eigen::Index>> entries = {})
      : std::runtime_error(what), entries(std::move(entries)) {}
  std::vector<std::pair<Eigen::Index, Eigen::Index>> entries;  // inconsistent entries
};

// C = diag(c11, [[c22, c23], [c32, c33]]) and the point z* with C F(z*) = target
struct MatchResult {
  TowerElem c11, c22, c23, c32, c33;
  TowerElem z1, z2;
  bool used_constant_column = false;
  TowerMat c() const;
  ExactPoint point() const;
};

// throws MatchFailure on an inconsistent or underdetermined system
MatchResult match_solver(const AffineMat& family, const TowerMat& target);

// C F(z) in the family's basis
AffineMat matched_family(const MatchResult& m, const AffineMat& family);

// C F(z) L^-1: the family in the ambient basis, polarized by j
PeriodMatrix prym_family(const MatchResult& m, const AffineMat& family, const IntMat& l, const AlternatingForm& j);

}  // namespace shimura
