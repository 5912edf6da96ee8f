#pragma once

#include "shimura/periods/period_matrix.hpp"

#include <optional>
#include <utility>

namespace shimura {

struct IntertwiningResult {
  bool holds = false;
  AffineMat residual;  // A * Pi - Pi * R
  std::vector<std::pair<Eigen::Index, Eigen::Index>> mismatches;
};

// A * Pi == Pi * R as matrices of affine forms
IntertwiningResult automorphism_check(const TowerMat& a, const AffineMat& pi, const RatMat& r);

// the unique rational R with A * Pi == Pi * R, if there is one
std::optional<RatMat> solve_intertwiner(const TowerMat& a, const AffineMat& pi);

TowerMat diagonal(const std::vector<TowerElem>& entries);

}  // namespace shimura
