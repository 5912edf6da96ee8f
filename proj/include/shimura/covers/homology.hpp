#pragma once

#include "shimura/intlat/matrix.hpp"

#include <string>
#include <vector>

namespace shimura {

// generators u_1..u_m with an intersection pairing and the deck shift as a permutation
struct HomologyModel {
  std::vector<std::string> generators;
  IntMat pairing;
  std::vector<int> shift;  // shift[i] = index of the image of generator i
};

// u_{1+k} -> u_{1+(k+1 mod r)} within each consecutive block of length r
std::vector<int> block_cyclic_shift(int blocks, int block_length);

struct CheckItem {
  std::string name;
  bool passed;
  std::string detail;
};

struct HomologyReport {
  std::vector<CheckItem> items;
  IntMat gram;  // X^T M X
  Eigen::Index rank = 0;
  Integer minor_det = 0;
  bool all_passed() const;
  const CheckItem* find(const std::string& name) const;
};

// relations: columns are the basis candidates e_j in generator coordinates
HomologyReport verify_homology_model(const HomologyModel& h, const IntMat& relations,
                                     const std::vector<int>& minor_indices, Eigen::Index expected_rank);

// matrix of the deck shift on span(relations), in those coordinates: R = G^-1 X^T M S X
RatMat deck_action_on_basis(const HomologyModel& h, const IntMat& relations);

}  // namespace shimura
