#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace shimura {

struct BranchPoint {
  std::string label;
  int exponent;  // reduced mod n
};

class InvalidCover : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// y^n = prod (x - b_j)^{a_j}, with the point at infinity listed last
class CyclicCoverData {
 public:
  // infinity gets a_inf = -sum a_j mod n
  static CyclicCoverData with_infinity(int n, std::vector<BranchPoint> finite);
  // all points given, including "inf"; the exponent sum must vanish mod n
  static CyclicCoverData from_points(int n, std::vector<BranchPoint> points);

  int n() const { return n_; }
  const std::vector<BranchPoint>& points() const { return points_; }

 private:
  CyclicCoverData(int n, std::vector<BranchPoint> points);
  int n_;
  std::vector<BranchPoint> points_;
};

int genus(const CyclicCoverData& c);

struct EigenspaceRow {
  int character;  // i = 1..n-1
  int rank;       // rank of the H^1 eigenspace
  int dim;        // dimension of the holomorphic eigenspace
};

// dim_i = -1 + sum_j <i a_j / n>, rank_i = dim_i + dim_{n-i}
std::vector<EigenspaceRow> eigenspace_dims(const CyclicCoverData& c);

}  // namespace shimura
