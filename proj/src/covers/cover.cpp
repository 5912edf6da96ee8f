#include "shimura/covers/cover.hpp"

#include <numeric>

namespace shimura {

namespace {

int reduce(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

CyclicCoverData::CyclicCoverData(int n, std::vector<BranchPoint> points) : n_(n), points_(std::move(points)) {
  if (n_ < 2) throw InvalidCover("cover degree must be at least 2");
  int sum = 0, g = n_;
  for (std::size_t k = 0; k < points_.size(); ++k) {
    auto& p = points_[k];
    p.exponent = reduce(p.exponent, n_);
    bool infinite = p.label == "inf";
    if (!infinite && p.exponent == 0)
      throw InvalidCover("finite branch point '" + p.label + "' has exponent divisible by n");
    if (infinite && k + 1 != points_.size()) throw InvalidCover("the point at infinity must be listed last");
    sum += p.exponent;
    g = std::gcd(g, p.exponent);
  }
  if (sum % n_ != 0) throw InvalidCover("exponent sum is not divisible by n");
  if (g != 1) throw InvalidCover("cover is disconnected (gcd of n and exponents is " + std::to_string(g) + ")");
}

CyclicCoverData CyclicCoverData::with_infinity(int n, std::vector<BranchPoint> finite) {
  if (n < 2) throw InvalidCover("cover degree must be at least 2");
  int sum = 0;
  for (const auto& p : finite) {
    if (p.label == "inf") throw InvalidCover("infinity is computed, not given");
    sum += reduce(p.exponent, n);
  }
  finite.push_back({"inf", reduce(-sum, n)});
  return CyclicCoverData(n, std::move(finite));
}

CyclicCoverData CyclicCoverData::from_points(int n, std::vector<BranchPoint> points) {
  return CyclicCoverData(n, std::move(points));
}

int genus(const CyclicCoverData& c) {
  // 2g - 2 = -2n + sum (n - gcd(a_j, n))
  int n = c.n();
  int total = -2 * n;
  for (const auto& p : c.points()) total += n - std::gcd(p.exponent, n);
  return total / 2 + 1;
}

std::vector<EigenspaceRow> eigenspace_dims(const CyclicCoverData& c) {
  int n = c.n();
  std::vector<int> dim(static_cast<std::size_t>(n), 0);
  for (int i = 1; i < n; ++i) {
    int s = 0;
    for (const auto& p : c.points()) s += (i * p.exponent) % n;
    dim[static_cast<std::size_t>(i)] = s / n - 1;
  }
  std::vector<EigenspaceRow> rows;
  for (int i = 1; i < n; ++i)
    rows.push_back({i, dim[static_cast<std::size_t>(i)] + dim[static_cast<std::size_t>(n - i)],
                    dim[static_cast<std::size_t>(i)]});
  return rows;
}

}  // namespace shimura
