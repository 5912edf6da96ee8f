#include "shimura/covers/homology.hpp"

#include "shimura/intlat/linalg.hpp"
#include "shimura/intlat/smith.hpp"

#include <sstream>

namespace shimura {

std::vector<int> block_cyclic_shift(int blocks, int block_length) {
  std::vector<int> s;
  for (int b = 0; b < blocks; ++b)
    for (int k = 0; k < block_length; ++k) s.push_back(b * block_length + (k + 1) % block_length);
  return s;
}

bool HomologyReport::all_passed() const {
  for (const auto& i : items)
    if (!i.passed) return false;
  return true;
}

const CheckItem* HomologyReport::find(const std::string& name) const {
  for (const auto& i : items)
    if (i.name == name) return &i;
  return nullptr;
}

HomologyReport verify_homology_model(const HomologyModel& h, const IntMat& relations,
                                     const std::vector<int>& minor_indices, Eigen::Index expected_rank) {
  HomologyReport r;
  const IntMat& m = h.pairing;
  const Eigen::Index n = m.rows();

  {
    std::ostringstream bad;
    int count = 0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = i; j < n; ++j)
        if (m(i, j) != -m(j, i)) {
          if (count++ < 4) bad << " (" << i + 1 << "," << j + 1 << ")";
        }
    r.items.push_back({"skew-symmetry", count == 0, count == 0 ? "M^T = -M" : "violations at" + bad.str()});
  }
  {
    std::ostringstream bad;
    int count = 0;
    bool shift_ok = static_cast<Eigen::Index>(h.shift.size()) == n;
    for (Eigen::Index i = 0; shift_ok && i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (m(h.shift[static_cast<std::size_t>(i)], h.shift[static_cast<std::size_t>(j)]) != m(i, j)) {
          if (count++ < 4) bad << " (" << i + 1 << "," << j + 1 << ")";
        }
    bool ok = shift_ok && count == 0;
    r.items.push_back({"shift-equivariance", ok,
                       !shift_ok ? "shift has wrong length"
                                 : (ok ? "M(s(i),s(j)) = M(i,j)" : "violations at" + bad.str())});
  }
  r.rank = smith_normal_form(m).rank();
  r.items.push_back({"rank", r.rank == expected_rank,
                     "rank " + std::to_string(r.rank) + ", expected " + std::to_string(expected_rank)});
  {
    const Eigen::Index k = static_cast<Eigen::Index>(minor_indices.size());
    IntMat minor(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = 0; j < k; ++j)
        minor(i, j) = m(minor_indices[static_cast<std::size_t>(i)], minor_indices[static_cast<std::size_t>(j)]);
    r.minor_det = det_bareiss(minor);
    r.items.push_back({"minor-nondegenerate", sgn(r.minor_det) != 0, "det = " + r.minor_det.get_str()});
  }
  r.gram = relations.transpose() * m * relations;
  IntMat j = standard_symplectic(relations.cols() / 2);
  bool gram_ok = relations.cols() % 2 == 0 && equal(r.gram, j);
  std::ostringstream d;
  if (gram_ok) {
    d << "X^T M X = J";
  } else {
    int count = 0;
    for (Eigen::Index a = 0; a < r.gram.rows(); ++a)
      for (Eigen::Index b = a + 1; b < r.gram.cols(); ++b)
        if (a < j.rows() && b < j.cols() && r.gram(a, b) != j(a, b)) {
          if (count++ < 6) d << " <e" << a + 1 << ",e" << b + 1 << ">=" << r.gram(a, b).get_str();
        }
    d << " (" << count << " entries above the diagonal differ from J; det = " << det_bareiss(r.gram).get_str()
      << ")";
  }
  r.items.push_back({"gram-standard-symplectic", gram_ok, d.str()});
  return r;
}

RatMat deck_action_on_basis(const HomologyModel& h, const IntMat& relations) {
  const Eigen::Index n = h.pairing.rows();
  IntMat s = zeros<Integer>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) s(h.shift[static_cast<std::size_t>(i)], i) = 1;
  IntMat gram = relations.transpose() * h.pairing * relations;
  auto gi = inverse(to_rational(gram));
  if (!gi) throw std::domain_error("basis Gram matrix is singular");
  RatMat rhs = to_rational(IntMat(relations.transpose() * h.pairing * s * relations));
  return *gi * rhs;
}

}  // namespace shimura
