#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shimura/data/genus4.hpp"
#include "shimura/intlat/smith.hpp"

#include <optional>
#include <random>

using namespace shimura;

TEST_CASE("genus by Riemann-Hurwitz") {
  CHECK(genus(CyclicCoverData::with_infinity(6, {{"a", 1}, {"b", 1}, {"c", 1}})) == 4);
  CHECK(genus(CyclicCoverData::with_infinity(2, {{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}})) == 1);
  CHECK(genus(CyclicCoverData::from_points(3, {{"a", 1}, {"b", 1}, {"c", 1}, {"inf", 0}})) == 1);
  CHECK(genus(example::cover()) == 4);
}

TEST_CASE("eigenspace table of the genus-4 curve") {
  auto rows = eigenspace_dims(example::cover());
  auto want = example::eigenspace_table();
  REQUIRE(rows.size() == want.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(rows[k].character == want[k].character);
    CHECK(rows[k].dim == want[k].dim);
    CHECK(rows[k].rank == want[k].rank);
  }
}

TEST_CASE("random covers: eigenspace dimensions sum to the genus") {
  std::mt19937 g(12);
  int tried = 0;
  while (tried < 50) {
    int n = std::uniform_int_distribution<int>(2, 12)(g);
    int m = std::uniform_int_distribution<int>(2, 6)(g);
    std::vector<BranchPoint> pts;
    for (int k = 0; k < m; ++k) pts.push_back({"b" + std::to_string(k), std::uniform_int_distribution<int>(1, n - 1)(g)});
    std::optional<CyclicCoverData> c;
    try {
      c = CyclicCoverData::with_infinity(n, pts);
    } catch (const InvalidCover&) {
      continue;
    }
    ++tried;
    auto rows = eigenspace_dims(*c);
    int total = 0;
    for (const auto& r : rows) {
      CHECK(r.dim >= 0);
      CHECK(r.rank == r.dim + rows[static_cast<std::size_t>(n - 1 - r.character)].dim);
      total += r.dim;
    }
    CHECK(total == genus(*c));
    int ranks = 0;
    for (const auto& r : rows) ranks += r.rank;
    CHECK(ranks == 2 * genus(*c));
  }
}

TEST_CASE("invalid covers are rejected") {
  CHECK_THROWS_AS(CyclicCoverData::from_points(6, {{"a", 1}, {"b", 1}, {"inf", 1}}), InvalidCover);
  CHECK_THROWS_AS(CyclicCoverData::with_infinity(6, {{"a", 2}, {"b", 2}, {"c", 2}}), InvalidCover);
  CHECK_THROWS_AS(CyclicCoverData::with_infinity(6, {{"a", 6}, {"b", 1}}), InvalidCover);
  CHECK_THROWS_AS(CyclicCoverData::from_points(6, {{"inf", 3}, {"a", 1}, {"b", 1}, {"c", 1}}), InvalidCover);
}

TEST_CASE("homology model of the genus-4 curve") {
  HomologyModel h = example::homology_model();
  HomologyReport r = verify_homology_model(h, example::e_basis(), example::minor_indices(), 8);
  CHECK(r.find("skew-symmetry")->passed);
  CHECK(r.find("shift-equivariance")->passed);
  CHECK(r.find("rank")->passed);
  CHECK(r.find("minor-nondegenerate")->passed);
  CHECK(r.rank == 8);
  CHECK(abs(r.minor_det) == 1);
  // the printed e-basis is unimodular for M but its Gram matrix is not the standard J
  CHECK(abs(det_bareiss(r.gram)) == 1);
  CHECK_FALSE(r.find("gram-standard-symplectic")->passed);
  CHECK(r.gram(0, 4) == -1);
  CHECK(r.gram(2, 6) == -3);
}

TEST_CASE("homology checks detect a broken pairing") {
  HomologyModel h = example::homology_model();
  h.pairing(0, 1) += 1;
  HomologyReport r = verify_homology_model(h, example::e_basis(), example::minor_indices(), 8);
  CHECK_FALSE(r.find("skew-symmetry")->passed);
  HomologyModel s = example::homology_model();
  s.shift = block_cyclic_shift(1, 12);
  CHECK_FALSE(verify_homology_model(s, example::e_basis(), example::minor_indices(), 8).find("shift-equivariance")->passed);
}

TEST_CASE("deck action on the e-basis has order 6 and preserves the Gram matrix") {
  HomologyModel h = example::homology_model();
  IntMat x = example::e_basis();
  RatMat r = deck_action_on_basis(h, x);
  RatMat p = identity<Rational>(8);
  for (int k = 0; k < 6; ++k) p = mul(p, r);
  CHECK(equal(p, identity<Rational>(8)));
  RatMat g = to_rational(mul(IntMat(x.transpose()), mul(h.pairing, x)));
  RatMat rt = r.transpose();
  CHECK(equal(mul(rt, mul(g, r)), g));
}
