#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shimura/data/genus4.hpp"
#include "shimura/intlat/lattice.hpp"
#include "shimura/intlat/linalg.hpp"
#include "shimura/intlat/smith.hpp"
#include "shimura/intlat/symplectic.hpp"

#include <functional>
#include <random>

using namespace shimura;

namespace {

IntMat random_matrix(std::mt19937& g, Eigen::Index r, Eigen::Index c, int lo = -4, int hi = 4) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMat m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = d(g);
  return m;
}

IntMat random_alternating(std::mt19937& g, Eigen::Index n) {
  IntMat a = random_matrix(g, n, n, -5, 5);
  return IntMat(a - IntMat(a.transpose()));
}

IntMat random_unimodular(std::mt19937& g, Eigen::Index n) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n - 1)), coef(-2, 2);
  IntMat u = identity<Integer>(n);
  for (int k = 0; k < 3 * n; ++k) {
    int i = pick(g), j = pick(g);
    if (i == j) continue;
    u.row(i) += Integer(coef(g)) * u.row(j);
  }
  return u;
}

// cofactor expansion, independent of the elimination code
Integer det_cofactor(const IntMat& a) {
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer s = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    IntMat m(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c)
        if (c != j) m(r - 1, cc++) = a(r, c);
    Integer t = a(0, j) * det_cofactor(m);
    s += (j % 2 == 0) ? t : Integer(-t);
  }
  return s;
}

// determinantal divisors: gcd of all k x k minors
std::vector<Integer> determinantal_divisors(const IntMat& a) {
  const Eigen::Index r = a.rows(), c = a.cols();
  std::vector<Integer> out;
  for (Eigen::Index k = 1; k <= std::min(r, c); ++k) {
    Integer g = 0;
    std::vector<Eigen::Index> rs(static_cast<std::size_t>(k)), cs(static_cast<std::size_t>(k));
    std::function<void(Eigen::Index, Eigen::Index)> pick_cols;
    std::function<void(Eigen::Index, Eigen::Index)> pick_rows = [&](Eigen::Index at, Eigen::Index from) {
      if (at == k) return pick_cols(0, 0);
      for (Eigen::Index i = from; i < r; ++i) {
        rs[static_cast<std::size_t>(at)] = i;
        pick_rows(at + 1, i + 1);
      }
    };
    pick_cols = [&](Eigen::Index at, Eigen::Index from) {
      if (at == k) {
        IntMat m(k, k);
        for (Eigen::Index i = 0; i < k; ++i)
          for (Eigen::Index j = 0; j < k; ++j) m(i, j) = a(rs[static_cast<std::size_t>(i)], cs[static_cast<std::size_t>(j)]);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(det_cofactor(m)).get_mpz_t());
        return;
      }
      for (Eigen::Index j = from; j < c; ++j) {
        cs[static_cast<std::size_t>(at)] = j;
        pick_cols(at + 1, j + 1);
      }
    };
    pick_rows(0, 0);
    if (g == 0) break;
    out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("Smith form: U A V = D, unimodular transforms, divisor chain") {
  std::mt19937 g(1);
  for (int k = 0; k < 200; ++k) {
    Eigen::Index r = 1 + k % 4, c = 1 + (k / 4) % 4;
    IntMat a = random_matrix(g, r, c);
    SmithForm s = smith_normal_form(a);
    CHECK(equal(IntMat(s.U * a * s.V), s.D));
    CHECK(abs(det_bareiss(s.U)) == 1);
    CHECK(abs(det_bareiss(s.V)) == 1);
    auto d = s.divisors();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) CHECK(d[i + 1] % d[i] == 0);
    // product of the first k divisors equals the k-th determinantal divisor
    auto dd = determinantal_divisors(a);
    REQUIRE(dd.size() == d.size());
    Integer prod = 1;
    for (std::size_t i = 0; i < d.size(); ++i) {
      prod *= d[i];
      CHECK(prod == dd[i]);
    }
  }
}

TEST_CASE("Smith form of the genus-4 polarizations") {
  CHECK(smith_normal_form(standard_symplectic(4)).divisors() == std::vector<Integer>(8, 1));
  CHECK(smith_normal_form(example::j3()).divisors() == std::vector<Integer>{1, 1, 1, 1, 3, 3});
  IntMat b = example::base_change();
  CHECK(det_bareiss(b) == 9);
  CHECK(smith_normal_form(IntMat(IntMat(b.transpose()) * standard_symplectic(4) * b)).divisors() ==
        std::vector<Integer>{1, 1, 1, 1, 3, 3, 3, 3});
}

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
  std::mt19937 g(2);
  for (int k = 0; k < 200; ++k) {
    IntMat a = random_matrix(g, 1 + k % 5, 1 + k % 5);
    CHECK(det_bareiss(a) == det_cofactor(a));
  }
}

TEST_CASE("exact inverse") {
  std::mt19937 g(4);
  for (int k = 0; k < 100; ++k) {
    IntMat a = random_matrix(g, 4, 4);
    DetInverse di = exact_det_inv(a);
    CHECK(di.det == det_cofactor(a));
    if (di.det == 0) {
      CHECK_FALSE(di.inverse);
    } else {
      REQUIRE(di.inverse);
      CHECK(equal(mul(to_rational(a), *di.inverse), identity<Rational>(4)));
    }
  }
}

TEST_CASE("symplectic basis of random alternating forms") {
  std::mt19937 g(5);
  int nondegenerate = 0;
  for (int k = 0; k < 500; ++k) {
    Eigen::Index n = k % 2 == 0 ? 4 : 6;
    IntMat a = random_alternating(g, n);
    if (det_bareiss(a) == 0) {
      CHECK_THROWS_AS(symplectic_basis(AlternatingForm(a)), DegenerateForm);
      continue;
    }
    ++nondegenerate;
    SymplecticBasis sb = symplectic_basis(AlternatingForm(a));
    CHECK(equal(IntMat(IntMat(sb.S.transpose()) * a * sb.S), sb.frobenius()));
    CHECK(abs(det_bareiss(sb.S)) == 1);
    Integer prod = 1;
    for (std::size_t i = 0; i < sb.d.size(); ++i) {
      CHECK(sb.d[i] > 0);
      if (i + 1 < sb.d.size()) CHECK(sb.d[i + 1] % sb.d[i] == 0);
      prod *= sb.d[i];
    }
    // det A = (d_1 ... d_g)^2, and the Smith divisors are the d_i doubled
    CHECK(prod * prod == det_bareiss(a));
    std::vector<Integer> doubled;
    for (const Integer& d : sb.d) doubled.insert(doubled.end(), {d, d});
    CHECK(smith_normal_form(a).divisors() == doubled);
  }
  CHECK(nondegenerate > 200);
}

TEST_CASE("symplectic basis of J3 has type (1,1,3)") {
  SymplecticBasis sb = symplectic_basis(AlternatingForm(example::j3()));
  CHECK(sb.d == std::vector<Integer>{1, 1, 3});
  CHECK_THROWS_AS(AlternatingForm(int_matrix({{1, 0}, {0, 0}})), std::invalid_argument);
}

TEST_CASE("integer kernels are exact and saturated") {
  std::mt19937 g(6);
  for (int k = 0; k < 100; ++k) {
    IntMat a = random_matrix(g, 2 + k % 3, 6);
    IntMat ker = integer_kernel(to_rational(a));
    CHECK(ker.cols() == 6 - rank(to_rational(a)));
    CHECK(is_zero_matrix(IntMat(a * ker)));
    if (ker.cols() > 0) {
      auto d = smith_normal_form(ker).divisors();
      CHECK(d == std::vector<Integer>(static_cast<std::size_t>(ker.cols()), 1));
    }
  }
  RatMat half = from_rows<Rational>({{make_rational(1, 2), make_rational(-1, 2)}});
  IntMat hk = integer_kernel(half);
  CHECK((equal(hk, int_matrix({{1}, {1}})) || equal(hk, int_matrix({{-1}, {-1}}))));
}

TEST_CASE("Hermite form is canonical under unimodular change") {
  std::mt19937 g(8);
  for (int k = 0; k < 100; ++k) {
    IntMat a = random_matrix(g, 5, 3);
    IntMat u = random_unimodular(g, 3);
    CHECK(equal(hermite_normal_form(a), hermite_normal_form(IntMat(a * u))));
    CHECK(same_lattice(a, IntMat(a * u)));
  }
  CHECK_FALSE(same_lattice(int_matrix({{1}, {0}}), int_matrix({{2}, {0}})));
}

TEST_CASE("rational linear systems") {
  std::mt19937 g(9);
  for (int k = 0; k < 100; ++k) {
    RatMat a = to_rational(random_matrix(g, 4, 3));
    Vec<Rational> x = to_rational(random_matrix(g, 3, 1)).col(0);
    Vec<Rational> b = mul(a, RatMat(x)).col(0);
    LinearSolution<Rational> s = solve_linear(a, b);
    REQUIRE(s.status != SolveStatus::none);
    CHECK(equal(RatMat(mul(a, RatMat(s.x))), RatMat(b)));
    if (rank(a) == 3) {
      CHECK(s.status == SolveStatus::unique);
      CHECK(equal(RatMat(s.x), RatMat(x)));
    }
  }
  RatMat a = from_rows<Rational>({{1, 1}, {1, 1}});
  Vec<Rational> b(2);
  b << 1, 2;
  CHECK(solve_linear(a, b).status == SolveStatus::none);
}
