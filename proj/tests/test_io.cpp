#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shimura/data/genus4.hpp"
#include "shimura/io/json.hpp"
#include "support.hpp"

using namespace shimura;

TEST_CASE("tower elements round trip through JSON") {
  std::mt19937 g(17);
  for (int k = 0; k < 200; ++k) {
    TowerElem x = test::random_elem(g);
    CHECK(tower_from_json(to_json(x)) == x);
    CHECK(tower_from_json(parse_json_text(to_json(x).dump())) == x);
    CHECK(tower_from_json(Json(x.to_string())) == x);
  }
  CHECK(rational_from_json(to_json(make_rational(-7, 3))) == make_rational(-7, 3));
}

TEST_CASE("matrices and period matrices round trip") {
  IntMat j3 = example::j3();
  CHECK(equal(int_matrix_from_json(to_json(j3)), j3));
  PeriodMatrix p(example::genus4_period_matrix(), AlternatingForm(standard_symplectic(4)));
  PeriodMatrix q = period_matrix_from_json(parse_json_text(to_json(p).dump()));
  CHECK(equal(q.entries(), p.entries()));
  CHECK(equal(q.polarization().gram(), p.polarization().gram()));
  CHECK(affine_from_json(Json("3*tau+3")) == parse_affine("3*tau+3"));
  CyclicCoverData c = example::cover();
  CyclicCoverData d = cover_from_json(to_json(c));
  CHECK(d.n() == c.n());
  REQUIRE(d.points().size() == c.points().size());
  for (std::size_t k = 0; k < c.points().size(); ++k) CHECK(d.points()[k].exponent == c.points()[k].exponent);
}

TEST_CASE("malformed input is reported with a location") {
  CHECK_THROWS_AS(parse_json_text("{\"rows\": 2,"), JsonFormatError);
  CHECK_THROWS_AS(int_matrix_from_json(parse_json_text(R"({"rows":2,"cols":2,"data":[[1,2],[3]]})")), JsonFormatError);
  CHECK_THROWS_AS(rational_from_json(parse_json_text("[1, 0]")), JsonFormatError);
  CHECK_THROWS_AS(tower_from_json(Json("zeta +* 2")), JsonFormatError);
  CHECK_THROWS_AS(period_matrix_from_json(parse_json_text(R"({"entries":[["tau","1"],["1"]],"polarization":{"rows":2,"cols":2,"data":[[0,1],[-1,0]]}})")),
                  JsonFormatError);
  CHECK_THROWS_AS(period_matrix_from_json(parse_json_text(R"({"entries":[["tau","1"]],"polarization":{"rows":2,"cols":2,"data":[[0,1],[1,0]]}})")),
                  JsonFormatError);
  try {
    int_matrix_from_json(parse_json_text(R"({"rows":1,"cols":2,"data":[[1,"x"]]})"), "$.m");
    FAIL("accepted a string entry");
  } catch (const JsonFormatError& e) {
    CHECK(e.where.rfind("$.m", 0) == 0);
  }
}

TEST_CASE("decimal rendering of ball matrices") {
  Mat<ComplexBall> m = embed(example::z3special(), 128);
  Json j = to_decimal_json(m, 128);
  CHECK(j.dump().find("rows") != std::string::npos);
}
