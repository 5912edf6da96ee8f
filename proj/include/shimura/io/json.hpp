#pragma once

#include "shimura/covers/cover.hpp"
#include "shimura/periods/period_matrix.hpp"

#include <json.hpp>

namespace shimura {

using Json = nlohmann::ordered_json;

class JsonFormatError : public std::runtime_error {
 public:
  JsonFormatError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where(where) {}
  std::string where;
};

Json to_json(const Rational& q);  // [num, den]
Json to_json(const TowerElem& x);  // {"c": [4 rationals], "a": [4 rationals]}
Json to_json(const AffineForm& f);  // {"const": ..., "tau": ..., ...} with zero coefficients omitted
Json to_json(const IntMat& m);      // {"rows", "cols", "data"}
Json to_json(const TowerMat& m);
Json to_json(const AffineMat& m);
Json to_json(const PeriodMatrix& p);
Json to_json(const CyclicCoverData& c);

// decimal rendering at the given precision
Json to_decimal_json(const Mat<ComplexBall>& m, mpfr_prec_t prec);

Rational rational_from_json(const Json& j, const std::string& where = "$");
TowerElem tower_from_json(const Json& j, const std::string& where = "$");  // object form or literal string
AffineForm affine_from_json(const Json& j, const std::string& where = "$");
IntMat int_matrix_from_json(const Json& j, const std::string& where = "$");
PeriodMatrix period_matrix_from_json(const Json& j);
CyclicCoverData cover_from_json(const Json& j);

Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace shimura
