#include "shimura/io/json.hpp"

#include "shimura/exactfield/parse.hpp"

#include <fstream>
#include <sstream>

namespace shimura {

namespace {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
    }
  }
  throw JsonFormatError(where, "expected an integer");
}

template <class S, class F>
Json matrix_json(const Mat<S>& m, F entry) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(entry(m(i, j)));
    data.push_back(row);
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

template <class S, class F>
Mat<S> matrix_from_json(const Json& j, const std::string& where, F entry) {
  if (!j.is_object() || !j.contains("data")) throw JsonFormatError(where, "expected {\"rows\",\"cols\",\"data\"}");
  const Json& data = j.at("data");
  if (!data.is_array()) throw JsonFormatError(where + ".data", "expected an array of rows");
  const auto rows = static_cast<Eigen::Index>(data.size());
  const Eigen::Index cols = rows == 0 ? 0 : static_cast<Eigen::Index>(data[0].size());
  if (j.contains("rows") && j.at("rows") != rows) throw JsonFormatError(where + ".rows", "does not match data");
  if (j.contains("cols") && j.at("cols") != cols) throw JsonFormatError(where + ".cols", "does not match data");
  Mat<S> m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = data[static_cast<std::size_t>(r)];
    std::string rw = where + ".data[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw JsonFormatError(rw, "ragged row");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = entry(row[static_cast<std::size_t>(c)], rw + "[" + std::to_string(c) + "]");
  }
  return m;
}

}  // namespace

Json to_json(const Rational& q) { return Json::array({integer_json(q.get_num()), integer_json(q.get_den())}); }

Json to_json(const TowerElem& x) {
  Json c = Json::array(), a = Json::array();
  for (int k = 0; k < 4; ++k) {
    c.push_back(to_json(x.base()[k]));
    a.push_back(to_json(x.alpha_part()[k]));
  }
  return Json{{"c", c}, {"a", a}};
}

Json to_json(const AffineForm& f) {
  Json j{{"const", to_json(f.constant())}};
  for (Param p : kAllParams)
    if (!f.coefficient(p).is_zero()) j[std::string(param_name(p))] = to_json(f.coefficient(p));
  return j;
}

Json to_json(const IntMat& m) {
  return matrix_json(m, [](const Integer& z) { return integer_json(z); });
}

Json to_json(const TowerMat& m) {
  return matrix_json(m, [](const TowerElem& x) { return to_json(x); });
}

Json to_json(const AffineMat& m) {
  return matrix_json(m, [](const AffineForm& f) { return to_json(f); });
}

Json to_json(const PeriodMatrix& p) {
  Json params = Json::array();
  for (Param q : p.params()) params.push_back(std::string(param_name(q)));
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < p.entries().rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < p.entries().cols(); ++j) row.push_back(to_json(p.entries()(i, j)));
    entries.push_back(row);
  }
  return Json{{"g", p.genus()}, {"params", params}, {"entries", entries}, {"polarization", to_json(p.polarization().gram())}};
}

Json to_json(const CyclicCoverData& c) {
  Json ex = Json::array();
  for (const BranchPoint& b : c.points()) ex.push_back(Json::array({b.label, b.exponent}));
  return Json{{"n", c.n()}, {"exponents", ex}};
}

Json to_decimal_json(const Mat<ComplexBall>& m, mpfr_prec_t prec) {
  const int digits = decimal_digits(prec);
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(Json::array({m(i, j).real().mid_string(digits), m(i, j).imag().mid_string(digits)}));
    data.push_back(row);
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"precision_bits", prec}, {"data", data}};
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_array() && j.size() == 2) {
    Integer n = integer_from_json(j[0], where + "[0]");
    Integer d = integer_from_json(j[1], where + "[1]");
    if (sgn(d) == 0) throw JsonFormatError(where, "zero denominator");
    return make_rational(n, d);
  }
  if (j.is_number_integer()) return Rational(Integer(j.get<long>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw JsonFormatError(where, e.what());
    }
  }
  throw JsonFormatError(where, "expected a rational [num, den]");
}

TowerElem tower_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_tower(j.get<std::string>());
    } catch (const ParseError& e) {
      throw JsonFormatError(where, e.what());
    }
  }
  if (j.is_number_integer()) return TowerElem(j.get<long>());
  if (!j.is_object()) throw JsonFormatError(where, "expected a tower element");
  CycloElem base, alpha;
  for (const char* key : {"c", "a"}) {
    if (!j.contains(key)) continue;
    const Json& arr = j.at(key);
    std::string w = where + "." + key;
    if (!arr.is_array() || arr.size() != 4) throw JsonFormatError(w, "expected 4 rationals");
    std::array<Rational, 4> c;
    for (std::size_t k = 0; k < 4; ++k) c[k] = rational_from_json(arr[k], w + "[" + std::to_string(k) + "]");
    (key[0] == 'c' ? base : alpha) = CycloElem(c);
  }
  return TowerElem(base, alpha);
}

AffineForm affine_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_affine(j.get<std::string>());
    } catch (const ParseError& e) {
      throw JsonFormatError(where, e.what());
    }
  }
  if (!j.is_object()) throw JsonFormatError(where, "expected an affine form");
  AffineForm f;
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string w = where + "." + it.key();
    if (it.key() == "const") {
      f.set_constant(tower_from_json(it.value(), w));
    } else if (auto p = param_from_name(it.key())) {
      f.set_coefficient(*p, tower_from_json(it.value(), w));
    } else {
      throw JsonFormatError(w, "unknown parameter");
    }
  }
  return f;
}

IntMat int_matrix_from_json(const Json& j, const std::string& where) {
  return matrix_from_json<Integer>(j, where, [](const Json& e, const std::string& w) { return integer_from_json(e, w); });
}

PeriodMatrix period_matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("entries") || !j.contains("polarization"))
    throw JsonFormatError("$", "expected {\"entries\", \"polarization\"}");
  const Json& e = j.at("entries");
  if (!e.is_array() || e.empty()) throw JsonFormatError("$.entries", "expected rows");
  const auto rows = static_cast<Eigen::Index>(e.size());
  const auto cols = static_cast<Eigen::Index>(e[0].size());
  AffineMat m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    std::string w = "$.entries[" + std::to_string(r) + "]";
    const Json& row = e[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw JsonFormatError(w, "ragged row");
    for (Eigen::Index c = 0; c < cols; ++c)
      m(r, c) = affine_from_json(row[static_cast<std::size_t>(c)], w + "[" + std::to_string(c) + "]");
  }
  if (j.contains("g") && j.at("g") != rows) throw JsonFormatError("$.g", "does not match entries");
  IntMat pol = int_matrix_from_json(j.at("polarization"), "$.polarization");
  try {
    return PeriodMatrix(m, AlternatingForm(pol));
  } catch (const std::invalid_argument& ex) {
    throw JsonFormatError("$", ex.what());
  }
}

CyclicCoverData cover_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("exponents"))
    throw JsonFormatError("$", "expected {\"n\", \"exponents\"}");
  if (!j.at("n").is_number_integer()) throw JsonFormatError("$.n", "expected an integer");
  std::vector<BranchPoint> pts;
  const Json& ex = j.at("exponents");
  if (!ex.is_array()) throw JsonFormatError("$.exponents", "expected an array");
  for (std::size_t k = 0; k < ex.size(); ++k) {
    std::string w = "$.exponents[" + std::to_string(k) + "]";
    const Json& p = ex[k];
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_number_integer())
      throw JsonFormatError(w, "expected [label, exponent]");
    pts.push_back({p[0].get<std::string>(), p[1].get<int>()});
  }
  return CyclicCoverData::from_points(j.at("n").get<int>(), pts);
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw JsonFormatError("byte " + std::to_string(e.byte), "malformed JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonFormatError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json_text(ss.str());
  } catch (const JsonFormatError& e) {
    throw JsonFormatError(path + " " + e.where, "malformed JSON");
  }
}

}  // namespace shimura
