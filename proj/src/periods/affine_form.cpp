#include "shimura/periods/affine_form.hpp"

#include "shimura/exactfield/parse.hpp"

#include <sstream>

namespace shimura {

std::string_view param_name(Param p) {
  switch (p) {
    case Param::tau: return "tau";
    case Param::z1: return "z1";
    default: return "z2";
  }
}

std::optional<Param> param_from_name(std::string_view name) {
  for (Param p : kAllParams)
    if (param_name(p) == name) return p;
  return std::nullopt;
}

BallPoint BallPoint::embed(const ExactPoint& p, mpfr_prec_t prec) {
  BallPoint b;
  for (std::size_t k = 0; k < kParamCount; ++k)
    if (p.value[k]) b.value[k] = shimura::embed(*p.value[k], prec);
  return b;
}

AffineForm AffineForm::variable(Param p, const TowerElem& coefficient) {
  AffineForm f;
  f.set_coefficient(p, coefficient);
  return f;
}

std::vector<Param> AffineForm::params() const {
  std::vector<Param> out;
  for (Param p : kAllParams)
    if (!coefficient(p).is_zero()) out.push_back(p);
  return out;
}

bool AffineForm::is_zero() const { return const_.is_zero() && is_constant(); }

bool AffineForm::is_constant() const {
  for (const auto& c : coef_)
    if (!c.is_zero()) return false;
  return true;
}

TowerElem AffineForm::evaluate(const ExactPoint& p) const {
  TowerElem r = const_;
  for (Param q : kAllParams) {
    const TowerElem& c = coefficient(q);
    if (c.is_zero()) continue;
    const auto& v = p.value[static_cast<std::size_t>(q)];
    if (!v) throw std::invalid_argument("no value given for parameter " + std::string(param_name(q)));
    r += c * *v;
  }
  return r;
}

ComplexBall AffineForm::evaluate(const BallPoint& p, mpfr_prec_t prec) const {
  ComplexBall r = embed(const_, prec);
  for (Param q : kAllParams) {
    const TowerElem& c = coefficient(q);
    if (c.is_zero()) continue;
    const auto& v = p.value[static_cast<std::size_t>(q)];
    if (!v) throw std::invalid_argument("no value given for parameter " + std::string(param_name(q)));
    r += embed(c, prec) * *v;
  }
  return r;
}

AffineForm AffineForm::substitute(const ExactPoint& p) const {
  AffineForm r = *this;
  for (Param q : kAllParams) {
    const auto& v = p.value[static_cast<std::size_t>(q)];
    if (!v) continue;
    r.const_ += coefficient(q) * *v;
    r.set_coefficient(q, TowerElem());
  }
  return r;
}

AffineForm AffineForm::operator-() const {
  AffineForm r = *this;
  r.const_ = -r.const_;
  for (auto& c : r.coef_) c = -c;
  return r;
}

AffineForm& AffineForm::operator+=(const AffineForm& o) {
  const_ += o.const_;
  for (std::size_t k = 0; k < kParamCount; ++k) coef_[k] += o.coef_[k];
  return *this;
}

AffineForm& AffineForm::operator-=(const AffineForm& o) {
  const_ -= o.const_;
  for (std::size_t k = 0; k < kParamCount; ++k) coef_[k] -= o.coef_[k];
  return *this;
}

AffineForm& AffineForm::operator*=(const TowerElem& s) {
  const_ *= s;
  for (auto& c : coef_)
    if (!c.is_zero()) c *= s;
  return *this;
}

std::string AffineForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const TowerElem& c, std::string_view name) {
    if (c.is_zero()) return;
    if (!first) os << " + ";
    first = false;
    os << "[" << c.to_string() << "]";
    if (!name.empty()) os << "*" << name;
  };
  term(const_, "");
  for (Param p : kAllParams) term(coefficient(p), param_name(p));
  if (first) return "0";
  return os.str();
}

std::size_t QuadraticForm::slot(Param p, Param q) {
  auto a = static_cast<std::size_t>(p), b = static_cast<std::size_t>(q);
  if (a > b) std::swap(a, b);
  // (0,0) (0,1) (0,2) (1,1) (1,2) (2,2)
  static constexpr std::size_t base[3] = {0, 3, 5};
  return base[a] + (b - a);
}

const TowerElem& QuadraticForm::quadratic(Param p, Param q) const { return quad_[slot(p, q)]; }

bool QuadraticForm::is_zero() const {
  if (!const_.is_zero()) return false;
  for (const auto& c : lin_)
    if (!c.is_zero()) return false;
  for (const auto& c : quad_)
    if (!c.is_zero()) return false;
  return true;
}

QuadraticForm& QuadraticForm::operator+=(const QuadraticForm& o) {
  const_ += o.const_;
  for (std::size_t k = 0; k < kParamCount; ++k) lin_[k] += o.lin_[k];
  for (std::size_t k = 0; k < quad_.size(); ++k) quad_[k] += o.quad_[k];
  return *this;
}

QuadraticForm operator*(const AffineForm& a, const AffineForm& b) {
  QuadraticForm q;
  q.const_ = a.constant() * b.constant();
  for (Param p : kAllParams) {
    const auto k = static_cast<std::size_t>(p);
    if (!a.coefficient(p).is_zero()) q.lin_[k] += a.coefficient(p) * b.constant();
    if (!b.coefficient(p).is_zero()) q.lin_[k] += a.constant() * b.coefficient(p);
    if (a.coefficient(p).is_zero()) continue;
    for (Param r : kAllParams)
      if (!b.coefficient(r).is_zero()) q.quad_[QuadraticForm::slot(p, r)] += a.coefficient(p) * b.coefficient(r);
  }
  return q;
}

QuadraticForm operator*(QuadraticForm a, const TowerElem& s) {
  a.const_ *= s;
  for (auto& c : a.lin_) c *= s;
  for (auto& c : a.quad_) c *= s;
  return a;
}

std::string QuadraticForm::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const TowerElem& c, const std::string& name) {
    if (c.is_zero()) return;
    if (!first) os << " + ";
    first = false;
    os << "[" << c.to_string() << "]";
    if (!name.empty()) os << "*" << name;
  };
  term(const_, "");
  for (Param p : kAllParams) term(linear(p), std::string(param_name(p)));
  for (Param p : kAllParams)
    for (Param r : kAllParams)
      if (static_cast<int>(p) <= static_cast<int>(r))
        term(quadratic(p, r), std::string(param_name(p)) + "*" + std::string(param_name(r)));
  if (first) return "0";
  return os.str();
}

TowerMat evaluate(const AffineMat& m, const ExactPoint& p) {
  TowerMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).evaluate(p);
  return r;
}

Mat<ComplexBall> evaluate(const AffineMat& m, const BallPoint& p, mpfr_prec_t prec) {
  Mat<ComplexBall> r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).evaluate(p, prec);
  return r;
}

AffineMat substitute(const AffineMat& m, const ExactPoint& p) {
  AffineMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).substitute(p);
  return r;
}

Mat<ComplexBall> embed(const TowerMat& m, mpfr_prec_t prec) {
  Mat<ComplexBall> r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = embed(m(i, j), prec);
  return r;
}

TowerMat to_tower(const RatMat& m) {
  TowerMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = TowerElem(m(i, j));
  return r;
}

TowerMat to_tower(const IntMat& m) { return to_tower(to_rational(m)); }

AffineMat to_affine(const TowerMat& m) {
  AffineMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = AffineForm(m(i, j));
  return r;
}

AffineForm parse_affine(std::string_view text) {
  static const std::vector<std::string> names{"tau", "z1", "z2"};
  std::vector<TowerElem> c = parse_linear(text, names);
  AffineForm f(c[0]);
  for (Param p : kAllParams) f.set_coefficient(p, c[static_cast<std::size_t>(p) + 1]);
  return f;
}

namespace {

template <class S, class F>
Mat<S> parse_rows(const std::vector<std::vector<std::string>>& rows, F parse) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r == 0 ? Eigen::Index(0) : static_cast<Eigen::Index>(rows[0].size());
  Mat<S> m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != c)
      throw std::invalid_argument("ragged matrix rows");
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = parse(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return m;
}

}  // namespace

AffineMat parse_affine_rows(const std::vector<std::vector<std::string>>& rows) {
  return parse_rows<AffineForm>(rows, [](const std::string& s) { return parse_affine(s); });
}

TowerMat parse_tower_rows(const std::vector<std::vector<std::string>>& rows) {
  return parse_rows<TowerElem>(rows, [](const std::string& s) { return parse_tower(s); });
}

}  // namespace shimura
