#include "shimura/exactfield/parse.hpp"

#include <cctype>
#include <type_traits>
#include <vector>

namespace shimura {

namespace {

std::string normalize(std::string_view in) {
  // U+2212 minus, U+03B6 zeta, U+03C1 rho
  std::string out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    auto at = [&](std::size_t k) { return static_cast<unsigned char>(in[k]); };
    if (i + 2 < in.size() && at(i) == 0xE2 && at(i + 1) == 0x88 && at(i + 2) == 0x92) {
      out += '-';
      i += 2;
    } else if (i + 1 < in.size() && at(i) == 0xCE && at(i + 1) == 0xB6) {
      out += "zeta";
      ++i;
    } else if (i + 1 < in.size() && at(i) == 0xCF && at(i + 1) == 0x81) {
      out += "rho";
      ++i;
    } else {
      out += in[i];
    }
  }
  return out;
}

// c[0] + sum_k c[k] * var_k
struct Lin {
  std::vector<TowerElem> c;
  Lin(const TowerElem& x = TowerElem()) : c{x} {}
  static Lin variable(std::size_t k) {
    Lin l;
    l.c.resize(k + 1);
    l.c[k] = 1;
    return l;
  }
  bool is_constant() const {
    for (std::size_t k = 1; k < c.size(); ++k)
      if (!c[k].is_zero()) return false;
    return true;
  }
  Lin scaled(const TowerElem& s) const {
    Lin r = *this;
    for (auto& x : r.c) x *= s;
    return r;
  }
  Lin operator-() const { return scaled(TowerElem(-1)); }
  Lin& operator+=(const Lin& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size());
    for (std::size_t k = 0; k < o.c.size(); ++k) c[k] += o.c[k];
    return *this;
  }
  Lin& operator-=(const Lin& o) { return *this += -o; }
};

template <class V>
class Parser {
 public:
  explicit Parser(std::string s, const std::vector<std::string>* vars = nullptr) : s_(std::move(s)), vars_(vars) {}

  V parse() {
    V v = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  V expr() {
    V v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  V term() {
    V v = unary();
    for (;;) {
      if (eat('*')) {
        std::size_t at = pos_;
        v = multiply(v, unary(), at);
      } else if (eat('/')) {
        std::size_t at = pos_;
        TowerElem d = constant_of(unary(), at);
        if (d.is_zero()) throw ParseError("division by zero", at);
        v = multiply(v, V(d.inverse()), at);
      } else {
        return v;
      }
    }
  }

  V unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  V power() {
    std::size_t at = pos_;
    V pbase = primary();
    if (!eat('^')) return pbase;
    TowerElem base = constant_of(pbase, at);
    Rational e = exponent();
    if (is_integer(e)) {
      if (!e.get_num().fits_slong_p()) throw ParseError("exponent too large", at);
      if (base.is_zero() && sgn(e) < 0) throw ParseError("division by zero", at);
      return pow(base, e.get_num().get_si());
    }
    Rational four_e = 4 * e;
    if (base == TowerElem(3) && is_integer(four_e) && four_e.get_num().fits_slong_p())
      return TowerElem::alpha(four_e.get_num().get_si());
    throw ParseError("fractional exponents are only supported on 3 with denominator 4", at);
  }

  Rational exponent() {
    std::size_t at = pos_;
    if (eat('(')) {
      TowerElem e = constant_of(expr(), at);
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      if (!e.is_rational()) throw ParseError("exponent must be rational", at);
      return e.rational_value();
    }
    bool neg = eat('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected exponent", pos_);
    Rational e(Integer(s_.substr(start, pos_ - start), 10));
    return neg ? Rational(-e) : e;
  }

  V primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      V v = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return TowerElem(number());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string id = s_.substr(start, pos_ - start);
      if (id == "zeta") return TowerElem::zeta();
      if (id == "rho") return TowerElem::rho();
      if (id == "i" || id == "I") return TowerElem::imag_unit();
      if (id == "alpha") return TowerElem::alpha();
      if (id == "sqrt3") return TowerElem::sqrt3();
      if constexpr (!std::is_same_v<V, TowerElem>)
        if (vars_)
          for (std::size_t k = 0; k < vars_->size(); ++k)
            if ((*vars_)[k] == id) return V::variable(k + 1);
      throw ParseError("unknown identifier '" + id + "'", start);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  Rational number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    try {
      return parse_rational(s_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      throw ParseError("malformed number", start);
    }
  }

  static TowerElem constant_of(const V& v, std::size_t at) {
    if constexpr (std::is_same_v<V, TowerElem>) {
      return v;
    } else {
      if (!v.is_constant()) throw ParseError("expression must not depend on a variable here", at);
      return v.c[0];
    }
  }
  static V multiply(const V& a, const V& b, std::size_t at) {
    if constexpr (std::is_same_v<V, TowerElem>) {
      return a * b;
    } else {
      if (a.is_constant()) return b.scaled(a.c[0]);
      if (b.is_constant()) return a.scaled(b.c[0]);
      throw ParseError("product of two variable terms", at);
    }
  }

  std::string s_;
  const std::vector<std::string>* vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
  };
  trim(s);
  if (s.empty()) throw ParseError("empty number", 0);
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    i = 1;
  }
  std::string body = s.substr(i);
  auto all_digits = [](const std::string& t) {
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  Rational r;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string n = body.substr(0, slash), d = body.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) throw ParseError("malformed rational", 0);
    r = make_rational(Integer(n, 10), Integer(d, 10));
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || (!fp.empty() && !all_digits(fp))) throw ParseError("malformed decimal", 0);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    r = make_rational(Integer(ip + fp, 10), den);
  } else {
    if (!all_digits(body)) throw ParseError("malformed integer", 0);
    r = Rational(Integer(body, 10));
  }
  return neg ? Rational(-r) : r;
}

TowerElem parse_tower(std::string_view text) { return Parser<TowerElem>(normalize(text)).parse(); }

TowerElem parse_complex_value(std::string_view text) {
  std::string s = normalize(text);
  int depth = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '(') ++depth;
    if (s[k] == ')') --depth;
    if (s[k] == ',' && depth == 0) {
      Rational re, im;
      try {
        re = parse_rational(s.substr(0, k));
      } catch (const ParseError&) {
        throw ParseError("malformed real part", 0);
      }
      try {
        im = parse_rational(s.substr(k + 1));
      } catch (const ParseError&) {
        throw ParseError("malformed imaginary part", k + 1);
      }
      return TowerElem(re) + TowerElem(im) * TowerElem::imag_unit();
    }
  }
  return Parser<TowerElem>(s).parse();
}

std::vector<TowerElem> parse_linear(std::string_view text, const std::vector<std::string>& variables) {
  Lin l = Parser<Lin>(normalize(text), &variables).parse();
  l.c.resize(variables.size() + 1);
  return l.c;
}

}  // namespace shimura
