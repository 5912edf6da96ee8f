#pragma once

#include "shimura/exactfield/tower.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace shimura {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Expressions over rationals/decimals, zeta, rho, i, alpha, sqrt3 and 3^(k/4)
// with + - * / ^ and parentheses, e.g. "(1/2)+(-1)*zeta^3" or "3^(-1/4)*(zeta^3-2*zeta^2+1)/2".
TowerElem parse_tower(std::string_view text);

// A tower literal, or a decimal pair "re,im" read exactly as re + im*i.
TowerElem parse_complex_value(std::string_view text);

// Expression linear in the named variables; returns (constant, coefficient of each variable).
std::vector<TowerElem> parse_linear(std::string_view text, const std::vector<std::string>& variables);

// Exact rational from "12", "-3/4" or "0.125".
Rational parse_rational(std::string_view text);

}  // namespace shimura
