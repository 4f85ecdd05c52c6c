#pragma once

#include <string>
#include <vector>

#include "pcurv/algebraic.hpp"
#include "pcurv/diffop.hpp"

namespace pcurv {

// Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' uint)?
//   base   := '(' expr ')' | 'x' | 'Dx' | int | '-' factor
QOp parse_operator(const std::string& text);
QRatFun parse_ratfun(const std::string& text);
QPoly parse_polynomial(const std::string& text);
// Same grammar over the variables x, y, z (no Dx).
MultiRatFun parse_multi_ratfun(const std::string& text);
MultiPoly parse_multi_poly(const std::string& text);

Rational parse_rational(const std::string& text);
// Comma separated rationals, e.g. "1/2,-1/3".
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace pcurv
