#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"

using namespace pcurv;

namespace {

void expect_parse_error(const std::string& text, ParseErrorKind kind, std::size_t pos) {
  try {
    parse_operator(text);
    FAIL("parsed: " << text);
  } catch (const ParseError& e) {
    CHECK_MESSAGE(e.kind() == kind, text);
    CHECK_MESSAGE(e.position() == pos, text << " at " << e.position());
  }
}

}  // namespace

TEST_CASE("parse_operator examples") {
  QOp cat = parse_operator(oracle::kCatalan);
  CHECK(cat.order() == 2);
  CHECK(cat.coeff(2) == QRatFun(QPoly(QCtx{}, {Rational(0), Rational(-1), Rational(4)})));
  CHECK(cat.coeff(1) == QRatFun(QPoly(QCtx{}, {Rational(-2), Rational(10)})));
  CHECK(cat.coeff(0) == QRatFun::from_int(QCtx{}, 2));
  QOp ea = parse_operator("Dx - 1/(x^2+1)");
  CHECK(ea.order() == 1);
  CHECK(ea.coeff(0) == -QRatFun(QPoly::one(QCtx{}), QPoly(QCtx{}, {Rational(1), Rational(0), Rational(1)})));
  QOp dx = QOp::d(QCtx{}), x = QOp::from_ratfun(QRatFun::x(QCtx{}));
  CHECK(parse_operator("Dx*x") == x * dx + QOp::from_ratfun(QRatFun::from_int(QCtx{}, 1)));
  CHECK(parse_operator("Dx^2*x^2") == dx * dx * x * x);
  CHECK(parse_operator("-(x)*-Dx") == x * dx);
  CHECK(parse_operator("123456789012345678901234567890*Dx").coeff(1) ==
        QRatFun::constant(QCtx{}, Rational(BigInt("123456789012345678901234567890"))));
  CHECK(parse_operator("  x  *  Dx ") == x * dx);
}

TEST_CASE("integer literals are decimal") {
  CHECK(parse_operator("010*x") == parse_operator("10*x"));
  CHECK(parse_operator("09") == parse_operator("9"));
}

TEST_CASE("oversized expressions are refused quickly") {
  for (const char* t : {"(99^9999)^9999", "(x+1)^50000", "Dx^500*x^500", "(x*Dx)^1000", "x^100000*x^100000"}) {
    try {
      parse_operator(t);
      FAIL("accepted " << t);
    } catch (const ParseError& e) {
      CHECK(e.kind() == ParseErrorKind::SyntaxError);
    }
  }
  CHECK(parse_operator("(x+1)^500").coeff(0).num().degree() == 500);
}

TEST_CASE("other parsers") {
  CHECK(parse_ratfun("(x^2-1)/(x-1)") == parse_ratfun("x+1"));
  CHECK(parse_polynomial("x^3 - x - 1").degree() == 3);
  CHECK(parse_rational("-6/4") == Rational(BigInt(-3), BigInt(2)));
  CHECK(parse_rational_list("1/2, -1/12,3") == std::vector<Rational>{Rational(BigInt(1), BigInt(2)), Rational(BigInt(-1), BigInt(12)), Rational(3)});
  CHECK_THROWS_AS(parse_ratfun("Dx"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/x"), ParseError);
  auto m = parse_multi_poly("x*y^2 - y + 1");
  CHECK(m.degree_in(1) == 2);
  CHECK(m.degree_in(0) == 1);
}

TEST_CASE("parse errors carry kind and position") {
  expect_parse_error("x +", ParseErrorKind::SyntaxError, 3);
  expect_parse_error("(x", ParseErrorKind::SyntaxError, 2);
  expect_parse_error("2x", ParseErrorKind::SyntaxError, 1);
  expect_parse_error("x ? 1", ParseErrorKind::SyntaxError, 2);
  expect_parse_error("x^(1/2)", ParseErrorKind::NonpolynomialExponent, 2);
  expect_parse_error("x^-1", ParseErrorKind::NonpolynomialExponent, 2);
  expect_parse_error("1/(Dx+1)", ParseErrorKind::DxInDenominator, 2);
  expect_parse_error("x/Dx", ParseErrorKind::DxInDenominator, 2);
  CHECK_THROWS_AS(parse_operator("1/(x-x)"), MathError);
}

TEST_CASE("print then parse is stable") {
  oracle::RandomOp gen(99);
  for (int i = 0; i < 100; ++i) {
    QOp l = gen.op(4, 3);
    QPoly d = gen.poly(2, 3);
    if (!d.is_zero()) l = l * QOp::from_ratfun(QRatFun(QPoly::one(QCtx{}), d));
    QOp back = parse_operator(l.str());
    CHECK(back == l);
    CHECK(parse_operator(back.str()) == back);
    CHECK(back.str() == l.str());
  }
  for (const char* t : {oracle::kCatalan, oracle::kL4, oracle::kTrident, oracle::kEuler}) {
    QOp l = parse_operator(t);
    CHECK(parse_operator(l.str()) == l);
  }
  FpOp f = reduce_op_mod_p(parse_operator(oracle::kCatalan), 7);
  CHECK(reduce_op_mod_p(parse_operator(f.str()), 7) == f);
}

TEST_CASE("fuzzed input only raises documented errors") {
  const std::string alphabet = "xD()+-*/^0123456789 x";
  std::mt19937_64 rng(4242);
  int parsed = 0, parse_errors = 0, math_errors = 0;
  for (int i = 0; i < 20000; ++i) {
    std::string s;
    std::size_t len = rng() % 14;
    for (std::size_t k = 0; k < len; ++k) {
      if (rng() % 5 == 0)
        s += "Dx";
      else
        s += alphabet[rng() % alphabet.size()];
    }
    try {
      parse_operator(s);
      ++parsed;
    } catch (const ParseError& e) {
      CHECK(e.position() <= s.size());
      ++parse_errors;
    } catch (const MathError& e) {
      CHECK(e.kind() == ErrorKind::DivisionByZero);
      ++math_errors;
    }
  }
  CHECK(parsed > 100);
  CHECK(parse_errors > 100);
}
