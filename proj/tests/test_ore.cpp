#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"

using namespace pcurv;

namespace {
QOp op(const char* s) { return parse_operator(s); }
}  // namespace

TEST_CASE("ore_mul examples") {
  CHECK(op("Dx") * op("x") == op("x*Dx + 1"));
  CHECK(op("Dx - 1") * op("Dx + 1") == op("Dx^2 - 1"));
  QOp lhs = op("Dx^2") * op("1/(1-x)");
  CHECK(lhs == op("1/(1-x)*Dx^2 + 2/(1-x)^2*Dx + 2/(1-x)^3"));
  for (const char* f : {"x", "x^2"}) {
    QRatFun g = parse_ratfun(f);
    CHECK(apply_op(lhs, g) == apply_op(op("Dx^2"), apply_op(op("1/(1-x)"), g)));
  }
}

TEST_CASE("ore ring laws on random operators") {
  oracle::RandomOp gen(17);
  for (int i = 0; i < 40; ++i) {
    QOp a = gen.op(4, 3), b = gen.op(3, 3), c = gen.op(2, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).order() == a.order() + b.order());
  }
}

TEST_CASE("right_divmod examples") {
  auto r = right_divmod(op("Dx^2"), op(oracle::kCatalan));
  CHECK(r.remainder == op("-(2*(5*x-1)/(x*(4*x-1)))*Dx - 2/(x*(4*x-1))"));
  auto e = right_divmod(op("Dx"), op("Dx - 1"));
  CHECK(e.quotient == op("1"));
  CHECK(e.remainder == op("1"));
  CHECK(right_divmod(op("Dx^2"), op(oracle::kLog)).remainder == op("1/(1-x)*Dx"));
  try {
    right_divmod(op("Dx"), QOp(QCtx{}));
    FAIL("expected DivisionByZeroOperator");
  } catch (const MathError& ex) {
    CHECK(ex.kind() == ErrorKind::DivisionByZeroOperator);
  }
}

TEST_CASE("right_divmod round trip and uniqueness") {
  oracle::RandomOp gen(23);
  for (int i = 0; i < 40; ++i) {
    QOp a = gen.op(4, 3), b = gen.op(2, 2);
    auto d = right_divmod(a, b);
    CHECK(d.quotient * b + d.remainder == a);
    CHECK(d.remainder.order() < b.order());
    auto again = right_divmod(d.quotient * b + d.remainder, b);
    CHECK(again.quotient == d.quotient);
    CHECK(again.remainder == d.remainder);
  }
}

TEST_CASE("apply_op") {
  std::vector<Rational> ex;
  Rational f(1);
  for (int k = 0; k < 5; ++k) {
    ex.push_back(f);
    f = f / Rational(k + 1);
  }
  auto r = apply_op(op("Dx - 1"), TruncatedSeries<Rational>(QCtx{}, ex));
  CHECK(r.order() == 4);
  CHECK(r.is_zero());
  std::vector<Rational> cat;
  for (unsigned k = 0; k < 12; ++k) cat.push_back(Rational(binomial(2 * k, k)) / Rational(static_cast<long>(k + 1)));
  CHECK(apply_op(op(oracle::kCatalan), TruncatedSeries<Rational>(QCtx{}, cat)).is_zero());
  CHECK(apply_op(op("Dx^2"), parse_ratfun("x^3")) == parse_ratfun("6*x"));
}

TEST_CASE("apply_op respects products") {
  oracle::RandomOp gen(29);
  for (int i = 0; i < 30; ++i) {
    QOp a = gen.op(2, 2), b = gen.op(2, 2);
    QPoly fd = gen.poly(1, 3);
    if (fd.is_zero()) continue;
    QRatFun f(gen.poly(3, 4), fd);
    CHECK(apply_op(a * b, f) == apply_op(a, apply_op(b, f)));
    std::vector<Rational> cs;
    for (int k = 0; k < 12; ++k) cs.push_back(Rational(k * k - 3 * k + 1));
    TruncatedSeries<Rational> s(QCtx{}, cs);
    bool regular = true;
    for (const auto* o : {&a, &b})
      for (const auto& c : o->coeffs())
        if (c.den().coeff(0).is_zero()) regular = false;
    if (regular) CHECK(apply_op(a * b, s) == apply_op(a, apply_op(b, s)).truncated(12 - a.order() - b.order()));
  }
}

TEST_CASE("reduce_op_mod_p") {
  FpOp c3 = reduce_op_mod_p(op(oracle::kCatalan), 3);
  CHECK(c3.str() == "(x^2 + 2*x)*Dx^2 + (x + 1)*Dx + 2");
  FpOp e5 = reduce_op_mod_p(op(oracle::kExpArctan), 5);
  CHECK(e5.order() == 1);
  CHECK(e5.coeff(0) == -FpRatFun(FpPoly::one(fp_ctx(5)), FpPoly(fp_ctx(5), {Fp(1, 5), Fp(0, 5), Fp(1, 5)})));
  try {
    reduce_op_mod_p(op("1/5*Dx + 1"), 5);
    FAIL("expected BadReduction");
  } catch (const MathError& ex) {
    CHECK(ex.kind() == ErrorKind::BadReduction);
  }
}

TEST_CASE("reduction commutes with product and division") {
  oracle::RandomOp gen(31);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    std::uint64_t p = std::vector<std::uint64_t>{5, 7, 11, 13}[i % 4];
    QOp a = gen.op(3, 2), b = gen.op(2, 2);
    try {
      FpOp ra = reduce_op_mod_p(a, p), rb = reduce_op_mod_p(b, p);
      CHECK(reduce_op_mod_p(a * b, p) == ra * rb);
      auto q = right_divmod(a, b);
      auto fq = right_divmod(ra, rb);
      CHECK(reduce_op_mod_p(q.quotient, p) == fq.quotient);
      // remainder reduction is undefined when its leading coefficient dies mod p
      try {
        FpOp rr = reduce_op_mod_p(q.remainder, p);
        CHECK(rr == fq.remainder);
      } catch (const MathError& e) {
        CHECK(e.kind() == ErrorKind::BadReduction);
      }
      ++checked;
    } catch (const MathError& e) {
      CHECK(e.kind() == ErrorKind::BadReduction);
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("monic") {
  CHECK(op(oracle::kCatalan).monic() == op("Dx^2 + (10*x-2)/(4*x^2-x)*Dx + 2/(4*x^2-x)"));
  CHECK(op("Dx - 1").monic() == op("Dx - 1"));
  CHECK(op("2*x*Dx").monic() == op("Dx"));
}
