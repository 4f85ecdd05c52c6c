#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"

using namespace pcurv;
using oracle::rf;
using oracle::xp;

namespace {

FpOp fop(const char* s, std::uint64_t p) { return reduce_op_mod_p(parse_operator(s), p); }

FpRFMatrix one_by_one(const FpRatFun& v) {
  FpRFMatrix m(1, 1, v);
  return m;
}

template <class Fn>
void expect_math(ErrorKind k, Fn fn) {
  try {
    fn();
    FAIL("expected " << std::string(error_kind_name(k)));
  } catch (const MathError& e) {
    CHECK(std::string(error_kind_name(e.kind())) == error_kind_name(k));
  }
}

bool in_xp(const FpPoly& f, std::uint64_t p) {
  for (int i = 0; i <= f.degree(); ++i)
    if (i % static_cast<int>(p) != 0 && !f.coeff(i).is_zero()) return false;
  return true;
}

// Y' + B Y = 0 for every column of u
bool columns_solve(const FpOp& l, const FpRFMatrix& u) {
  auto b = companion_matrix(l.monic());
  std::size_t n = u.rows();
  std::uint64_t p = l.ctx().p;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      FpRatFun acc = u(i, j).derivative();
      for (std::size_t t = 0; t < n; ++t) acc = acc + b(i, t) * u(t, j);
      if (!acc.is_zero()) return false;
    }
  (void)p;
  return true;
}

}  // namespace

TEST_CASE("companion_matrix") {
  auto b = companion_matrix(parse_operator("Dx + 1/(x-3)"));
  REQUIRE(b.rows() == 1);
  CHECK(b(0, 0) == parse_ratfun("1/(x-3)"));
  auto c = companion_matrix(parse_operator(oracle::kCatalan).monic());
  CHECK(c(0, 0).is_zero());
  CHECK(c(0, 1) == parse_ratfun("-1"));
  CHECK(c(1, 0) == parse_ratfun("2/(4*x^2-x)"));
  CHECK(c(1, 1) == parse_ratfun("(10*x-2)/(4*x^2-x)"));
  auto d2 = companion_matrix(parse_operator("Dx^2"));
  CHECK(d2(0, 1) == parse_ratfun("-1"));
  CHECK(d2(0, 0).is_zero());
  CHECK(d2(1, 0).is_zero());
  CHECK(d2(1, 1).is_zero());
  // Y = (y, y') with y = x^2: Y' + BY reproduces (0, L(y)/lc)
  QRatFun y = parse_ratfun("x^2");
  QOp cat = parse_operator(oracle::kCatalan);
  QRatFun second = y.derivative().derivative() + c(1, 0) * y + c(1, 1) * y.derivative();
  CHECK(second == apply_op(cat, y) * cat.lc().inv());
}

TEST_CASE("pcurvature_recurrence examples") {
  auto m3 = pcurvature_recurrence(fop(oracle::kExpArctan, 3));
  CHECK(m3.entries(0, 0) == rf(3, -2) * (xp(3) * xp(3) + rf(3, 1)).pow(3).inv());
  CHECK(pcurvature_recurrence(fop(oracle::kExpArctan, 5)).is_zero());
  auto e = pcurvature_recurrence(fop("Dx - 1", 3));
  CHECK(e.entries(0, 0) == rf(3, -1));
  CHECK(e.entries(0, 0) == pcurvature_order1_closed_form(rf(3, -1)));
}

TEST_CASE("pcurvature_order1_closed_form examples") {
  FpRatFun b = -(xp(3) * xp(3) + rf(3, 1)).inv();
  CHECK(pcurvature_order1_closed_form(b) == rf(3, -2) * (xp(3) * xp(3) + rf(3, 1)).pow(3).inv());
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL})
    for (long long n = 0; n < static_cast<long long>(p); ++n) {
      FpRatFun res = rf(p, n) * (xp(p) - rf(p, 4)).inv();
      CHECK(pcurvature_order1_closed_form(res).is_zero());
    }
  FpRatFun dbl = (xp(3) - rf(3, 1)).pow(2).inv();
  FpRatFun out = pcurvature_order1_closed_form(dbl);
  CHECK(!out.is_zero());
  CHECK(out == dbl.derivative().derivative() + dbl.pow(3));
}

TEST_CASE("pcurvature_via_remainders examples") {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) CHECK(pcurvature_via_remainders(fop(oracle::kCatalan, p)).is_zero());
  CHECK(pcurvature_via_remainders(fop(oracle::kL2r, 5)).is_zero());
  FpOp l3 = fop(oracle::kL2r, 3);
  CHECK(!pcurvature_via_remainders(l3).is_zero());
  CHECK(remainder_of_d_power(l3, 3) == fop("-(2/(x*(x-1)))*Dx - 1/((x-1)^2*x)", 3));
  CHECK(oracle::naive_remainder(l3, 3) == remainder_of_d_power(l3, 3));
}

TEST_CASE("pcurvature_local_series_crt examples") {
  FpOp ea = fop(oracle::kExpArctan, 5);
  // 2^2 + 1 = 0 in F_5, so the point 2 is a pole
  expect_math(ErrorKind::PoleAtSamplePoint, [&] { pcurvature_local_series_crt(ea, std::vector<std::uint64_t>{0, 1, 2}); });
  CHECK(pcurvature_local_series_crt(ea, std::vector<std::uint64_t>{0, 1, 4}).is_zero());
  CHECK(pcurvature_local_series_crt(ea).is_zero());
  expect_math(ErrorKind::NotEnoughSamplePoints, [&] { pcurvature_local_series_crt(ea, std::vector<std::uint64_t>{0}); });
  auto e = pcurvature_local_series_crt(fop("Dx - 1", 3), std::vector<std::uint64_t>{0});
  CHECK(e.entries(0, 0) == rf(3, -1));
  oracle::RandomOp gen(77);
  int done = 0;
  for (int i = 0; i < 40 && done < 5; ++i) {
    QOp q = gen.op(2, 1);
    if (q.order() != 2) continue;
    FpOp l;
    try {
      l = reduce_op_mod_p(q, 7);
      auto crt = pcurvature_local_series_crt(l);
      CHECK(crt.entries == pcurvature_recurrence(l).entries);
      ++done;
    } catch (const MathError&) {
    }
  }
  CHECK(done == 5);
}

TEST_CASE("pcurvature_charpoly examples") {
  PCurvatureMatrix z;
  z.prime = 5;
  z.entries = FpRFMatrix(2, 2, rf(5, 0));
  auto cz = pcurvature_charpoly(z);
  REQUIRE(cz.size() == 3);
  CHECK(cz[0].is_zero());
  CHECK(cz[1].is_zero());
  CHECK(cz[2].is_one());
  auto c3 = pcurvature_charpoly(pcurvature_recurrence(fop(oracle::kExpArctan, 3)));
  REQUIRE(c3.size() == 2);
  CHECK(c3[0] == rf(3, 2) * (xp(3) * xp(3) + rf(3, 1)).pow(3).inv());
  CHECK(in_xp(c3[0].den(), 3));
  CHECK(c3[0].den() == xp(3).pow(6).num() + FpPoly::one(fp_ctx(3)));
  auto cc = pcurvature_charpoly(pcurvature_recurrence(fop(oracle::kCatalan, 5)));
  CHECK(cc[0].is_zero());
  CHECK(cc[1].is_zero());
}

TEST_CASE("cartier_test examples") {
  auto r = cartier_test(fop(oracle::kCatalan, 5));
  CHECK(r.status == PCurvStatus::Zero);
  CHECK(r.basis.size() == 2);
  CHECK(r.degree_bound == 10);
  for (auto& b : r.basis) {
    CHECK(b.degree() < 10);
    CHECK(apply_op(fop(oracle::kCatalan, 5), FpRatFun(b)).is_zero());
  }
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 13ULL}) {
    auto lg = cartier_test(fop(oracle::kLog, p));
    CHECK(lg.status != PCurvStatus::Zero);
    FpRatFun w = -(rf(p, 1) - xp(p)).pow(static_cast<unsigned>(p - 1)).inv();
    CHECK(lg.remainder == FpOp(fp_ctx(p), {rf(p, 0), w}));
  }
  auto e = cartier_test(fop("Dx - 1", 7));
  CHECK(e.status == PCurvStatus::Nonzero);
  CHECK(e.remainder == fop("1", 7));
}

TEST_CASE("fundamental_matrix_at") {
  // Dx - n: b_p = (-n)^p = -n, never zero
  for (long n : {1L, 2L, 4L}) {
    std::string s = "Dx - " + std::to_string(n);
    FpOp l = fop(s.c_str(), 7);
    CHECK(!cartier_test(l).matrix.is_zero());
    expect_math(ErrorKind::NonzeroPCurvature, [&] { fundamental_matrix_at(l, 0); });
  }
  // Dx - n/x has residue n in F_p, so zero p-curvature; base point 1
  for (long n : {1L, 2L, 3L}) {
    std::string s = "Dx - " + std::to_string(n) + "/x";
    FpOp l = fop(s.c_str(), 5);
    auto u = fundamental_matrix_at(l, 1);
    CHECK(u(0, 0).eval(Fp(1, 5)).is_one());
    CHECK(columns_solve(l, u));
    expect_math(ErrorKind::PoleAtBasePoint, [&] { fundamental_matrix_at(l, 0); });
  }
  auto triv = fundamental_matrix_at(fop("Dx", 5), 3);
  CHECK(triv(0, 0).is_one());
  FpOp d2 = fop("Dx^2", 5);
  auto u = fundamental_matrix_at(d2, 1);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(u(i, j).eval(Fp(1, 5)) == Fp(i == j ? 1 : 0, 5));
  CHECK(columns_solve(d2, u));
  FpOp cat = fop(oracle::kCatalan, 7);
  auto uc = fundamental_matrix_at(cat, 3);
  CHECK(columns_solve(cat, uc));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(uc(i, j).eval(Fp(3, 7)) == Fp(i == j ? 1 : 0, 7));
}

TEST_CASE("hurwitz series") {
  auto s = hurwitz_fundamental_solution(fop("Dx - 1", 3), 6);
  REQUIRE(s.rows() == 1);
  REQUIRE(s(0, 0).order() == 6);
  for (std::size_t k = 0; k < 6; ++k) CHECK(s(0, 0)[k].is_one());
  CHECK(hurwitz_relation_holds(fop("Dx - 1", 3), s));
  auto c = hurwitz_fundamental_solution(fop("Dx", 7), 14);
  CHECK(c(0, 0)[0].is_one());
  for (std::size_t k = 1; k < 14; ++k) CHECK(c(0, 0)[k].is_zero());
  FpOp o2 = fop("Dx^2 + (x+1)*Dx + 3*x^2", 5);
  CHECK(hurwitz_relation_holds(o2, hurwitz_fundamental_solution(o2, 15)));
  expect_math(ErrorKind::PoleAtOrigin, [] { hurwitz_fundamental_solution(fop("Dx - 1/x", 5), 10); });
}

TEST_CASE("hurwitz ring laws") {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
    const std::size_t t = 3 * p;
    for (std::size_t m = 0; m < t; ++m)
      for (std::size_t n = 0; m + n < t; ++n) {
        HurwitzSeries a(p, t), b(p, t);
        a[m] = Fp(1, p);
        b[n] = Fp(1, p);
        HurwitzSeries prod = a * b;
        CHECK(prod[m + n] == binomial_mod_p(m + n, m, p));
        CHECK(prod[m + n] == reduce_mod_p(Rational(binomial(static_cast<unsigned>(m + n), static_cast<unsigned>(m))), p));
      }
    std::mt19937_64 rng(p);
    for (int i = 0; i < 20; ++i) {
      HurwitzSeries f(p, t), g(p, t);
      for (std::size_t k = 0; k < t; ++k) {
        f[k] = Fp::raw(rng() % p, p);
        g[k] = Fp::raw(rng() % p, p);
      }
      HurwitzSeries lhs = (f * g).derivative(), rhs = f.derivative() * g + f * g.derivative();
      for (std::size_t k = 0; k + 1 < t; ++k) CHECK(lhs[k] == rhs[k]);
    }
  }
}

TEST_CASE("order1_series_congruence") {
  FpRatFun b5 = -(xp(5) * xp(5) + rf(5, 1)).inv();
  CHECK(order1_series_congruence(b5, 20).holds);
  FpRatFun b3 = -(xp(3) * xp(3) + rf(3, 1)).inv();
  auto r = order1_series_congruence(b3, 20);
  CHECK(!r.holds);
  CHECK(r.first_failure >= 0);
  CHECK(order1_series_congruence(rf(7, 0), 20).holds);
  expect_math(ErrorKind::PoleAtOrigin, [] { order1_series_congruence(xp(5).inv(), 5); });
}

TEST_CASE("char0_series_relations") {
  auto e = char0_series_relations(parse_operator("Dx - 1"), 3, 10);
  CHECK(e.sp_available);
  CHECK(e.s_p(0, 0) == Rational(BigInt(1), BigInt(6)));
  CHECK(e.bp_at_zero(0, 0) == Rational(-1));
  CHECK(e.sign == -1);
  CHECK(e.congruence_holds);
  auto h = char0_series_relations(parse_operator("Dx - 1/(2*(x-1))"), 5, 15);
  CHECK(h.pcurvature_zero);
  CHECK(h.strong_bound_checked);
  CHECK(h.strong_bound_holds);
  CHECK(h.weak_bound_holds);
  auto t = char0_series_relations(parse_operator("Dx"), 7, 14);
  CHECK(t.pcurvature_zero);
  CHECK(t.weak_bound_holds);
  CHECK(t.strong_bound_holds);
  for (std::size_t i = 1; i < t.valuations.size(); ++i) CHECK(t.valuations[i] >= 0);
  expect_math(ErrorKind::PoleAtOrigin, [] { char0_series_relations(parse_operator("Dx - 1/x"), 5, 10); });
  expect_math(ErrorKind::BadReduction, [] { char0_series_relations(parse_operator("Dx - 1/5"), 5, 10); });
}

TEST_CASE("weak valuation bound on random operators") {
  oracle::RandomOp gen(101);
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    QOp q = gen.op(2, 2);
    std::uint64_t p = std::vector<std::uint64_t>{3, 5, 7}[i % 3];
    try {
      auto r = char0_series_relations(q, p, 3 * p);
      CHECK(r.weak_bound_holds);
      if (r.pcurvature_zero) CHECK(r.strong_bound_holds);
      if (r.sp_available && p % 2 == 1) CHECK(r.congruence_holds);
      ++checked;
    } catch (const MathError&) {
    }
  }
  CHECK(checked > 15);
}

TEST_CASE("property corpus: algorithms, charpoly field, entry shape, cartier") {
  oracle::RandomOp gen(2024);
  int accepted = 0;
  for (int i = 0; i < 160; ++i) {
    std::uint64_t p = std::vector<std::uint64_t>{3, 5, 7, 11}[i % 4];
    QOp q = gen.op(3, 3);
    FpOp l;
    CommonDenominatorForm form;
    try {
      l = reduce_op_mod_p(q, p);
      form = common_denominator_form(l);
    } catch (const MathError&) {
      continue;
    }
    auto rec = pcurvature_recurrence(l);
    CHECK(rec.entries == oracle::katz_pcurvature(l));
    CHECK(pcurvature_via_remainders(l).entries == rec.entries);
    try {
      auto crt = pcurvature_local_series_crt(l);
      CHECK(crt.entries == rec.entries);
    } catch (const MathError& e) {
      CHECK((e.kind() == ErrorKind::NotEnoughSamplePoints || e.kind() == ErrorKind::PoleAtSamplePoint));
    }
    if (l.order() == 1) CHECK(rec.entries(0, 0) == pcurvature_order1_closed_form(l.monic().coeff(0)));
    for (auto& c : pcurvature_charpoly(rec)) {
      CHECK(in_xp(c.num(), p));
      CHECK(in_xp(c.den(), p));
    }
    FpPoly fp = form.f.pow(static_cast<unsigned>(p));
    for (std::size_t a = 0; a < rec.entries.rows(); ++a)
      for (std::size_t b = 0; b < rec.entries.cols(); ++b) {
        FpRatFun scaled = rec.entries(a, b) * FpRatFun(fp);
        CHECK(scaled.is_polynomial());
        CHECK(scaled.num().degree() <= form.d * static_cast<int>(p));
      }
    auto rep = cartier_test(l);
    bool zero_rem = oracle::naive_remainder(l, p).is_zero();
    CHECK((rep.status == PCurvStatus::Zero) == rec.is_zero());
    CHECK(zero_rem == rec.is_zero());
    auto sols = polynomial_solutions(l, std::max(form.d, 1) * static_cast<int>(p));
    bool full = oracle::wronskian_rank(independent_over_frobenius(sols, l.order()), l.order(), p) == l.order();
    CHECK_MESSAGE(full == rec.is_zero(), "p=" << p << " L=" << q.str() << " sols=" << sols.size() << " chosen=" << independent_over_frobenius(sols, l.order()).size() << " rankall=" << oracle::wronskian_rank(sols, l.order(), p));
    if (rep.status == PCurvStatus::Zero) {
      auto u = fundamental_matrix_at(l, [&] {
        for (std::uint64_t a = 0; a < p; ++a)
          if (!form.f.eval(Fp(static_cast<long long>(a), p)).is_zero()) return a;
        return std::uint64_t{0};
      }());
      CHECK(columns_solve(l, u));
    }
    ++accepted;
  }
  CHECK(accepted > 80);
}
