#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"

#include <algorithm>

using namespace pcurv;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

HypergeomParams hp(std::vector<Rational> up, std::vector<Rational> lo) { return HypergeomParams{std::move(up), std::move(lo)}; }

std::vector<Rational> frac_list(std::vector<long> nums, long den) {
  std::vector<Rational> out;
  for (long n : nums) out.push_back(q(n, den));
  return out;
}

const std::vector<std::uint64_t> kCubicSplit = {59, 101, 167, 173, 211, 223, 271, 307, 317};

}  // namespace

TEST_CASE("order1_char0_classify examples") {
  auto h = order1_char0_classify(parse_ratfun("1/(2*(x-1))"));
  CHECK(h.has_algebraic_solution);
  CHECK(!h.has_rational_solution);
  REQUIRE(h.factors.size() == 1);
  CHECK(h.factors[0].residue == std::optional<Rational>(q(1, 2)));
  QRatFun a = parse_ratfun("3/(x-2) - 1/x");
  auto r = order1_char0_classify(a);
  CHECK(r.has_rational_solution);
  CHECK(r.has_algebraic_solution);
  QRatFun f = parse_ratfun("(x-2)^3/x");
  CHECK(f.derivative() * f.inv() == a);
  auto e = order1_char0_classify(parse_ratfun("1"));
  CHECK(!e.has_algebraic_solution);
  CHECK(!e.has_rational_solution);
  CHECK(!e.vanishes_at_infinity);
  auto dbl = order1_char0_classify(parse_ratfun("1/x^2"));
  CHECK(!dbl.has_algebraic_solution);
  auto irr = order1_char0_classify(parse_ratfun("1/(x^2-2)"));
  CHECK(!irr.has_algebraic_solution);
  auto conj = order1_char0_classify(parse_ratfun("2*x/(x^2-2)"));
  CHECK(conj.has_rational_solution);
}

TEST_CASE("order1 verdict invariants and candidate solutions") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; ++i) {
    QRatFun a = QRatFun(QCtx{});
    std::vector<long> poles;
    int k = 1 + static_cast<int>(rng() % 3);
    std::vector<std::pair<long, Rational>> parts;
    for (int j = 0; j < k; ++j) {
      long c = static_cast<long>(rng() % 9) - 4;
      if (std::find(poles.begin(), poles.end(), c) != poles.end()) continue;
      poles.push_back(c);
      Rational r = q(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 2));
      if (r.is_zero()) continue;
      parts.push_back({c, r});
      a += QRatFun(QPoly::constant(QCtx{}, r), QPoly(QCtx{}, {Rational(-c), Rational(1)}));
    }
    if (i % 5 == 0) a += parse_ratfun("x");
    auto v = order1_char0_classify(a);
    if (v.has_rational_solution) CHECK(v.has_algebraic_solution);
    if (v.has_algebraic_solution) {
      CHECK(v.vanishes_at_infinity);
      for (auto& fct : v.factors) {
        CHECK(fct.multiplicity == 1);
        CHECK(fct.residue_constant);
      }
    }
    if (v.has_rational_solution) {
      // candidate f = prod (x - c)^r, all r integral
      QRatFun f = QRatFun::from_int(QCtx{}, 1);
      for (auto& [c, r] : parts) {
        QRatFun lin(QPoly(QCtx{}, {Rational(-c), Rational(1)}));
        long e = r.num().get_si();
        f *= e >= 0 ? lin.pow(static_cast<unsigned>(e)) : lin.inv().pow(static_cast<unsigned>(-e));
      }
      CHECK(f.derivative() * f.inv() == a);
    }
  }
}

TEST_CASE("order1_charp_has_rational examples") {
  using oracle::rf;
  using oracle::xp;
  CHECK(order1_charp_has_rational(-(xp(13) * xp(13) + rf(13, 1)).inv()));
  CHECK(!order1_charp_has_rational(-(xp(7) * xp(7) + rf(7, 1)).inv()));
  FpRatFun f59 = reduce_mod_p(parse_ratfun("-1/(x^3-x-1)"), 59), f23 = reduce_mod_p(parse_ratfun("-1/(x^3-x-1)"), 23);
  CHECK(order1_charp_has_rational(f59));
  CHECK(!order1_charp_has_rational(f23));
  for (std::uint64_t p : oracle::primes_in(3, 120)) {
    FpRatFun b = reduce_mod_p(parse_ratfun("-1/(x^3-x-1)"), p);
    CHECK(order1_charp_has_rational(b) == oracle::jacobson_order1_zero(-b));
  }
}

TEST_CASE("Honda direction on a random residue corpus") {
  std::mt19937_64 rng(31);
  int cases = 0;
  while (cases < 20) {
    QRatFun a(QCtx{});
    std::vector<long> used;
    for (int j = 0; j < 2; ++j) {
      long c = static_cast<long>(rng() % 11) - 5;
      if (std::find(used.begin(), used.end(), c) != used.end()) continue;
      used.push_back(c);
      Rational r = q(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 4));
      a += QRatFun(QPoly::constant(QCtx{}, r), QPoly(QCtx{}, {Rational(-c), Rational(1)}));
    }
    // irrational residues from u/(x^2 - k) with k a nonsquare
    if (cases % 2 == 1) {
      long k = std::vector<long>{2, 3, 5, 7}[rng() % 4];
      long u = 1 + static_cast<long>(rng() % 3);
      a += parse_ratfun((std::to_string(u) + "/(x^2-" + std::to_string(k) + ")").c_str());
    }
    if (a.is_zero()) continue;
    ++cases;
    bool alg = order1_char0_classify(a).has_algebraic_solution;
    bool all_zero = true;
    int good = 0;
    for (std::uint64_t p : oracle::primes_in(3, 50)) {
      FpRatFun b;
      try {
        b = reduce_mod_p(a, p);
      } catch (const MathError&) {
        continue;
      }
      if (b.den().degree() != a.den().degree()) continue;
      if (poly_gcd(b.den(), b.den().derivative()).degree() > 0) continue;
      ++good;
      all_zero = all_zero && order1_charp_has_rational(-b);
    }
    CHECK(good > 5);
    CHECK_MESSAGE(alg == all_zero, "a = " << a.str());
  }
}

TEST_CASE("hypergeom_classify examples") {
  CHECK(hypergeom_classify(hp({q(1, 2), q(1, 2)}, {q(1)})).verdict == HypergeomClass::Transcendental);
  auto big = hypergeom_classify(hp(frac_list({1, 7, 11, 13, 17, 19, 23, 29}, 30),
                                   {q(1, 5), q(1, 3), q(2, 5), q(1, 2), q(3, 5), q(2, 3), q(4, 5)}));
  CHECK(big.verdict == HypergeomClass::Algebraic);
  CHECK(big.common_denominator == 30);
  CHECK(big.certificates.size() == 8);
  auto g = hypergeom_classify(hp({q(-1, 12), q(1, 4)}, {q(2, 3)}));
  CHECK(g.verdict == HypergeomClass::Algebraic);
  std::vector<long> ells;
  for (auto& c : g.certificates) ells.push_back(c.ell);
  CHECK(ells == std::vector<long>{1, 5, 7, 11});
  try {
    hypergeom_classify(hp({q(1, 2), q(1, 3)}, {q(3, 2)}));
    FAIL("expected Reducible");
  } catch (const MathError& e) {
    CHECK(e.kind() == ErrorKind::Reducible);
  }
  try {
    hypergeom_classify(hp({}, {}));
    FAIL("expected EmptyParams");
  } catch (const MathError& e) {
    CHECK(e.kind() == ErrorKind::EmptyParams);
  }
}

TEST_CASE("hypergeom_classify is permutation invariant") {
  std::mt19937_64 rng(13);
  int decided = 0;
  for (int i = 0; i < 200; ++i) {
    std::size_t s = 1 + rng() % 3;
    std::vector<Rational> up, lo;
    for (std::size_t j = 0; j <= s; ++j) up.push_back(q(1 + static_cast<long>(rng() % 11), 12));
    for (std::size_t j = 0; j < s; ++j) lo.push_back(q(1 + static_cast<long>(rng() % 11), 12));
    std::optional<HypergeomClass> base;
    bool reducible = false;
    try {
      base = hypergeom_classify(hp(up, lo)).verdict;
    } catch (const MathError& e) {
      CHECK(e.kind() == ErrorKind::Reducible);
      reducible = true;
    }
    for (int t = 0; t < 4; ++t) {
      std::shuffle(up.begin(), up.end(), rng);
      std::shuffle(lo.begin(), lo.end(), rng);
      if (reducible) {
        CHECK_THROWS_AS(hypergeom_classify(hp(up, lo)), MathError);
      } else {
        CHECK(hypergeom_classify(hp(up, lo)).verdict == *base);
      }
    }
    if (!reducible) ++decided;
  }
  CHECK(decided > 20);
}

TEST_CASE("grothendieck_scan examples") {
  auto z = grothendieck_scan(parse_operator(oracle::kL4), 6, 99);
  CHECK(z.exceptions == std::vector<std::uint64_t>{7, 31});
  for (auto& e : z.entries) CHECK(e.prime > 5);
  for (std::size_t i = 1; i < z.entries.size(); ++i) CHECK(z.entries[i - 1].prime < z.entries[i].prime);
  auto e = grothendieck_scan(parse_operator("Dx - 1"), 2, 50);
  CHECK(e.entries.size() == 15);
  for (auto& en : e.entries) CHECK(en.status == PCurvStatus::Nonzero);
  auto c = grothendieck_scan(parse_operator(oracle::kCatalan), 2, 5);
  CHECK(c.exceptions.empty());
  CHECK(c.zero == 3);
  // parallel and serial runs agree
  auto serial = grothendieck_scan(parse_operator(oracle::kL4), 6, 99, 1);
  REQUIRE(serial.entries.size() == z.entries.size());
  for (std::size_t i = 0; i < z.entries.size(); ++i) CHECK(serial.entries[i].status == z.entries[i].status);
}

TEST_CASE("scan agrees with the order-1 criterion") {
  oracle::RandomOp gen(41);
  for (int i = 0; i < 15; ++i) {
    QPoly den = gen.poly(1 + i % 3, 4);
    if (den.is_zero() || den.degree() < 1) continue;
    QRatFun b(gen.poly(i % 2, 4), den);
    QOp l(QCtx{}, {b, QRatFun::from_int(QCtx{}, 1)});
    auto rep = grothendieck_scan(l, 2, 60);
    for (auto& e : rep.entries) {
      if (e.status == PCurvStatus::BadReduction) continue;
      CHECK((e.status == PCurvStatus::Zero) == order1_charp_has_rational(reduce_mod_p(b, e.prime)));
    }
  }
}

TEST_CASE("eisenstein_check") {
  std::vector<Rational> cat, ex, lg{Rational(0)};
  Rational f(1);
  for (unsigned k = 0; k < 30; ++k) {
    cat.push_back(Rational(binomial(2 * k, k)) / Rational(static_cast<long>(k + 1)));
    ex.push_back(f.inv());
    f = f * Rational(static_cast<long>(k + 1));
    if (k > 0) lg.push_back(q(-1, static_cast<long>(k)));
  }
  auto c = eisenstein_check(TruncatedSeries<Rational>(QCtx{}, cat), 30, BigInt(1000));
  CHECK(c.pass);
  CHECK(c.n == 1);
  auto e = eisenstein_check(TruncatedSeries<Rational>(QCtx{}, ex), 30, BigInt(1000));
  CHECK(!e.pass);
  CHECK(!e.witnesses.empty());
  // every prime below the truncation divides some k!
  std::vector<BigInt> small;
  for (auto p : oracle::primes_in(2, 29)) small.push_back(BigInt(static_cast<unsigned long>(p)));
  CHECK(e.witnesses == small);
  auto l = eisenstein_check(TruncatedSeries<Rational>(QCtx{}, lg), 30, BigInt(10));
  CHECK(!l.pass);
  // (1-4x)^(1/2): denominators are powers of 2, N = 2 suffices after scaling x
  std::vector<Rational> sq;
  auto s = hypergeom_series(hp({q(-1, 2)}, {}), 20, Rational(4));
  auto h = eisenstein_check(s, 20, BigInt(100));
  CHECK(h.pass);
  (void)sq;
}

TEST_CASE("p_integrality_check") {
  QOp l = parse_operator(oracle::kExpArctan);
  auto p5 = p_integrality_check(l, {Rational(1)}, 5, 200);
  CHECK(p5.pass);
  auto p3 = p_integrality_check(l, {Rational(1)}, 3, 200);
  CHECK(!p3.pass);
  CHECK(p3.first_failure >= 0);
  CHECK(p3.first_failure < 200);
  CHECK(valuation(p3.series[static_cast<std::size_t>(p3.first_failure)], 3) < 0);
  for (long k = 0; k < p3.first_failure; ++k) CHECK(valuation(p3.series[static_cast<std::size_t>(k)], 3) >= 0);
  auto p13 = p_integrality_check(l, {Rational(1)}, 13, 200);
  CHECK(p13.pass);
  // T_n = n! c_n vanishes mod 13 for n >= 13
  CHECK(p13.factorial_scaled_vanishes);
  for (unsigned k = 13; k < 200; ++k) CHECK(reduce_mod_p(p13.series[k] * Rational(factorial(k)), 13).is_zero());
  CHECK(!p3.factorial_scaled_vanishes);
  try {
    p_integrality_check(parse_operator("x*Dx - 1"), {Rational(1)}, 5, 10);
    FAIL("expected NotOrdinaryPoint");
  } catch (const MathError& ex) {
    CHECK(ex.kind() == ErrorKind::NotOrdinaryPoint);
  }
}

TEST_CASE("local_logs_at_zero") {
  CHECK(local_logs_at_zero(parse_operator(oracle::kDiag3)).logs_present);
  auto lg = local_logs_at_zero(parse_operator(oracle::kLegendre));
  CHECK(lg.logs_present);
  REQUIRE(lg.exponents.size() == 1);
  CHECK(lg.exponents[0].multiplicity == 2);
  auto o = local_logs_at_zero(parse_operator("Dx - 1"));
  CHECK(o.ordinary);
  CHECK(!o.logs_present);
  // roots 1 and 2 differ by an integer, yet x and x^2 are both solutions
  CHECK(!local_logs_at_zero(parse_operator("x^2*Dx^2 - 2*x*Dx + 2")).logs_present);
  // roots 0 and 1 with an obstruction: x^2 y'' - x y' + y ... roots coincide at 1
  CHECK(local_logs_at_zero(parse_operator("x^2*Dx^2 - x*Dx + 1")).logs_present);
  try {
    local_logs_at_zero(parse_operator("x^3*Dx^2 + 1"));
    FAIL("expected IrregularSingularPoint");
  } catch (const MathError& e) {
    CHECK(e.kind() == ErrorKind::IrregularSingularPoint);
  }
}

TEST_CASE("no logs when indicial roots are distinct mod Z") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    Rational r1 = q(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 4));
    Rational r2 = q(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 4));
    if ((r1 - r2).is_integer()) continue;
    // x^2 Dx^2 + (1 - r1 - r2) x Dx + r1 r2 + x*c: indicial (s - r1)(s - r2)
    long c = static_cast<long>(rng() % 7) - 3;
    QOp l(QCtx{}, {QRatFun(QPoly(QCtx{}, {r1 * r2, Rational(c)})),
                   QRatFun(QPoly(QCtx{}, {Rational(0), Rational(1) - r1 - r2})),
                   QRatFun(QPoly(QCtx{}, {Rational(0), Rational(0), Rational(1)}))});
    auto res = local_logs_at_zero(l);
    CHECK(!res.logs_present);
    // Frobenius: shifted indicial values never vanish, so each root gives a log-free series
    for (const Rational& r : {r1, r2})
      for (long k = 1; k < 20; ++k) {
        Rational s = r + Rational(k);
        CHECK(!((s - r1) * (s - r2)).is_zero());
      }
  }
}

TEST_CASE("kronecker_scan") {
  auto lin = kronecker_scan(parse_polynomial("x - 3"), 2, 100);
  for (auto& [p, st] : lin.entries) CHECK(st == KroneckerStatus::True);
  auto cub = kronecker_scan(parse_polynomial("x^3 - x - 1"), 2, 319);
  CHECK(cub.true_primes == kCubicSplit);
  for (auto& [p, st] : cub.entries)
    if (p == 23) CHECK(st == KroneckerStatus::Excluded);
  // X^p = X mod (P, p) iff P splits into distinct linear factors mod p
  for (std::uint64_t p : oracle::primes_in(3, 319))
    if (p != 23) CHECK((std::find(kCubicSplit.begin(), kCubicSplit.end(), p) != kCubicSplit.end()) == (oracle::count_roots_mod_p({-1, -1, 0, 1}, p) == 3));
  auto sq = kronecker_scan(parse_polynomial("x^2 - 2"), 3, 100);
  for (auto& [p, st] : sq.entries) {
    bool splits = oracle::count_roots_mod_p({-2, 0, 1}, p) == 2;
    CHECK((st == KroneckerStatus::True) == splits);
    CHECK(splits == (p % 8 == 1 || p % 8 == 7));
  }
}

TEST_CASE("kronecker and p-curvature on the cubic") {
  // residues 1/f'(alpha) of 1/f; mod 3 f' = -1 so every residue is in F_3 although f stays irreducible
  QOp l = parse_operator("Dx - 1/(x^3-x-1)");
  std::vector<std::uint64_t> zero;
  for (std::uint64_t p : oracle::primes_in(2, 319)) {
    if (p == 23) continue;
    if (pcurvature_status(reduce_op_mod_p(l, p)) == PCurvStatus::Zero) zero.push_back(p);
  }
  std::vector<std::uint64_t> expect{3};
  expect.insert(expect.end(), kCubicSplit.begin(), kCubicSplit.end());
  CHECK(zero == expect);
  FpRatFun y = reduce_mod_p(parse_ratfun("1/(x^3-x-1)"), 3);
  CHECK(apply_op(reduce_op_mod_p(l, 3), y).is_zero());
}
