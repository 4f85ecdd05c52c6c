#include "pcurv/reduce.hpp"

namespace pcurv {

Fp reduce_mod_p(const Rational& q, std::uint64_t p) {
  std::uint64_t d = mod_u(q.den(), p);
  if (d == 0)
    throw MathError(ErrorKind::BadReduction, "denominator of " + q.str() + " vanishes mod " + std::to_string(p));
  return Fp::raw(mod_u(q.num(), p), p) / Fp::raw(d, p);
}

FpPoly reduce_mod_p(const QPoly& f, std::uint64_t p) {
  std::vector<Fp> cs;
  cs.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) cs.push_back(reduce_mod_p(c, p));
  return FpPoly(fp_ctx(p), std::move(cs));
}

BigInt denominator_lcm(const QPoly& f) {
  BigInt l = 1;
  for (const auto& c : f.coeffs()) {
    BigInt d = c.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

BigInt integer_content(const QPoly& f) {
  BigInt g = 0;
  for (const auto& c : f.coeffs()) {
    BigInt n = c.num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  return g;
}

std::pair<QPoly, QPoly> integer_form(const QRatFun& f) {
  BigInt l = denominator_lcm(f.num());
  BigInt l2 = denominator_lcm(f.den());
  mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), l2.get_mpz_t());
  QPoly n = f.num().scaled(Rational(l)), d = f.den().scaled(Rational(l));
  BigInt g = integer_content(n), g2 = integer_content(d);
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), g2.get_mpz_t());
  Rational s(BigInt(1), g);
  return {n.scaled(s), d.scaled(s)};
}

FpRatFun reduce_mod_p(const QRatFun& f, std::uint64_t p) {
  auto [n, d] = integer_form(f);
  FpPoly dn = reduce_mod_p(d, p);
  if (dn.is_zero())
    throw MathError(ErrorKind::BadReduction, "denominator " + f.den().str() + " vanishes mod " + std::to_string(p));
  return FpRatFun(reduce_mod_p(n, p), dn);
}

QPoly lift(const FpPoly& f) {
  std::vector<Rational> cs;
  for (const auto& c : f.coeffs()) cs.emplace_back(static_cast<long long>(c.value()));
  return QPoly(QCtx{}, std::move(cs));
}

}  // namespace pcurv
