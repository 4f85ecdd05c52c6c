#include "pcurv/rational.hpp"

#include <stdexcept>

#include "pcurv/error.hpp"

namespace pcurv {

Rational::Rational(const BigInt& n, const BigInt& d) {
  if (d == 0) throw MathError(ErrorKind::DivisionByZero, "zero denominator");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational number: " + s);
  if (q.get_den() == 0) throw MathError(ErrorKind::DivisionByZero, "zero denominator in " + s);
  q.canonicalize();
  return Rational(q);
}

Rational Rational::inv() const {
  if (is_zero()) throw MathError(ErrorKind::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw MathError(ErrorKind::DivisionByZero, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(unsigned e) const {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), e);
  return Rational(n, d);
}

long valuation(const BigInt& n, std::uint64_t p) {
  if (n == 0) return kInfiniteValuation;
  BigInt m = n, pp = static_cast<unsigned long>(p);
  long v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), pp.get_mpz_t())) {
    m /= pp;
    ++v;
  }
  return v;
}

long valuation(const Rational& q, std::uint64_t p) {
  if (q.is_zero()) return kInfiniteValuation;
  return valuation(q.num(), p) - valuation(q.den(), p);
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  BigInt m = static_cast<unsigned long>(n);
  return mpz_probab_prime_p(m.get_mpz_t(), 40) > 0;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t k = n + 1;
  while (!is_prime(k)) ++k;
  return k;
}

std::uint64_t mod_u(const BigInt& n, std::uint64_t p) {
  BigInt r;
  BigInt pp = static_cast<unsigned long>(p);
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), pp.get_mpz_t());
  return r.get_ui();
}

}  // namespace pcurv
