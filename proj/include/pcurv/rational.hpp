#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pcurv {

using BigInt = mpz_class;

// Exact fraction kept in canonical form (gcd 1, positive denominator).
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}
  Rational(long v) : q_(v) {}
  Rational(long long v) : q_(BigInt(std::to_string(v))) {}
  Rational(const BigInt& n) : q_(n) {}
  Rational(const BigInt& n, const BigInt& d);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Accepts "n" or "n/d" with optional sign.
  static Rational parse(const std::string& s);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  Rational inv() const;
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  Rational pow(unsigned e) const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }

  std::string str() const { return q_.get_str(); }

 private:
  mpq_class q_;
};

// p-adic valuation; zero maps to a large sentinel.
long valuation(const BigInt& n, std::uint64_t p);
long valuation(const Rational& q, std::uint64_t p);
constexpr long kInfiniteValuation = 1L << 40;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
bool is_prime(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n);
std::uint64_t mod_u(const BigInt& n, std::uint64_t p);

}  // namespace pcurv
