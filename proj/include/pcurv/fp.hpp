#pragma once

#include <cstdint>
#include <string>

#include "pcurv/error.hpp"

namespace pcurv {

// Element of a prime field with a word-size modulus (p < 2^62).
// A default-constructed element is a modulus-free zero that adopts the
// modulus of the other operand.
class Fp {
 public:
  Fp() = default;
  Fp(long long v, std::uint64_t p) : p_(p) {
    long long r = p ? v % static_cast<long long>(p) : v;
    if (r < 0) r += static_cast<long long>(p);
    v_ = static_cast<std::uint64_t>(r);
  }
  static Fp raw(std::uint64_t v, std::uint64_t p) {
    Fp f;
    f.v_ = v;
    f.p_ = p;
    return f;
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp operator-() const { return raw(v_ ? p_ - v_ : 0, p_); }
  Fp& operator+=(const Fp& o) {
    std::uint64_t p = p_ ? p_ : o.p_;
    std::uint64_t s = v_ + o.v_;
    if (s >= p) s -= p;
    v_ = s;
    p_ = p;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    std::uint64_t p = p_ ? p_ : o.p_;
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p - o.v_;
    p_ = p;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    std::uint64_t p = p_ ? p_ : o.p_;
    v_ = p ? static_cast<std::uint64_t>(static_cast<unsigned __int128>(v_) * o.v_ % p) : 0;
    p_ = p;
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inv(); }

  Fp pow(std::uint64_t e) const {
    Fp r = raw(1 % p_, p_), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }
  Fp inv() const {
    if (v_ == 0) throw MathError(ErrorKind::DivisionByZero, "inverse of zero in F_p");
    // extended Euclid on signed 128-bit values
    __int128 a = v_, m = p_, x0 = 1, x1 = 0;
    while (m) {
      __int128 q = a / m, t = a - q * m;
      a = m;
      m = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    __int128 r = x0 % static_cast<__int128>(p_);
    if (r < 0) r += p_;
    return raw(static_cast<std::uint64_t>(r), p_);
  }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

  std::string str() const { return std::to_string(v_); }

 private:
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

}  // namespace pcurv
