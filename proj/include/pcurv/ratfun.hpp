#pragma once

#include <string>
#include <utility>

#include "pcurv/polynomial.hpp"

namespace pcurv {

// num/den in lowest terms with monic den.
template <class K>
class RationalFunction {
 public:
  using P = Polynomial<K>;
  using Ctx = typename P::Ctx;
  using Traits = FieldTraits<K>;

  RationalFunction() : den_(P::one(Ctx{})) {}
  explicit RationalFunction(Ctx c) : num_(c), den_(P::one(c)) {}
  RationalFunction(P n) : num_(std::move(n)), den_(P::one(num_.ctx())) {}
  RationalFunction(P n, P d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  static RationalFunction constant(Ctx c, const K& v) { return RationalFunction(P::constant(c, v)); }
  static RationalFunction from_int(Ctx c, long long v) { return RationalFunction(P::from_int(c, v)); }
  static RationalFunction x(Ctx c) { return RationalFunction(P::x(c)); }

  const P& num() const { return num_; }
  const P& den() const { return den_; }
  Ctx ctx() const { return Traits::merge(num_.ctx(), den_.ctx()); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den().degree() == 0; }
  bool is_constant() const { return num_.is_constant() && den().degree() == 0; }
  bool is_one() const { return is_constant() && num_.is_one(); }

  RationalFunction operator-() const { return raw(-num_, den()); }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den() == b.den()) return RationalFunction(a.num_ + b.num_, a.den());
    P g = poly_gcd(a.den(), b.den());
    P ad = a.den() / g, bd = b.den() / g;
    return RationalFunction(a.num_ * bd + b.num_ * ad, ad * b.den());
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction(Traits::merge(a.ctx(), b.ctx()));
    if (a.is_polynomial() && b.is_polynomial()) {
      return raw(a.num_ * b.num_, P::one(Traits::merge(a.ctx(), b.ctx())));
    }
    P g1 = poly_gcd(a.num_, b.den()), g2 = poly_gcd(b.num_, a.den());
    return RationalFunction((a.num_ / g1) * (b.num_ / g2), (a.den() / g2) * (b.den() / g1));
  }
  RationalFunction inv() const {
    if (is_zero()) throw MathError(ErrorKind::DivisionByZero, "inverse of zero rational function");
    return RationalFunction(den(), num_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inv(); }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction scaled(const K& s) const {
    if (s.is_zero()) return RationalFunction(ctx());
    return raw(num_.scaled(s), den());
  }

  RationalFunction derivative() const {
    if (is_polynomial()) return raw(num_.derivative(), den());
    return RationalFunction(num_.derivative() * den() - num_ * den().derivative(), den() * den());
  }
  RationalFunction pow(unsigned e) const { return raw(num_.pow(e), den().pow(e)); }

  K eval(const K& a) const {
    K d = den().eval(a);
    if (d.is_zero()) throw MathError(ErrorKind::PoleEvaluation, "evaluation at a pole");
    return num_.eval(a) / d;
  }
  bool has_pole_at(const K& a) const { return den().eval(a).is_zero(); }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den() == b.den();
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  std::string str(const std::string& var = "x") const {
    if (den().degree() == 0) return num_.str(var);
    auto wrap = [&](const P& f) { return f.term_count() == 1 ? f.str(var) : "(" + f.str(var) + ")"; };
    return wrap(num_) + "/" + wrap(den());
  }

  // Trusted constructor: inputs already coprime with monic den.
  static RationalFunction raw(P n, P d) {
    RationalFunction r(n.ctx());
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    return r;
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw MathError(ErrorKind::DivisionByZero, "zero denominator");
    Ctx c = ctx();
    if (num_.is_zero()) {
      num_ = P(c);
      den_ = P::one(c);
      return;
    }
    P g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    K l = den_.lc();
    if (!l.is_one()) {
      K li = l.inv();
      num_ = num_.scaled(li);
      den_ = den_.scaled(li);
    }
  }

  P num_;
  P den_;
};

}  // namespace pcurv
