#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "pcurv/error.hpp"
#include "pcurv/field.hpp"

namespace pcurv {

// Dense univariate polynomial, lowest degree first, no trailing zeros.
template <class K>
class Polynomial {
 public:
  using Traits = FieldTraits<K>;
  using Ctx = typename Traits::Ctx;

  Polynomial() = default;
  explicit Polynomial(Ctx c) : ctx_(c) {}
  Polynomial(Ctx c, std::vector<K> coeffs) : ctx_(c), c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(Ctx c, const K& v) { return Polynomial(c, {v}); }
  static Polynomial from_int(Ctx c, long long v) { return constant(c, Traits::from_int(c, v)); }
  static Polynomial one(Ctx c) { return from_int(c, 1); }
  static Polynomial monomial(Ctx c, const K& v, std::size_t k) {
    std::vector<K> cs(k + 1, Traits::zero(c));
    cs[k] = v;
    return Polynomial(c, std::move(cs));
  }
  static Polynomial x(Ctx c) { return monomial(c, Traits::from_int(c, 1), 1); }

  Ctx ctx() const { return ctx_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == Traits::from_int(ctx_, 1); }
  const std::vector<K>& coeffs() const { return c_; }
  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Traits::zero(ctx_); }
  std::size_t term_count() const {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const K& v) { return !v.is_zero(); }));
  }
  K lc() const { return c_.empty() ? Traits::zero(ctx_) : c_.back(); }
  K zero_elt() const { return Traits::zero(ctx_); }
  K one_elt() const { return Traits::from_int(ctx_, 1); }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    ctx_ = Traits::merge(ctx_, o.ctx_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Traits::zero(ctx_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    ctx_ = Traits::merge(ctx_, o.ctx_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Traits::zero(ctx_));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Ctx c = Traits::merge(a.ctx_, b.ctx_);
    if (a.is_zero() || b.is_zero()) return Polynomial(c);
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, Traits::zero(c));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(c, std::move(r));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const K& s) const {
    if (s.is_zero()) return Polynomial(ctx_);
    Polynomial r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
  }
  // Multiplication by x^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<K> r(k, Traits::zero(ctx_));
    r.insert(r.end(), c_.begin(), c_.end());
    return Polynomial(ctx_, std::move(r));
  }
  // Coefficients of x^lo .. x^(hi-1), shifted down.
  Polynomial slice(std::size_t lo, std::size_t hi) const {
    std::vector<K> r;
    for (std::size_t i = lo; i < std::min(hi, c_.size()); ++i) r.push_back(c_[i]);
    return Polynomial(ctx_, std::move(r));
  }
  Polynomial truncated(std::size_t n) const { return slice(0, n); }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial(ctx_);
    std::vector<K> r(c_.size() - 1, Traits::zero(ctx_));
    for (std::size_t i = 1; i < c_.size(); ++i)
      r[i - 1] = c_[i] * Traits::from_int(ctx_, static_cast<long long>(i));
    return Polynomial(ctx_, std::move(r));
  }

  K eval(const K& a) const {
    K r = Traits::zero(ctx_);
    for (std::size_t i = c_.size(); i-- > 0;) r = r * a + c_[i];
    return r;
  }
  // p(x + a)
  Polynomial taylor_shift(const K& a) const {
    std::vector<K> r = c_;
    const std::size_t n = r.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) r[j - 1] += a * r[j];
    return Polynomial(ctx_, std::move(r));
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(K(lc()).inv());
  }
  Polynomial pow(unsigned e) const {
    Polynomial r = one(ctx_), b = *this;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  // a = q*b + r with deg r < deg b.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw MathError(ErrorKind::DivisionByZero, "polynomial division by zero");
    Ctx c = Traits::merge(a.ctx_, b.ctx_);
    if (a.degree() < b.degree()) return {Polynomial(c), a};
    std::vector<K> r = a.c_;
    const int db = b.degree();
    std::vector<K> q(a.c_.size() - b.c_.size() + 1, Traits::zero(c));
    K inv = K(b.lc()).inv();
    for (int i = a.degree(); i >= db; --i) {
      if (r[i].is_zero()) continue;
      K f = r[i] * inv;
      q[i - db] = f;
      for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.c_[j];
    }
    r.resize(db);
    return {Polynomial(c, std::move(q)), Polynomial(c, std::move(r))};
  }
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Canonical printing, parseable by the expression grammar.
  std::string str(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  Ctx ctx_{};
  std::vector<K> c_;
};

template <class K>
std::string Polynomial<K>::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    K v = c_[i];
    std::string s = v.str();
    bool neg = !s.empty() && s[0] == '-';
    if (neg) s = s.substr(1);
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    bool unit = (s == "1");
    if (i == 0) {
      out += s;
      continue;
    }
    if (!unit) out += s + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

template <class K>
Polynomial<K> poly_gcd(Polynomial<K> a, Polynomial<K> b) {
  while (!b.is_zero()) {
    Polynomial<K> r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

// Returns (g, s, t) with s*a + t*b = g monic.
template <class K>
struct XgcdResult {
  Polynomial<K> g, s, t;
};

template <class K>
XgcdResult<K> poly_xgcd(const Polynomial<K>& a, const Polynomial<K>& b) {
  using P = Polynomial<K>;
  auto c = FieldTraits<K>::merge(a.ctx(), b.ctx());
  P r0 = a, r1 = b, s0 = P::one(c), s1(c), t0(c), t1 = P::one(c);
  while (!r1.is_zero()) {
    auto [q, r] = P::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    P s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  K inv = K(r0.lc()).inv();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

// Inverse of a modulo m; throws when not coprime.
template <class K>
Polynomial<K> poly_inv_mod(const Polynomial<K>& a, const Polynomial<K>& m) {
  auto x = poly_xgcd(a % m, m);
  if (x.g.degree() != 0) throw MathError(ErrorKind::DivisionByZero, "polynomial not invertible modulo");
  return x.s % m;
}

template <class K>
Polynomial<K> poly_powmod(Polynomial<K> base, unsigned long long e, const Polynomial<K>& m) {
  auto r = Polynomial<K>::one(m.ctx()) % m;
  base = base % m;
  while (e) {
    if (e & 1) r = (r * base) % m;
    e >>= 1;
    if (e) base = (base * base) % m;
  }
  return r;
}

template <class K>
struct SquarefreeFactor {
  Polynomial<K> factor;
  int multiplicity;
};

// Yun's algorithm; fails on inseparable input in positive characteristic.
template <class K>
std::vector<SquarefreeFactor<K>> squarefree_decomposition(const Polynomial<K>& f) {
  using P = Polynomial<K>;
  if (f.is_zero()) throw MathError(ErrorKind::InvalidArgument, "squarefree decomposition of zero");
  std::vector<SquarefreeFactor<K>> out;
  if (f.degree() == 0) return out;
  P fm = f.monic();
  P d = fm.derivative();
  if (d.is_zero()) throw MathError(ErrorKind::InseparableInput, "derivative vanishes identically");
  P a = poly_gcd(fm, d);
  P b = fm / a, c = d / a;
  P dd = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    P g = poly_gcd(b, dd);
    if (g.degree() > 0) out.push_back({g, i});
    b = b / g;
    c = dd / g;
    dd = c - b.derivative();
    ++i;
  }
  P check = P::one(f.ctx());
  for (auto& sf : out) check *= sf.factor.pow(sf.multiplicity);
  if (check != fm)
    throw MathError(ErrorKind::InseparableInput, "multiplicity divisible by the characteristic");
  return out;
}

}  // namespace pcurv
