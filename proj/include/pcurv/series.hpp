#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "pcurv/ratfun.hpp"

namespace pcurv {

// Power series modulo x^T.
template <class K>
class TruncatedSeries {
 public:
  using Traits = FieldTraits<K>;
  using Ctx = typename Traits::Ctx;

  TruncatedSeries() = default;
  TruncatedSeries(Ctx c, std::size_t order) : ctx_(c), c_(order, Traits::zero(c)) {}
  TruncatedSeries(Ctx c, std::vector<K> coeffs) : ctx_(c), c_(std::move(coeffs)) {}

  static TruncatedSeries from_polynomial(const Polynomial<K>& f, std::size_t order) {
    TruncatedSeries s(f.ctx(), order);
    for (std::size_t i = 0; i < order; ++i) s.c_[i] = f.coeff(i);
    return s;
  }
  // Expansion at 0; the denominator must not vanish there.
  static TruncatedSeries from_ratfun(const RationalFunction<K>& f, std::size_t order) {
    if (f.den().coeff(0).is_zero())
      throw MathError(ErrorKind::PoleAtOrigin, "rational function has a pole at 0");
    return from_polynomial(f.num(), order) * from_polynomial(f.den(), order).inv();
  }

  Ctx ctx() const { return ctx_; }
  std::size_t order() const { return c_.size(); }
  const std::vector<K>& coeffs() const { return c_; }
  const K& operator[](std::size_t i) const { return c_[i]; }
  K& operator[](std::size_t i) { return c_[i]; }
  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Traits::zero(ctx_); }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const K& v) { return v.is_zero(); });
  }

  TruncatedSeries truncated(std::size_t n) const {
    TruncatedSeries r = *this;
    r.c_.resize(std::min(n, c_.size()));
    return r;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries r(Traits::merge(a.ctx_, b.ctx_), n);
    for (std::size_t i = 0; i < n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries r(Traits::merge(a.ctx_, b.ctx_), n);
    for (std::size_t i = 0; i < n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    Ctx c = Traits::merge(a.ctx_, b.ctx_);
    TruncatedSeries r(c, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }
  TruncatedSeries scaled(const K& s) const {
    TruncatedSeries r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
  }
  TruncatedSeries inv() const {
    if (c_.empty() || c_[0].is_zero())
      throw MathError(ErrorKind::DivisionByZero, "series with zero constant term is not invertible");
    const std::size_t n = c_.size();
    TruncatedSeries r(ctx_, n);
    K i0 = K(c_[0]).inv();
    r.c_[0] = i0;
    for (std::size_t k = 1; k < n; ++k) {
      K acc = Traits::zero(ctx_);
      for (std::size_t j = 1; j <= k; ++j)
        if (!c_[j].is_zero()) acc += c_[j] * r.c_[k - j];
      r.c_[k] = -acc * i0;
    }
    return r;
  }
  // Order drops by one.
  TruncatedSeries derivative() const {
    if (c_.empty()) return *this;
    TruncatedSeries r(ctx_, c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      r.c_[i - 1] = c_[i] * Traits::from_int(ctx_, static_cast<long long>(i));
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ", ";
      out += c_[i].str();
    }
    return "[" + out + "]";
  }

 private:
  Ctx ctx_{};
  std::vector<K> c_;
};

}  // namespace pcurv
