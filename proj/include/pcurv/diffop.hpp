#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pcurv/reduce.hpp"
#include "pcurv/series.hpp"

namespace pcurv {

// Sum of a_i(x) Dx^i with rational-function coefficients.
template <class K>
class DiffOp {
 public:
  using RF = RationalFunction<K>;
  using P = Polynomial<K>;
  using Ctx = typename P::Ctx;
  using Traits = FieldTraits<K>;

  DiffOp() = default;
  explicit DiffOp(Ctx c) : ctx_(c) {}
  DiffOp(Ctx c, std::vector<RF> coeffs) : ctx_(c), a_(std::move(coeffs)) { trim(); }

  static DiffOp d(Ctx c, unsigned k = 1) {
    std::vector<RF> a(k + 1, RF(c));
    a[k] = RF::from_int(c, 1);
    return DiffOp(c, std::move(a));
  }
  static DiffOp from_ratfun(const RF& f) { return DiffOp(f.ctx(), {f}); }

  Ctx ctx() const { return ctx_; }
  int order() const { return static_cast<int>(a_.size()) - 1; }
  bool is_zero() const { return a_.empty(); }
  const std::vector<RF>& coeffs() const { return a_; }
  RF coeff(std::size_t i) const { return i < a_.size() ? a_[i] : RF(ctx_); }
  const RF& lc() const { return a_.back(); }

  DiffOp operator-() const {
    DiffOp r = *this;
    for (auto& v : r.a_) v = -v;
    return r;
  }
  friend DiffOp operator+(const DiffOp& a, const DiffOp& b) {
    Ctx c = Traits::merge(a.ctx_, b.ctx_);
    std::vector<RF> r(std::max(a.a_.size(), b.a_.size()), RF(c));
    for (std::size_t i = 0; i < a.a_.size(); ++i) r[i] = a.a_[i];
    for (std::size_t i = 0; i < b.a_.size(); ++i) r[i] = r[i] + b.a_[i];
    return DiffOp(c, std::move(r));
  }
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b) { return a + (-b); }

  // f * L
  DiffOp left_scaled(const RF& f) const {
    DiffOp r = *this;
    for (auto& v : r.a_) v = f * v;
    r.trim();
    return r;
  }
  // Dx * L, by the rule Dx r = r Dx + r'.
  DiffOp times_d() const {
    if (is_zero()) return *this;
    std::vector<RF> r(a_.size() + 1, RF(ctx_));
    for (std::size_t i = 0; i < a_.size(); ++i) {
      r[i] = r[i] + a_[i].derivative();
      r[i + 1] = r[i + 1] + a_[i];
    }
    return DiffOp(ctx_, std::move(r));
  }

  friend DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    Ctx c = Traits::merge(a.ctx_, b.ctx_);
    DiffOp r(c), di = b;
    for (std::size_t i = 0; i < a.a_.size(); ++i) {
      if (!a.a_[i].is_zero()) r = r + di.left_scaled(a.a_[i]);
      if (i + 1 < a.a_.size()) di = di.times_d();
    }
    return r;
  }

  DiffOp monic() const {
    if (is_zero()) throw MathError(ErrorKind::DivisionByZeroOperator, "monicize of the zero operator");
    if (lc().is_one()) return *this;
    return left_scaled(lc().inv());
  }

  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.a_ == b.a_; }
  friend bool operator!=(const DiffOp& a, const DiffOp& b) { return !(a == b); }

  std::string str() const;

 private:
  void trim() {
    while (!a_.empty() && a_.back().is_zero()) a_.pop_back();
  }

  Ctx ctx_{};
  std::vector<RF> a_;
};

template <class K>
std::string DiffOp<K>::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = a_.size(); i-- > 0;) {
    const RF& c = a_[i];
    if (c.is_zero()) continue;
    std::string dx = i == 0 ? "" : (i == 1 ? "Dx" : "Dx^" + std::to_string(i));
    bool neg = false;
    std::string body;
    if (c.is_constant()) {
      body = c.num().coeff(0).str();
      if (body[0] == '-') {
        neg = true;
        body = body.substr(1);
      }
      if (i > 0) body = body == "1" ? dx : body + "*" + dx;
    } else {
      if (c.is_polynomial() && c.num().term_count() > 1) {
        body = "(" + c.str() + ")";
      } else {
        body = c.str();
        if (body[0] == '-') {
          neg = true;
          body = body.substr(1);
        }
      }
      if (i > 0) body += "*" + dx;
    }
    if (first)
      out += neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

template <class K>
struct DivModResult {
  DiffOp<K> quotient, remainder;
};

// A = Q*B + R with ord R < ord B.
template <class K>
DivModResult<K> right_divmod(const DiffOp<K>& a, const DiffOp<K>& b) {
  using Op = DiffOp<K>;
  if (b.is_zero()) throw MathError(ErrorKind::DivisionByZeroOperator, "division by the zero operator");
  auto c = FieldTraits<K>::merge(a.ctx(), b.ctx());
  const int m = b.order();
  if (a.order() < m) return {Op(c), a};
  const int top = a.order() - m;
  std::vector<Op> dk{b};
  for (int k = 1; k <= top; ++k) dk.push_back(dk.back().times_d());
  std::vector<RationalFunction<K>> q(top + 1, RationalFunction<K>(c));
  Op r = a;
  auto lc_inv = b.lc().inv();
  for (int k = top; k >= 0; --k) {
    auto coef = r.coeff(m + k);
    if (coef.is_zero()) continue;
    q[k] = coef * lc_inv;
    r = r - dk[k].left_scaled(q[k]);
  }
  return {Op(c, std::move(q)), r};
}

template <class K>
RationalFunction<K> apply_op(const DiffOp<K>& l, const RationalFunction<K>& f) {
  RationalFunction<K> acc(f.ctx()), di = f;
  for (int i = 0; i <= l.order(); ++i) {
    if (!l.coeff(i).is_zero()) acc = acc + l.coeff(i) * di;
    if (i < l.order()) di = di.derivative();
  }
  return acc;
}

// Output order is the input order minus ord L; coefficients must be regular at 0.
template <class K>
TruncatedSeries<K> apply_op(const DiffOp<K>& l, const TruncatedSeries<K>& f) {
  const int n = l.order();
  if (n < 0) return TruncatedSeries<K>(f.ctx(), f.order());
  if (static_cast<int>(f.order()) < n)
    throw MathError(ErrorKind::TruncationTooSmall, "series order below operator order");
  std::size_t out = f.order() - n;
  TruncatedSeries<K> acc(f.ctx(), out), di = f;
  for (int i = 0; i <= n; ++i) {
    if (!l.coeff(i).is_zero())
      acc = acc + TruncatedSeries<K>::from_ratfun(l.coeff(i), out) * di.truncated(out);
    if (i < n) di = di.derivative();
  }
  return acc;
}

using QOp = DiffOp<Rational>;
using FpOp = DiffOp<Fp>;

// Coefficientwise reduction; fails when a coefficient or the leading term degenerates.
FpOp reduce_op_mod_p(const QOp& l, std::uint64_t p);

// d = max degree of numerators/denominators of the monic coefficients.
int coefficient_degree_bound(const FpOp& monic_l);

}  // namespace pcurv
