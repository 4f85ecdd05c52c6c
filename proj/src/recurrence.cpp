#include "pcurv/recurrence.hpp"

#include <algorithm>
#include <map>

namespace pcurv {

namespace {

QPoly qpoly_int(long long v) { return QPoly::from_int(QCtx{}, v); }

// k + a as a polynomial in k.
QPoly linear(const Rational& a) { return QPoly(QCtx{}, {a, Rational(1)}); }

BigInt content_of(const std::vector<QPoly>& ps) {
  BigInt g = 0;
  for (const auto& p : ps)
    for (const auto& c : p.coeffs()) g = gcd(g, c.num());
  return g;
}

}  // namespace

QPoly falling_factorial_poly(int i) {
  QPoly r = qpoly_int(1);
  for (int j = 0; j < i; ++j) r *= linear(Rational(-j));
  return r;
}

std::string PRecurrence::str(const std::string& seq) const {
  std::string out;
  bool first = true;
  for (int t = order(); t >= 0; --t) {
    const QPoly& p = coeffs[t];
    if (p.is_zero()) continue;
    std::string idx = t == 0 ? "k" : "k+" + std::to_string(t);
    std::string body = p.str("k");
    bool neg = false;
    if (p.is_constant()) {
      if (body[0] == '-') {
        neg = true;
        body = body.substr(1);
      }
    } else {
      body = "(" + body + ")";
    }
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    out += body + "*" + seq + "(" + idx + ")";
    first = false;
  }
  return out + " = 0 for k >= " + std::to_string(offset);
}

PRecurrence operator_to_recurrence(const QOp& l) {
  if (l.is_zero()) throw MathError(ErrorKind::InvalidArgument, "zero operator has no recurrence");
  QPoly g = QPoly::one(QCtx{});
  for (const auto& a : l.coeffs()) g = (g / poly_gcd(g, a.den())) * a.den();
  // (i, j, a_ij) with a_i = sum_j a_ij x^j
  std::map<int, QPoly> by_shift;
  int dmin = 0, dmax = 0;
  bool any = false;
  std::vector<std::vector<Rational>> a;
  for (int i = 0; i <= l.order(); ++i) {
    QPoly ai = l.coeff(i).num() * (g / l.coeff(i).den());
    for (int j = 0; j <= ai.degree(); ++j) {
      if (ai.coeff(j).is_zero()) continue;
      int d = i - j;
      if (!any) dmin = dmax = d;
      dmin = std::min(dmin, d);
      dmax = std::max(dmax, d);
      any = true;
    }
  }
  PRecurrence rec;
  rec.offset = dmin;
  rec.coeffs.assign(dmax - dmin + 1, QPoly(QCtx{}));
  for (int i = 0; i <= l.order(); ++i) {
    QPoly ai = l.coeff(i).num() * (g / l.coeff(i).den());
    QPoly ff = falling_factorial_poly(i);
    for (int j = 0; j <= ai.degree(); ++j) {
      if (ai.coeff(j).is_zero()) continue;
      int t = i - j - dmin;
      // ff(k + t, i)
      rec.coeffs[t] += ff.taylor_shift(Rational(t)).scaled(ai.coeff(j));
    }
  }
  // Drop the common polynomial factor, make jointly primitive over Z, leading lc positive.
  QPoly h(QCtx{});
  for (const auto& p : rec.coeffs) h = poly_gcd(h, p);
  if (h.degree() > 0)
    for (auto& p : rec.coeffs) p = p / h;
  BigInt den = 1;
  for (const auto& p : rec.coeffs) den = lcm(den, denominator_lcm(p));
  for (auto& p : rec.coeffs) p = p.scaled(Rational(den));
  BigInt c = content_of(rec.coeffs);
  if (rec.coeffs.back().lc().sign() < 0) c = -c;
  for (auto& p : rec.coeffs) p = p.scaled(Rational(BigInt(1), c));
  while (rec.coeffs.size() > 1 && rec.coeffs.front().is_zero()) {
    rec.coeffs.erase(rec.coeffs.begin());
    // re-index: p_t(k) u_{k+t}, dropping p_0 shifts k
    for (auto& p : rec.coeffs) p = p.taylor_shift(Rational(-1));
    rec.offset += 1;
  }
  return rec;
}

TruncatedSeries<Rational> recurrence_unroll(const PRecurrence& rec, std::size_t count) {
  const int s = rec.order();
  if (s < 0) throw MathError(ErrorKind::InvalidArgument, "empty recurrence");
  std::vector<Rational> u(rec.initial.begin(), rec.initial.begin() + std::min(count, rec.initial.size()));
  const long m = static_cast<long>(rec.initial.size());
  if (static_cast<long>(count) > m && m < s + rec.offset)
    throw MathError(ErrorKind::NotEnoughInitialValues,
                    "need " + std::to_string(s + rec.offset) + " initial values, got " + std::to_string(m));
  auto at = [&](long i) { return i < 0 ? Rational() : u[i]; };
  for (long n = m; n < static_cast<long>(count); ++n) {
    long k = n - s;
    Rational lead = rec.coeffs[s].eval(Rational(k));
    if (lead.is_zero()) throw MathError(ErrorKind::SingularIndex, "leading coefficient vanishes at k = " + std::to_string(k));
    Rational acc;
    for (int t = 0; t < s; ++t) {
      Rational v = at(k + t);
      if (!v.is_zero()) acc += rec.coeffs[t].eval(Rational(k)) * v;
    }
    u.push_back(-acc / lead);
  }
  return TruncatedSeries<Rational>(QCtx{}, std::move(u));
}

template <class K>
TruncatedSeries<K> series_solve(const DiffOp<K>& l, const std::vector<K>& initial, std::size_t t) {
  using P = Polynomial<K>;
  auto c = l.ctx();
  const int n = l.order();
  if (n < 0) throw MathError(ErrorKind::InvalidArgument, "zero operator");
  if (initial.size() != static_cast<std::size_t>(n))
    throw MathError(ErrorKind::InvalidArgument,
                    "expected " + std::to_string(n) + " initial values, got " + std::to_string(initial.size()));
  DiffOp<K> m = l.monic();
  P g = P::one(c);
  for (const auto& a : m.coeffs()) g = (g / poly_gcd(g, a.den())) * a.den();
  if (g.coeff(0).is_zero()) throw MathError(ErrorKind::NotOrdinaryPoint, "0 is a singular point");
  std::vector<P> a;
  for (const auto& ai : m.coeffs()) a.push_back(ai.num() * (g / ai.den()));
  std::vector<K> u(t, FieldTraits<K>::zero(c));
  for (int i = 0; i < n && static_cast<std::size_t>(i) < t; ++i) u[i] = initial[i];
  auto ff = [&](long v, int i) {
    K r = FieldTraits<K>::from_int(c, 1);
    for (int j = 0; j < i; ++j) r *= FieldTraits<K>::from_int(c, v - j);
    return r;
  };
  // coefficient of x^N in L(y): sum a_ij ff(N-j+i, i) u_{N-j+i}
  for (std::size_t N = 0; N + n < t; ++N) {
    K acc = FieldTraits<K>::zero(c);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= a[i].degree(); ++j) {
        long idx = static_cast<long>(N) - j + i;
        if (idx < 0 || (i == n && j == 0) || a[i].coeff(j).is_zero() || u[idx].is_zero()) continue;
        acc += a[i].coeff(j) * ff(idx, i) * u[idx];
      }
    K lead = a[n].coeff(0) * ff(static_cast<long>(N) + n, n);
    if (lead.is_zero()) {
      if (!acc.is_zero())
        throw MathError(ErrorKind::NoSeriesSolution, "no series solution beyond index " + std::to_string(N + n));
      continue;
    }
    u[N + n] = -acc / lead;
  }
  return TruncatedSeries<K>(c, std::move(u));
}

template TruncatedSeries<Rational> series_solve(const DiffOp<Rational>&, const std::vector<Rational>&, std::size_t);
template TruncatedSeries<Fp> series_solve(const DiffOp<Fp>&, const std::vector<Fp>&, std::size_t);

TruncatedSeries<Rational> hypergeom_series(const HypergeomParams& params, std::size_t t, const Rational& scale) {
  for (const auto& b : params.lower)
    if (b.is_integer() && b.sign() <= 0)
      throw MathError(ErrorKind::LowerParameterNonpositiveInteger, "lower parameter " + b.str() + " is a nonpositive integer");
  std::vector<Rational> c;
  if (t == 0) return TruncatedSeries<Rational>(QCtx{}, c);
  c.push_back(Rational(1));
  for (std::size_t k = 0; k + 1 < t; ++k) {
    Rational num = scale, den = Rational(static_cast<long long>(k + 1));
    for (const auto& a : params.upper) num *= a + Rational(static_cast<long long>(k));
    for (const auto& b : params.lower) den *= b + Rational(static_cast<long long>(k));
    c.push_back(c.back() * num / den);
  }
  return TruncatedSeries<Rational>(QCtx{}, std::move(c));
}

}  // namespace pcurv
