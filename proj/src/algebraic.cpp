#include "pcurv/algebraic.hpp"

#include <algorithm>
#include <functional>

#include "pcurv/reduce.hpp"

namespace pcurv {

template <class K>
BivariatePoly<K> BivariatePoly<K>::y_derivative() const {
  BivariatePoly r;
  for (std::size_t j = 1; j < c.size(); ++j) {
    auto ctx = c[j].ctx();
    r.c.push_back(c[j].scaled(FieldTraits<K>::from_int(ctx, static_cast<long long>(j))));
  }
  return r;
}

template <class K>
TruncatedSeries<K> BivariatePoly<K>::substitute(const TruncatedSeries<K>& s) const {
  const std::size_t t = s.order();
  TruncatedSeries<K> acc(s.ctx(), t);
  for (std::size_t j = c.size(); j-- > 0;) {
    acc = acc * s + TruncatedSeries<K>::from_polynomial(c[j], t);
  }
  return acc;
}

template struct BivariatePoly<Rational>;
template struct BivariatePoly<Fp>;

HenselResult algebraic_series_mod_p(const BivariatePoly<Fp>& p, const Fp& y0, std::size_t t) {
  const std::uint64_t prime = y0.modulus();
  FpCtx c = fp_ctx(prime);
  auto at0 = [&](const BivariatePoly<Fp>& q) {
    Fp v = Fp::raw(0, prime);
    for (std::size_t j = q.c.size(); j-- > 0;) v = v * y0 + q.c[j].coeff(0);
    return v;
  };
  BivariatePoly<Fp> dp = p.y_derivative();
  if (!at0(p).is_zero()) throw MathError(ErrorKind::NotASimpleRoot, "y0 is not a root of P(0, y)");
  if (at0(dp).is_zero()) throw MathError(ErrorKind::NotASimpleRoot, "y0 is a multiple root of P(0, y)");
  HenselResult res;
  TruncatedSeries<Fp> y(c, std::vector<Fp>{y0});
  std::size_t prec = 1;
  while (prec < t) {
    prec = std::min(2 * prec, t);
    std::vector<Fp> cs = y.coeffs();
    cs.resize(prec, Fp::raw(0, prime));
    y = TruncatedSeries<Fp>(c, std::move(cs));
    TruncatedSeries<Fp> num = p.substitute(y), den = dp.substitute(y);
    y = y - num * den.inv();
    res.precisions.push_back(prec);
    if (!p.substitute(y).is_zero()) res.per_step_checks_hold = false;
  }
  if (t == 1) res.precisions.push_back(1);
  res.series = y.truncated(t);
  if (res.series.order() < t) {
    std::vector<Fp> cs = res.series.coeffs();
    cs.resize(t, Fp::raw(0, prime));
    res.series = TruncatedSeries<Fp>(c, std::move(cs));
  }
  return res;
}

template <class K>
bool check_algebraic_relation(const TruncatedSeries<K>& s, const BivariatePoly<K>& p, std::size_t t) {
  if (t > s.order()) throw MathError(ErrorKind::TruncationTooSmall, "series is shorter than the requested order");
  return p.substitute(s.truncated(t)).is_zero();
}

template bool check_algebraic_relation(const TruncatedSeries<Rational>&, const BivariatePoly<Rational>&, std::size_t);
template bool check_algebraic_relation(const TruncatedSeries<Fp>&, const BivariatePoly<Fp>&, std::size_t);

MultiPoly MultiPoly::constant(const Rational& v) {
  MultiPoly r;
  if (!v.is_zero()) r.terms[{0, 0, 0}] = v;
  return r;
}

MultiPoly MultiPoly::var(int i) {
  MultiPoly r;
  Exp e{0, 0, 0};
  e[i] = 1;
  r.terms[e] = Rational(1);
  return r;
}

bool MultiPoly::is_constant() const {
  return terms.empty() || (terms.size() == 1 && terms.begin()->first == Exp{0, 0, 0});
}

Rational MultiPoly::constant_term() const {
  auto it = terms.find({0, 0, 0});
  return it == terms.end() ? Rational() : it->second;
}

int MultiPoly::degree_in(int v) const {
  int d = 0;
  for (const auto& [e, c] : terms) d = std::max(d, e[v]);
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms) c = -c;
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms) {
    Rational v = r.terms[e] + c;
    if (v.is_zero())
      r.terms.erase(e);
    else
      r.terms[e] = v;
  }
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      MultiPoly::Exp e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      r.terms[e] += ca * cb;
    }
  std::erase_if(r.terms, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(Rational(1)), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

std::string MultiPoly::str() const {
  if (terms.empty()) return "0";
  static const char* names[] = {"x", "y", "z"};
  std::string out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string s = c.str();
    bool neg = s[0] == '-';
    if (neg) s = s.substr(1);
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string mono;
    for (int v = 0; v < 3; ++v) {
      if (!e[v]) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty())
      out += s;
    else if (s == "1")
      out += mono;
    else
      out += s + "*" + mono;
  }
  return out;
}

TruncatedSeries<Rational> diagonal_small(const MultiRatFun& f, int nvars, std::size_t t) {
  if (nvars < 2 || nvars > 3) throw MathError(ErrorKind::InvalidArgument, "diagonals need 2 or 3 variables");
  for (int v = nvars; v < 3; ++v)
    if (f.num.uses(v) || f.den.uses(v))
      throw MathError(ErrorKind::InvalidArgument, "variable beyond the declared arity");
  Rational d0 = f.den.constant_term();
  if (d0.is_zero()) throw MathError(ErrorKind::NoExpansionAtOrigin, "denominator vanishes at the origin");
  const std::size_t dim = nvars;
  std::size_t total = 1;
  for (std::size_t v = 0; v < dim; ++v) total *= t;
  auto index = [&](const MultiPoly::Exp& e) {
    std::size_t r = 0;
    for (std::size_t v = 0; v < dim; ++v) r = r * t + static_cast<std::size_t>(e[v]);
    return r;
  };
  // coefficients of F in the box [0, t)^dim, lexicographic order
  std::vector<Rational> g(total);
  Rational inv0 = d0.inv();
  MultiPoly::Exp e{0, 0, 0};
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    if (v == dim) {
      Rational acc;
      auto it = f.num.terms.find(e);
      if (it != f.num.terms.end()) acc = it->second;
      for (const auto& [de, dc] : f.den.terms) {
        if (de == MultiPoly::Exp{0, 0, 0}) continue;
        MultiPoly::Exp s{e[0] - de[0], e[1] - de[1], e[2] - de[2]};
        if (s[0] < 0 || s[1] < 0 || s[2] < 0) continue;
        const Rational& gv = g[index(s)];
        if (!gv.is_zero()) acc -= dc * gv;
      }
      g[index(e)] = acc * inv0;
      return;
    }
    for (std::size_t i = 0; i < t; ++i) {
      e[v] = static_cast<int>(i);
      walk(v + 1);
    }
    e[v] = 0;
  };
  if (t > 0) walk(0);
  std::vector<Rational> diag;
  for (std::size_t i = 0; i < t; ++i) {
    MultiPoly::Exp d{0, 0, 0};
    for (std::size_t v = 0; v < dim; ++v) d[v] = static_cast<int>(i);
    diag.push_back(g[index(d)]);
  }
  return TruncatedSeries<Rational>(QCtx{}, std::move(diag));
}

BivariatePoly<Rational> to_bivariate(const MultiPoly& p) {
  if (p.uses(2)) throw MathError(ErrorKind::InvalidArgument, "relation polynomial must only use x and y");
  BivariatePoly<Rational> b;
  const int dy = p.degree_in(1);
  std::vector<std::vector<Rational>> cs(dy + 1);
  for (const auto& [e, c] : p.terms) {
    auto& row = cs[e[1]];
    if (row.size() <= static_cast<std::size_t>(e[0])) row.resize(e[0] + 1);
    row[e[0]] = c;
  }
  for (auto& row : cs) b.c.emplace_back(QCtx{}, std::move(row));
  return b;
}

BivariatePoly<Fp> reduce_mod_p(const BivariatePoly<Rational>& p, std::uint64_t prime) {
  BivariatePoly<Fp> r;
  for (const auto& cj : p.c) r.c.push_back(reduce_mod_p(cj, prime));
  return r;
}

}  // namespace pcurv
