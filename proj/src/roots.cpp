#include "pcurv/roots.hpp"

#include <algorithm>

namespace pcurv {

namespace {

using ZPoly = std::vector<BigInt>;  // lowest degree first

BigInt zeval(const ZPoly& f, const BigInt& a, const BigInt& m) {
  BigInt r = 0;
  for (std::size_t i = f.size(); i-- > 0;) {
    r = r * a + f[i];
    if (m != 0) r %= m;
  }
  if (m != 0 && r < 0) r += m;
  return r;
}

ZPoly zderiv(const ZPoly& f) {
  ZPoly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<unsigned long>(i));
  return d;
}

// Integer roots of a monic squarefree integer polynomial.
std::vector<BigInt> monic_integer_roots(const ZPoly& f) {
  const std::size_t n = f.size() - 1;
  std::vector<BigInt> out;
  if (n == 0) return out;
  if (n == 1) {
    out.push_back(-f[0]);
    return out;
  }
  BigInt bound = 0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max<BigInt>(bound, abs(f[i]));
  bound += 1;
  // a prime where f stays squarefree
  QPoly fq(QCtx{});
  {
    std::vector<Rational> cs;
    for (const auto& c : f) cs.emplace_back(c);
    fq = QPoly(QCtx{}, cs);
  }
  std::uint64_t p = 2;
  for (;; p = next_prime(p + 1)) {
    FpPoly fp = reduce_mod_p(fq, p);
    if (fp.degree() != static_cast<int>(n)) continue;
    if (poly_gcd(fp, fp.derivative()).degree() == 0) break;
  }
  ZPoly d = zderiv(f);
  BigInt pp(static_cast<unsigned long>(p));
  for (std::uint64_t a = 0; a < p; ++a) {
    BigInt r(static_cast<unsigned long>(a));
    if (zeval(f, r, pp) != 0) continue;
    BigInt mod = pp;
    while (mod <= 2 * bound) {
      BigInt next = mod * mod;
      BigInt fv = zeval(f, r, next), dv = zeval(d, r, next), inv;
      if (mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), next.get_mpz_t()) == 0) break;
      r = (r - fv * inv) % next;
      if (r < 0) r += next;
      mod = next;
    }
    if (r > mod / 2) r -= mod;
    if (zeval(f, r, 0) == 0) out.push_back(r);
  }
  return out;
}

std::vector<Rational> roots_of_squarefree(const QPoly& g) {
  // primitive integer form c_n z^n + ... + c_0, then w = c_n z
  BigInt den = denominator_lcm(g);
  QPoly gi = g.scaled(Rational(den));
  const int n = gi.degree();
  std::vector<BigInt> c;
  for (int i = 0; i <= n; ++i) c.push_back(gi.coeff(i).num());
  BigInt cont = 0;
  for (const auto& v : c) cont = gcd(cont, v);
  for (auto& v : c) v /= cont;
  BigInt lc = c[n];
  ZPoly monic(n + 1);
  BigInt pw = 1;
  for (int i = n; i >= 0; --i) {
    monic[i] = (i == n) ? BigInt(1) : c[i] * pw;
    if (i < n) pw *= lc;
  }
  std::vector<Rational> out;
  for (const auto& w : monic_integer_roots(monic)) out.emplace_back(w, lc);
  return out;
}

}  // namespace

std::vector<RationalRoot> rational_roots(const QPoly& f) {
  std::vector<RationalRoot> out;
  if (f.degree() <= 0) return out;
  for (const auto& sf : squarefree_decomposition(f))
    for (const auto& r : roots_of_squarefree(sf.factor)) out.push_back({r, sf.multiplicity});
  std::sort(out.begin(), out.end(), [](const RationalRoot& a, const RationalRoot& b) { return a.value < b.value; });
  return out;
}

Rational rational_det(Matrix<Rational> m) {
  const std::size_t n = m.rows();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) return Rational();
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    Rational inv = m(col, col).inv();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      Rational f = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

QPoly rational_charpoly(const Matrix<Rational>& m) {
  const std::size_t n = m.rows();
  // interpolate det(z I - M) at z = 0..n
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    Matrix<Rational> a = m;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = (i == j ? Rational(static_cast<long long>(k)) : Rational()) - m(i, j);
    xs.emplace_back(static_cast<long long>(k));
    ys.push_back(rational_det(a));
  }
  QPoly out(QCtx{});
  for (std::size_t i = 0; i <= n; ++i) {
    QPoly basis = QPoly::one(QCtx{});
    Rational scale(1);
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      basis *= QPoly(QCtx{}, {-xs[j], Rational(1)});
      scale *= xs[i] - xs[j];
    }
    out += basis.scaled(ys[i] / scale);
  }
  return out;
}

}  // namespace pcurv
