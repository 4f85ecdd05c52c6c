#include "pcurv/pcurvature.hpp"

#include <algorithm>

#include "pcurv/linalg.hpp"

namespace pcurv {

namespace {

FpPoly poly_lcm(const FpPoly& a, const FpPoly& b) { return (a / poly_gcd(a, b) * b).monic(); }

FpPolyMatrix poly_identity(std::size_t n, FpCtx c) {
  FpPolyMatrix m(n, n, FpPoly(c));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FpPoly::one(c);
  return m;
}

// Numerator matrix of the companion matrix: B = N / f.
FpPolyMatrix companion_numerator(const CommonDenominatorForm& form) {
  FpCtx c = fp_ctx(form.p);
  FpPolyMatrix m(form.n, form.n, FpPoly(c));
  for (int i = 0; i + 1 < form.n; ++i) m(i, i + 1) = -form.f;
  for (int j = 0; j < form.n; ++j) m(form.n - 1, j) = form.num[j];
  return m;
}

FpRFMatrix over_denominator(const FpPolyMatrix& num, const FpPoly& den) {
  FpRFMatrix r(num.rows(), num.cols(), FpRatFun(den.ctx()));
  for (std::size_t i = 0; i < num.rows(); ++i)
    for (std::size_t j = 0; j < num.cols(); ++j) r(i, j) = FpRatFun(num(i, j), den);
  return r;
}

Fp fp_int(std::uint64_t p, long long v) { return Fp(v, p); }

}  // namespace

const char* method_name(PCurvMethod m) {
  switch (m) {
    case PCurvMethod::Recurrence: return "recurrence";
    case PCurvMethod::Remainders: return "remainders";
    case PCurvMethod::LocalSeriesCrt: return "local-series-crt";
  }
  return "unknown";
}

const char* status_name(PCurvStatus s) {
  switch (s) {
    case PCurvStatus::Zero: return "zero";
    case PCurvStatus::NilpotentNonzero: return "nilpotent-nonzero";
    case PCurvStatus::Nonzero: return "nonzero";
    case PCurvStatus::BadReduction: return "bad-reduction";
  }
  return "unknown";
}

CommonDenominatorForm common_denominator_form(const FpOp& l) {
  FpOp m = l.monic();
  CommonDenominatorForm form;
  form.p = FieldTraits<Fp>::characteristic(m.ctx());
  FpCtx c = fp_ctx(form.p);
  form.n = m.order();
  form.f = FpPoly::one(c);
  for (int i = 0; i < form.n; ++i) form.f = poly_lcm(form.f, m.coeff(i).den());
  form.d = form.f.degree();
  for (int i = 0; i < form.n; ++i) {
    const FpRatFun& b = m.coeff(i);
    form.num.push_back(b.num() * (form.f / b.den()));
    form.d = std::max(form.d, form.num.back().degree());
  }
  return form;
}

std::vector<FpPolyMatrix> recurrence_numerators(const CommonDenominatorForm& form, unsigned count) {
  FpCtx c = fp_ctx(form.p);
  const FpPolyMatrix nm = companion_numerator(form);
  const FpPoly fd = form.f.derivative();
  std::vector<FpPolyMatrix> out{poly_identity(form.n, c)};
  for (unsigned k = 0; k < count; ++k) {
    const FpPolyMatrix& ck = out.back();
    FpPolyMatrix next = mat_mul(nm, ck, FpPoly(c));
    Fp kk = fp_int(form.p, static_cast<long long>(k % form.p));
    FpPoly kfd = fd.scaled(kk);
    for (int i = 0; i < form.n; ++i)
      for (int j = 0; j < form.n; ++j) {
        const FpPoly& e = ck(i, j);
        if (e.is_zero()) continue;
        next(i, j) += form.f * e.derivative() - kfd * e;
      }
    out.push_back(std::move(next));
  }
  return out;
}

PCurvatureMatrix pcurvature_recurrence(const FpOp& l) {
  CommonDenominatorForm form = common_denominator_form(l);
  auto cs = recurrence_numerators(form, static_cast<unsigned>(form.p));
  return {form.p, PCurvMethod::Recurrence, over_denominator(cs.back(), form.f.pow(form.p))};
}

FpRatFun pcurvature_order1_closed_form(const FpRatFun& b) {
  const std::uint64_t p = FieldTraits<Fp>::characteristic(b.ctx());
  if (p == 0) throw MathError(ErrorKind::InvalidArgument, "closed form needs a prime field");
  if (b.is_zero()) return b;
  // b^(k) = q_k / f^(k+1) with q_{k+1} = f q_k' - (k+1) f' q_k
  const FpPoly& f = b.den();
  const FpPoly fd = f.derivative();
  FpPoly q = b.num();
  for (std::uint64_t k = 0; k + 1 < p; ++k) q = f * q.derivative() - fd.scaled(fp_int(p, static_cast<long long>((k + 1) % p))) * q;
  return FpRatFun(q + b.num().pow(p), f.pow(p));
}

namespace {

// P_k with rem(Dx^k, L) = sum_i P_k[i] / f^k Dx^i.
struct RemainderIter {
  const CommonDenominatorForm& form;
  FpPoly fd;
  std::vector<FpPoly> cur;
  std::uint64_t k = 0;

  explicit RemainderIter(const CommonDenominatorForm& f) : form(f), fd(f.f.derivative()) {
    FpCtx c = fp_ctx(f.p);
    cur.assign(f.n, FpPoly(c));
    cur[0] = FpPoly::one(c);
  }
  void step() {
    const int n = form.n;
    FpCtx c = fp_ctx(form.p);
    Fp kk = fp_int(form.p, static_cast<long long>(k % form.p));
    std::vector<FpPoly> nx(n, FpPoly(c));
    const FpPoly top = cur[n - 1];
    for (int i = 0; i < n; ++i) {
      FpPoly v = form.f * cur[i].derivative() - fd.scaled(kk) * cur[i];
      if (i > 0) v += form.f * cur[i - 1];
      if (!top.is_zero()) v -= top * form.num[i];
      nx[i] = std::move(v);
    }
    cur = std::move(nx);
    ++k;
  }
  FpOp as_op() const {
    FpCtx c = fp_ctx(form.p);
    FpPoly den = form.f.pow(static_cast<unsigned>(k));
    std::vector<FpRatFun> a;
    for (const auto& v : cur) a.push_back(FpRatFun(v, den));
    return FpOp(c, std::move(a));
  }
};

}  // namespace

FpOp remainder_of_d_power(const FpOp& l, std::uint64_t k) {
  CommonDenominatorForm form = common_denominator_form(l);
  RemainderIter it(form);
  while (it.k < k) it.step();
  return it.as_op();
}

PCurvatureMatrix pcurvature_via_remainders(const FpOp& l) {
  CommonDenominatorForm form = common_denominator_form(l);
  FpCtx c = fp_ctx(form.p);
  RemainderIter it(form);
  while (it.k < form.p) it.step();
  // column i of R holds rem(Dx^(p+i)); the p-curvature is -R^T
  FpRFMatrix b(form.n, form.n, FpRatFun(c));
  for (int j = 0; j < form.n; ++j) {
    FpPoly den = form.f.pow(static_cast<unsigned>(it.k));
    for (int i = 0; i < form.n; ++i) b(j, i) = FpRatFun(-it.cur[i], den);
    if (j + 1 < form.n) it.step();
  }
  return {form.p, PCurvMethod::Remainders, b};
}

namespace {

struct FactorialTable {
  std::vector<Fp> fact, inv_fact;
  FactorialTable(std::uint64_t p, std::size_t upto) {
    fact.push_back(Fp::raw(1, p));
    for (std::size_t i = 1; i <= upto; ++i) fact.push_back(fact.back() * Fp(static_cast<long long>(i % p), p));
    for (const auto& v : fact) inv_fact.push_back(v.is_zero() ? v : v.inv());
  }
};

using FpMat = Matrix<Fp>;

FpMat fp_identity(std::size_t n, std::uint64_t p) {
  FpMat m(n, n, Fp::raw(0, p));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Fp::raw(1, p);
  return m;
}

void add_scaled_product(FpMat& acc, const Fp& s, const FpMat& a, const FpMat& b) {
  if (s.is_zero()) return;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k).is_zero()) continue;
      Fp t = s * a(i, k);
      for (std::size_t j = 0; j < n; ++j) acc(i, j) += t * b(k, j);
    }
}

}  // namespace

Fp binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  Fp r = Fp::raw(1, p);
  while (n || k) {
    std::uint64_t a = n % p, b = k % p;
    if (b > a) return Fp::raw(0, p);
    Fp num = Fp::raw(1, p), den = Fp::raw(1, p);
    for (std::uint64_t i = 0; i < b; ++i) {
      num *= Fp(static_cast<long long>(a - i), p);
      den *= Fp(static_cast<long long>(i + 1), p);
    }
    r *= num / den;
    n /= p;
    k /= p;
  }
  return r;
}

PCurvatureMatrix pcurvature_local_series_crt(const FpOp& l, const std::optional<std::vector<std::uint64_t>>& points) {
  CommonDenominatorForm form = common_denominator_form(l);
  const std::uint64_t p = form.p;
  FpCtx c = fp_ctx(p);
  const std::size_t n = form.n;
  const std::size_t need = static_cast<std::size_t>(form.d) + 1;  // count * p > d * p

  std::vector<std::uint64_t> pts;
  if (points) {
    for (auto a : *points) {
      if (form.f.eval(Fp(static_cast<long long>(a % p), p)).is_zero())
        throw MathError(ErrorKind::PoleAtSamplePoint, "sample point " + std::to_string(a) + " is a pole");
      if (std::find(pts.begin(), pts.end(), a % p) == pts.end()) pts.push_back(a % p);
    }
    if (pts.size() < need)
      throw MathError(ErrorKind::NotEnoughSamplePoints,
                      "need " + std::to_string(need) + " sample points, got " + std::to_string(pts.size()));
  } else {
    for (std::uint64_t a = 0; a < p && pts.size() < need; ++a)
      if (!form.f.eval(Fp::raw(a, p)).is_zero()) pts.push_back(a);
    if (pts.size() < need)
      throw MathError(ErrorKind::NotEnoughSamplePoints,
                      "F_" + std::to_string(p) + " has only " + std::to_string(pts.size()) +
                          " regular points, degree bound needs " + std::to_string(need));
  }

  const FpPolyMatrix nm = companion_numerator(form);
  FactorialTable ft(p, p - 1);

  FpPolyMatrix acc(n, n, FpPoly(c));
  FpPoly modulus = FpPoly::one(c);
  for (std::uint64_t a : pts) {
    Fp fa = Fp::raw(a, p);
    // B(a + t) mod t^p
    auto finv = TruncatedSeries<Fp>::from_polynomial(form.f.taylor_shift(fa), p).inv();
    std::vector<FpMat> beta(p, FpMat(n, n, Fp::raw(0, p)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (nm(i, j).is_zero()) continue;
        auto s = TruncatedSeries<Fp>::from_polynomial(nm(i, j).taylor_shift(fa), p) * finv;
        for (std::size_t m = 0; m < p; ++m) beta[m](i, j) = s[m] * ft.fact[m];
      }
    // Hurwitz solution of S' = -B S with S(a) = I, coefficients 0..2p-1
    std::vector<FpMat> s{fp_identity(n, p)};
    for (std::size_t k = 0; k + 1 < 2 * p; ++k) {
      FpMat next(n, n, Fp::raw(0, p));
      for (std::size_t m = 0; m <= std::min<std::size_t>(k, p - 1); ++m)
        add_scaled_product(next, -binomial_mod_p(k, m, p), beta[m], s[k - m]);
      s.push_back(std::move(next));
    }
    // V = S^{-1} in the Hurwitz ring
    std::vector<FpMat> v{fp_identity(n, p)};
    for (std::size_t k = 1; k < p; ++k) {
      FpMat next(n, n, Fp::raw(0, p));
      for (std::size_t m = 1; m <= k; ++m) add_scaled_product(next, -binomial_mod_p(k, m, p), s[m], v[k - m]);
      v.push_back(std::move(next));
    }
    // B_p^dp = -S^(p) V, back to ordinary coefficients, times f(a) = f^p mod t^p
    FpPolyMatrix local(n, n, FpPoly(c));
    std::vector<FpMat> w;
    for (std::size_t k = 0; k < p; ++k) {
      FpMat wk(n, n, Fp::raw(0, p));
      for (std::size_t m = 0; m <= k; ++m) add_scaled_product(wk, binomial_mod_p(k, m, p), s[m + p], v[k - m]);
      w.push_back(std::move(wk));
    }
    Fp fval = form.f.eval(fa);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Fp> cs(p, Fp::raw(0, p));
        for (std::size_t k = 0; k < p; ++k) cs[k] = -w[k](i, j) * ft.inv_fact[k] * fval;
        local(i, j) = FpPoly(c, std::move(cs)).taylor_shift(-fa);
      }
    // CRT step against (x - a)^p
    FpPoly mod_a = FpPoly(c, {-fa, Fp::raw(1, p)}).pow(static_cast<unsigned>(p));
    FpPoly inv = modulus.is_one() ? FpPoly::one(c) : poly_inv_mod(modulus % mod_a, mod_a);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        FpPoly diff = ((local(i, j) - acc(i, j)) % mod_a) * inv % mod_a;
        acc(i, j) += modulus * diff;
      }
    modulus *= mod_a;
  }
  return {p, PCurvMethod::LocalSeriesCrt, over_denominator(acc, form.f.pow(static_cast<unsigned>(p)))};
}

std::vector<FpPoly> berkowitz_charpoly(const FpPolyMatrix& a) {
  const std::size_t n = a.rows();
  FpCtx c = n ? a(0, 0).ctx() : FpCtx{};
  for (std::size_t i = 0; i < n && c.p == 0; ++i)
    for (std::size_t j = 0; j < n && c.p == 0; ++j) c = a(i, j).ctx();
  // vec[k] is the coefficient of lambda^(r-k) for the leading r x r block
  std::vector<FpPoly> vec{FpPoly::one(c)};
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<FpPoly> q{FpPoly::one(c), -a(r, r)};
    // powers A_r^k S applied from the right, row R from the left
    std::vector<FpPoly> col(r, FpPoly(c));
    for (std::size_t i = 0; i < r; ++i) col[i] = a(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      FpPoly dot(c);
      for (std::size_t i = 0; i < r; ++i)
        if (!a(r, i).is_zero() && !col[i].is_zero()) dot += a(r, i) * col[i];
      q.push_back(-dot);
      std::vector<FpPoly> nx(r, FpPoly(c));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          if (!a(i, j).is_zero() && !col[j].is_zero()) nx[i] += a(i, j) * col[j];
      col = std::move(nx);
    }
    std::vector<FpPoly> nv(r + 2, FpPoly(c));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j)
        if (i - j < q.size() && !q[i - j].is_zero() && !vec[j].is_zero()) nv[i] += q[i - j] * vec[j];
    vec = std::move(nv);
  }
  std::vector<FpPoly> out(n + 1, FpPoly(c));
  for (std::size_t k = 0; k <= n; ++k) out[n - k] = vec[k];
  return out;
}

std::vector<FpRatFun> pcurvature_charpoly(const PCurvatureMatrix& m) {
  const std::size_t n = m.entries.rows();
  FpCtx c = fp_ctx(m.prime);
  FpPoly g = FpPoly::one(c);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g = poly_lcm(g, m.entries(i, j).den());
  FpPolyMatrix num(n, n, FpPoly(c));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) num(i, j) = m.entries(i, j).num() * (g / m.entries(i, j).den());
  auto cp = berkowitz_charpoly(num);
  std::vector<FpRatFun> out;
  for (std::size_t k = 0; k <= n; ++k) out.push_back(FpRatFun(cp[k], g.pow(static_cast<unsigned>(n - k))));
  return out;
}

std::vector<FpPoly> polynomial_solutions(const FpOp& l, int bound) {
  CommonDenominatorForm form = common_denominator_form(l);
  const std::uint64_t p = form.p;
  FpCtx c = fp_ctx(p);
  if (bound <= 0) return {};
  std::vector<FpPoly> coef = form.num;
  coef.push_back(form.f);
  int maxdeg = 0;
  for (const auto& a : coef) maxdeg = std::max(maxdeg, a.degree());
  const std::size_t rows = static_cast<std::size_t>(bound + maxdeg + 1);
  const std::size_t cols = static_cast<std::size_t>(bound);
  ModMatrix mat(rows, cols, p);
  for (std::size_t j = 0; j < cols; ++j) {
    Fp ff = Fp::raw(1, p);  // falling factorial j (j-1) ... (j-i+1)
    for (int i = 0; i <= form.n; ++i) {
      if (i > 0) ff *= Fp(static_cast<long long>(j) - (i - 1), p);
      if (ff.is_zero()) break;
      if (static_cast<int>(j) < i) break;
      const FpPoly& a = coef[i];
      for (int e = 0; e <= a.degree(); ++e) {
        if (a.coeff(e).is_zero()) continue;
        std::size_t row = j - i + e;
        mat.add(row, j, (a.coeff(e) * ff).value());
      }
    }
  }
  auto kernel = mat.nullspace();
  std::vector<FpPoly> out;
  for (auto& v : kernel) {
    std::vector<Fp> cs;
    for (auto x : v) cs.push_back(Fp::raw(x, p));
    out.emplace_back(c, std::move(cs));
  }
  return out;
}

std::vector<FpPoly> independent_over_frobenius(const std::vector<FpPoly>& sols, std::size_t limit) {
  std::vector<FpPoly> chosen;
  if (sols.empty()) return chosen;
  const std::uint64_t p = FieldTraits<Fp>::characteristic(sols[0].ctx());
  FpCtx c = fp_ctx(p);
  // components y = sum_r x^r Y_r(x^p), echelon rows over F_p(u)
  std::vector<std::vector<FpRatFun>> rows;
  std::vector<std::size_t> pivots;
  for (const auto& y : sols) {
    if (chosen.size() >= limit) break;
    std::vector<std::vector<Fp>> parts(p);
    for (std::size_t e = 0; e < y.coeffs().size(); ++e) {
      auto& part = parts[e % p];
      std::size_t q = e / p;
      if (part.size() <= q) part.resize(q + 1, Fp::raw(0, p));
      part[q] = y.coeffs()[e];
    }
    std::vector<FpRatFun> v;
    for (auto& part : parts) v.push_back(FpRatFun(FpPoly(c, part)));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto& piv = v[pivots[r]];
      if (piv.is_zero()) continue;
      FpRatFun factor = piv / rows[r][pivots[r]];
      for (std::size_t k = 0; k < p; ++k)
        if (!rows[r][k].is_zero()) v[k] = v[k] - factor * rows[r][k];
    }
    auto it = std::find_if(v.begin(), v.end(), [](const FpRatFun& e) { return !e.is_zero(); });
    if (it == v.end()) continue;
    pivots.push_back(static_cast<std::size_t>(it - v.begin()));
    rows.push_back(std::move(v));
    chosen.push_back(y);
  }
  return chosen;
}

PCurvatureReport cartier_test(const FpOp& l) {
  PCurvatureReport rep;
  FpOp m = l.monic();
  CommonDenominatorForm form = common_denominator_form(m);
  rep.prime = form.p;
  rep.matrix = pcurvature_recurrence(m);
  rep.remainder = remainder_of_d_power(m, form.p);
  rep.charpoly = pcurvature_charpoly(rep.matrix);
  const int d = std::max(1, coefficient_degree_bound(m));
  rep.degree_bound = static_cast<int>(form.p) * d;
  if (rep.matrix.is_zero()) {
    rep.status = PCurvStatus::Zero;
    rep.basis = independent_over_frobenius(polynomial_solutions(m, rep.degree_bound), form.n);
    return rep;
  }
  bool nilpotent = true;
  for (int k = 0; k < form.n; ++k) nilpotent = nilpotent && rep.charpoly[k].is_zero();
  rep.status = nilpotent ? PCurvStatus::NilpotentNonzero : PCurvStatus::Nonzero;
  return rep;
}

FpRFMatrix fundamental_matrix_at(const FpOp& l, std::uint64_t a_int) {
  CommonDenominatorForm form = common_denominator_form(l);
  const std::uint64_t p = form.p;
  FpCtx c = fp_ctx(p);
  Fp a = Fp(static_cast<long long>(a_int % p), p);
  if (form.f.eval(a).is_zero()) throw MathError(ErrorKind::PoleAtBasePoint, "base point is a pole");
  auto cs = recurrence_numerators(form, static_cast<unsigned>(p));
  if (!mat_is_zero(cs.back())) throw MathError(ErrorKind::NonzeroPCurvature, "p-curvature is not zero");
  const std::size_t n = form.n;
  FactorialTable ft(p, p - 1);
  FpPolyMatrix num(n, n, FpPoly(c));
  FpPoly xa = FpPoly(c, {-a, Fp::raw(1, p)});
  FpPoly xak = FpPoly::one(c);
  std::vector<FpPoly> fpow{FpPoly::one(c)};
  for (std::uint64_t k = 1; k < p; ++k) fpow.push_back(fpow.back() * form.f);
  for (std::uint64_t k = 0; k < p; ++k) {
    Fp coef = ft.inv_fact[k] * (k % 2 ? Fp(-1, p) : Fp(1, p));
    FpPoly scale = (xak * fpow[p - 1 - k]).scaled(coef);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!cs[k](i, j).is_zero()) num(i, j) += scale * cs[k](i, j);
    xak *= xa;
  }
  return over_denominator(num, fpow[p - 1]);
}

bool HurwitzSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Fp& v) { return v.is_zero(); });
}

HurwitzSeries operator+(const HurwitzSeries& a, const HurwitzSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  HurwitzSeries r(a.p_ ? a.p_ : b.p_, n);
  for (std::size_t i = 0; i < n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

HurwitzSeries operator-(const HurwitzSeries& a, const HurwitzSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  HurwitzSeries r(a.p_ ? a.p_ : b.p_, n);
  for (std::size_t i = 0; i < n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
  return r;
}

HurwitzSeries operator*(const HurwitzSeries& a, const HurwitzSeries& b) {
  std::size_t n = std::min(a.order(), b.order());
  std::uint64_t p = a.p_ ? a.p_ : b.p_;
  HurwitzSeries r(p, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (!b.c_[j].is_zero()) r.c_[i + j] += binomial_mod_p(i + j, i, p) * a.c_[i] * b.c_[j];
  }
  return r;
}

HurwitzSeries HurwitzSeries::derivative() const { return derivative(1); }

HurwitzSeries HurwitzSeries::derivative(std::size_t k) const {
  if (k >= c_.size()) return HurwitzSeries(p_, 0);
  return HurwitzSeries(p_, std::vector<Fp>(c_.begin() + static_cast<long>(k), c_.end()));
}

HurwitzSeries HurwitzSeries::from_series(const TruncatedSeries<Fp>& s) {
  std::uint64_t p = FieldTraits<Fp>::characteristic(s.ctx());
  HurwitzSeries r(p, s.order());
  Fp fact = Fp::raw(1, p);
  for (std::size_t k = 0; k < s.order(); ++k) {
    if (k > 0) fact *= Fp(static_cast<long long>(k % p), p);
    r.c_[k] = s[k] * fact;
  }
  return r;
}

namespace {

// Hurwitz images m! [x^m] M(x) of a rational matrix regular at 0.
std::vector<FpMat> hurwitz_coefficients(const FpRFMatrix& m, std::size_t t, std::uint64_t p) {
  const std::size_t n = m.rows();
  std::vector<FpMat> out(t, FpMat(n, m.cols(), Fp::raw(0, p)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      auto h = HurwitzSeries::from_series(TruncatedSeries<Fp>::from_ratfun(m(i, j), t));
      for (std::size_t k = 0; k < t; ++k) out[k](i, j) = h[k];
    }
  return out;
}

}  // namespace

HurwitzMatrix hurwitz_fundamental_solution(const FpOp& l, std::size_t t) {
  FpOp m = l.monic();
  const std::uint64_t p = FieldTraits<Fp>::characteristic(m.ctx());
  if (t < p) throw MathError(ErrorKind::TruncationTooSmall, "Hurwitz truncation must be at least p");
  for (const auto& a : m.coeffs())
    if (a.den().coeff(0).is_zero()) throw MathError(ErrorKind::PoleAtOrigin, "companion matrix has a pole at 0");
  const std::size_t n = m.order();
  auto beta = hurwitz_coefficients(companion_matrix(m), t, p);
  std::vector<FpMat> s{fp_identity(n, p)};
  for (std::size_t k = 0; k + 1 < t; ++k) {
    FpMat next(n, n, Fp::raw(0, p));
    for (std::size_t q = 0; q <= k; ++q) add_scaled_product(next, -binomial_mod_p(k, q, p), beta[q], s[k - q]);
    s.push_back(std::move(next));
  }
  HurwitzMatrix out(n, n, HurwitzSeries(p, t));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < t; ++k) out(i, j)[k] = s[k](i, j);
  return out;
}

bool hurwitz_relation_holds(const FpOp& l, const HurwitzMatrix& s) {
  const std::size_t n = s.rows();
  if (n == 0) return true;
  const std::uint64_t p = s(0, 0).prime();
  const std::size_t t = s(0, 0).order();
  if (t <= p) return true;
  auto bp = pcurvature_recurrence(l).entries;
  auto beta = hurwitz_coefficients(bp, t - p, p);
  // (B_p^dp S)_k = sum_m binom(k, m) beta_m S_{k-m}
  for (std::size_t k = 0; k + p < t; ++k) {
    FpMat rhs(n, n, Fp::raw(0, p));
    for (std::size_t m = 0; m <= k; ++m) {
      FpMat sk(n, n, Fp::raw(0, p));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sk(i, j) = s(i, j)[k - m];
      add_scaled_product(rhs, -binomial_mod_p(k, m, p), beta[m], sk);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (s(i, j)[k + p] != rhs(i, j)) return false;
  }
  return true;
}

SeriesCongruence order1_series_congruence(const FpRatFun& b, std::size_t count) {
  const std::uint64_t p = FieldTraits<Fp>::characteristic(b.ctx());
  SeriesCongruence out;
  if (b.is_zero()) return out;
  if (b.den().coeff(0).is_zero()) throw MathError(ErrorKind::PoleAtOrigin, "b has a pole at 0");
  auto u = TruncatedSeries<Fp>::from_ratfun(b, (count + 1) * p);
  for (std::size_t k = 0; k < count; ++k)
    if (u[k] != u[(k + 1) * p - 1]) {
      out.holds = false;
      out.first_failure = static_cast<long>(k);
      return out;
    }
  return out;
}

std::vector<Matrix<Rational>> char0_fundamental_series(const QOp& l, std::size_t t) {
  QOp m = l.monic();
  for (const auto& a : m.coeffs())
    if (a.den().coeff(0).is_zero()) throw MathError(ErrorKind::PoleAtOrigin, "companion matrix has a pole at 0");
  const std::size_t n = m.order();
  auto b = companion_matrix(m);
  std::vector<Matrix<Rational>> bc(t, Matrix<Rational>(n, n, Rational()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (b(i, j).is_zero()) continue;
      auto s = TruncatedSeries<Rational>::from_ratfun(b(i, j), t);
      for (std::size_t k = 0; k < t; ++k) bc[k](i, j) = s[k];
    }
  std::vector<Matrix<Rational>> s;
  Matrix<Rational> id(n, n, Rational());
  for (std::size_t i = 0; i < n; ++i) id(i, i) = Rational(1);
  s.push_back(id);
  for (std::size_t k = 0; k + 1 < t; ++k) {
    Matrix<Rational> acc(n, n, Rational());
    for (std::size_t q = 0; q <= k; ++q) {
      auto prod = mat_mul(bc[q], s[k - q], Rational());
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) acc(i, j) -= prod(i, j);
    }
    Rational scale = Rational(1) / Rational(static_cast<long long>(k + 1));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) acc(i, j) *= scale;
    s.push_back(std::move(acc));
  }
  return s;
}

namespace {

long matrix_valuation(const Matrix<Rational>& m, std::uint64_t p) {
  long v = kInfiniteValuation;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v = std::min(v, valuation(m(i, j), p));
  return v;
}

// B_p(0) over Q through truncated series: B_{k+1} = B_k' + B B_k.
Matrix<Rational> char0_bp_at_zero(const QOp& m, std::uint64_t p) {
  const std::size_t n = m.order();
  const std::size_t t = p + 1;
  auto b = companion_matrix(m);
  using S = TruncatedSeries<Rational>;
  Matrix<S> bs(n, n, S(QCtx{}, t));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!b(i, j).is_zero()) bs(i, j) = S::from_ratfun(b(i, j), t);
  Matrix<S> bk(n, n, S(QCtx{}, t));
  for (std::size_t i = 0; i < n; ++i) bk(i, i)[0] = Rational(1);
  for (std::uint64_t k = 0; k < p; ++k) {
    std::size_t ord = bk(0, 0).order() - 1;
    Matrix<S> next(n, n, S(QCtx{}, ord));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        S acc = bk(i, j).derivative();
        for (std::size_t q = 0; q < n; ++q) acc = acc + bs(i, q).truncated(ord) * bk(q, j).truncated(ord);
        next(i, j) = acc;
      }
    bk = std::move(next);
  }
  Matrix<Rational> out(n, n, Rational());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = bk(i, j)[0];
  return out;
}

}  // namespace

Char0Relations char0_series_relations(const QOp& l, std::uint64_t p, std::size_t t) {
  Char0Relations rep;
  rep.prime = p;
  rep.truncation = t;
  QOp m = l.monic();
  FpOp lp = reduce_op_mod_p(m, p).monic();
  for (const auto& a : lp.coeffs())
    if (a.den().coeff(0).is_zero())
      throw MathError(ErrorKind::PoleAtOrigin, "reduced companion matrix has a pole at 0");
  auto s = char0_fundamental_series(m, t);
  rep.pcurvature_zero = pcurvature_recurrence(lp).is_zero();

  if (t > p) {
    rep.sp_available = true;
    rep.s_p = s[p];
    rep.bp_at_zero = char0_bp_at_zero(m, p);
    Rational pf(factorial(static_cast<unsigned>(p)));
    const std::size_t n = m.order();
    bool plus = true, minus = true, cong = true;
    Rational sgn = (p % 2) ? Rational(-1) : Rational(1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational lhs = s[p](i, j) * pf;
        plus = plus && lhs == rep.bp_at_zero(i, j);
        minus = minus && lhs == -rep.bp_at_zero(i, j);
        cong = cong && valuation(lhs - sgn * rep.bp_at_zero(i, j), p) >= 1;
      }
    rep.sign = plus ? 1 : (minus ? -1 : 0);
    rep.congruence_holds = cong;
  }

  rep.strong_bound_checked = rep.pcurvature_zero;
  for (std::size_t i = 0; i < t; ++i) {
    long v = matrix_valuation(s[i], p);
    rep.valuations.push_back(v);
    if (rep.weak_bound_holds && static_cast<long>(p - 1) * v < -static_cast<long>(i)) {
      rep.weak_bound_holds = false;
      rep.weak_first_violation = static_cast<long>(i);
    }
    if (rep.strong_bound_checked && rep.strong_bound_holds) {
      long bound = -valuation(factorial(static_cast<unsigned>(i / p)), p);
      if (v < bound) {
        rep.strong_bound_holds = false;
        rep.strong_first_violation = static_cast<long>(i);
      }
    }
  }
  return rep;
}

}  // namespace pcurv
