#include "pcurv/criteria.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "pcurv/linalg.hpp"
#include "pcurv/roots.hpp"

namespace pcurv {

namespace {

Rational frac(const Rational& q) {
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
  return q - Rational(f);
}

// Multiplication by r on Q[x]/(q) in the monomial basis.
Matrix<Rational> multiplication_matrix(const QPoly& r, const QPoly& q) {
  const int n = q.degree();
  Matrix<Rational> m(n, n, Rational());
  QPoly xj = QPoly::one(QCtx{});
  for (int j = 0; j < n; ++j) {
    QPoly col = (r * xj) % q;
    for (int i = 0; i < n; ++i) m(i, j) = col.coeff(i);
    xj = xj.shifted(1) % q;
  }
  return m;
}

}  // namespace

Order1Verdict order1_char0_classify(const QRatFun& a) {
  Order1Verdict v;
  const QPoly& n = a.num();
  const QPoly& d = a.den();
  v.vanishes_at_infinity = n.degree() < d.degree();
  if (d.degree() <= 0) {
    v.has_algebraic_solution = v.has_rational_solution = a.is_zero();
    return v;
  }
  bool all_simple_rational = true, all_integral = true;
  const QPoly dd = d.derivative();
  for (const auto& sf : squarefree_decomposition(d)) {
    if (sf.multiplicity > 1) {
      Order1Factor f;
      f.factor = sf.factor;
      f.multiplicity = sf.multiplicity;
      v.factors.push_back(f);
      all_simple_rational = false;
      continue;
    }
    const QPoly& q = sf.factor;
    QPoly r = (n * poly_inv_mod(dd % q, q)) % q;
    // residues at the roots of q are the roots of the characteristic polynomial of r
    QPoly chi = rational_charpoly(multiplication_matrix(r, q));
    auto roots = rational_roots(chi);
    QPoly rest = q;
    for (const auto& root : roots) {
      QPoly qc = poly_gcd(q, n - dd.scaled(root.value));
      Order1Factor f;
      f.factor = qc;
      f.residue_constant = true;
      f.residue = root.value;
      f.residue_integral = root.value.is_integer();
      all_integral = all_integral && f.residue_integral;
      v.factors.push_back(f);
      rest = rest / qc;
    }
    if (rest.degree() > 0) {
      Order1Factor f;
      f.factor = rest;
      v.factors.push_back(f);
      all_simple_rational = false;
    }
  }
  v.has_algebraic_solution = v.vanishes_at_infinity && all_simple_rational;
  v.has_rational_solution = v.has_algebraic_solution && all_integral;
  return v;
}

bool order1_charp_has_rational(const FpRatFun& b) { return pcurvature_order1_closed_form(b).is_zero(); }

const char* hypergeom_class_name(HypergeomClass c) {
  return c == HypergeomClass::Algebraic ? "Algebraic" : "Transcendental";
}

HypergeomVerdict hypergeom_classify(const HypergeomParams& params) {
  if (params.upper.empty()) throw MathError(ErrorKind::EmptyParams, "no upper parameters");
  std::vector<Rational> lower = params.lower;
  lower.push_back(Rational(1));
  if (params.upper.size() != lower.size())
    throw MathError(ErrorKind::InvalidArgument, "need one more upper parameter than lower parameters");
  for (const auto& a : params.upper)
    for (const auto& b : lower)
      if ((a - b).is_integer())
        throw MathError(ErrorKind::Reducible, "parameters " + a.str() + " and " + b.str() + " differ by an integer");
  HypergeomVerdict v;
  BigInt den = 1;
  for (const auto& a : params.upper) den = lcm(den, a.den());
  for (const auto& b : lower) den = lcm(den, b.den());
  v.common_denominator = den;
  if (!den.fits_slong_p() || den.get_si() > 1000000)
    throw MathError(ErrorKind::InvalidArgument, "common denominator too large");
  const long dl = den.get_si();
  bool all = true;
  for (long ell = 1; ell < std::max(dl, 2L); ++ell) {
    if (std::gcd(ell, dl) != 1) continue;
    std::vector<std::pair<Rational, char>> pts;
    for (const auto& a : params.upper) pts.emplace_back(frac(a * Rational(ell)), 'a');
    for (const auto& b : lower) pts.emplace_back(frac(b * Rational(ell)), 'b');
    std::sort(pts.begin(), pts.end(), [](const auto& x, const auto& y) {
      return x.first < y.first || (x.first == y.first && x.second < y.second);
    });
    InterlacingCertificate cert;
    cert.ell = ell;
    bool ok = true;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      cert.pattern += pts[i].second;
      if (i > 0 && (pts[i].second == pts[i - 1].second || pts[i].first == pts[i - 1].first)) ok = false;
    }
    cert.interlaces = ok;
    all = all && ok;
    v.certificates.push_back(cert);
  }
  v.verdict = all ? HypergeomClass::Algebraic : HypergeomClass::Transcendental;
  return v;
}

PCurvStatus pcurvature_status(const FpOp& l) {
  PCurvatureMatrix m = pcurvature_recurrence(l);
  if (m.is_zero()) return PCurvStatus::Zero;
  auto cp = pcurvature_charpoly(m);
  for (std::size_t k = 0; k + 1 < cp.size(); ++k)
    if (!cp[k].is_zero()) return PCurvStatus::Nonzero;
  return PCurvStatus::NilpotentNonzero;
}

ScanReport grothendieck_scan(const QOp& l, std::uint64_t pmin, std::uint64_t pmax, unsigned workers) {
  ScanReport rep;
  rep.op = l.str();
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = std::max<std::uint64_t>(pmin, 2); p <= pmax; ++p)
    if (is_prime(p)) primes.push_back(p);
  if (primes.empty()) throw MathError(ErrorKind::InvalidArgument, "empty prime range");
  rep.entries.resize(primes.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < primes.size();) {
      ScanEntry e;
      e.prime = primes[i];
      try {
        e.status = pcurvature_status(reduce_op_mod_p(l, e.prime));
      } catch (const MathError& err) {
        if (err.kind() != ErrorKind::BadReduction) throw;
        e.status = PCurvStatus::BadReduction;
        e.reason = err.what();
      }
      rep.entries[i] = std::move(e);
    }
  };
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(primes.size()));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        try {
          work();
        } catch (...) {
          errs[w] = std::current_exception();
        }
      });
    for (auto& t : pool) t.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
  }
  for (const auto& e : rep.entries) {
    switch (e.status) {
      case PCurvStatus::Zero: ++rep.zero; break;
      case PCurvStatus::NilpotentNonzero: ++rep.nilpotent; break;
      case PCurvStatus::Nonzero: ++rep.nonzero; break;
      case PCurvStatus::BadReduction: ++rep.bad; break;
    }
    if (e.status != PCurvStatus::Zero) rep.exceptions.push_back(e.prime);
  }
  return rep;
}

namespace {

// Prime factors by trial division; a leftover cofactor is kept as is.
std::vector<BigInt> prime_factors(BigInt n) {
  std::vector<BigInt> out;
  n = abs(n);
  for (unsigned long q = 2; q < 1000000 && BigInt(q) * q <= n; ++q) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
      out.emplace_back(q);
      while (mpz_divisible_ui_p(n.get_mpz_t(), q)) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

long big_valuation(BigInt n, const BigInt& q) {
  long v = 0;
  while (n != 0 && mpz_divisible_p(n.get_mpz_t(), q.get_mpz_t())) {
    n /= q;
    ++v;
  }
  return v;
}

}  // namespace

EisensteinResult eisenstein_check(const TruncatedSeries<Rational>& s, std::size_t t, const BigInt& n_bound) {
  if (t < 2 || s.order() < t) throw MathError(ErrorKind::TruncationTooSmall, "need at least two coefficients");
  EisensteinResult r;
  r.truncation = t;
  std::vector<BigInt> primes;
  for (std::size_t k = 0; k < t; ++k)
    for (const auto& q : prime_factors(s[k].den()))
      if (std::find(primes.begin(), primes.end(), q) == primes.end()) primes.push_back(q);
  std::sort(primes.begin(), primes.end());
  if (!s[0].is_integer()) {
    r.witnesses = primes;
    return r;
  }
  BigInt n = 1;
  for (const auto& q : primes) {
    long need = 0;
    for (std::size_t k = 1; k < t; ++k) {
      long v = big_valuation(s[k].den(), q);
      need = std::max(need, (v + static_cast<long>(k) - 1) / static_cast<long>(k));
    }
    BigInt qp;
    mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(need));
    n *= qp;
  }
  if (n <= n_bound) {
    r.pass = true;
    r.n = n;
  } else {
    r.witnesses = primes;
  }
  return r;
}

IntegralityResult p_integrality_check(const QOp& l, const std::vector<Rational>& initial, std::uint64_t p,
                                      std::size_t t) {
  IntegralityResult r;
  r.prime = p;
  r.truncation = t;
  r.series = series_solve(l, initial, t);
  for (std::size_t i = 0; i < t; ++i) {
    long v = valuation(r.series[i], p);
    if (v < 0) {
      r.pass = false;
      r.first_failure = static_cast<long>(i);
      return r;
    }
    if (v == 0) r.reduced_degree = static_cast<int>(i);
  }
  r.factorial_scaled_vanishes = true;
  for (std::size_t n = p; n < t; ++n) {
    long v = valuation(r.series[n], p) + valuation(factorial(static_cast<unsigned>(n)), p);
    if (v < 1) r.factorial_scaled_vanishes = false;
  }
  return r;
}

LocalLogsResult local_logs_at_zero(const QOp& l) {
  QOp m = l.monic();
  const int n = m.order();
  if (n < 1) throw MathError(ErrorKind::InvalidArgument, "operator of order 0");
  if (n > 4) throw MathError(ErrorKind::UnsupportedOrder, "local log analysis supports order at most 4");
  LocalLogsResult res;
  res.ordinary = true;
  for (const auto& a : m.coeffs())
    if (a.den().coeff(0).is_zero()) res.ordinary = false;
  // q_i = x^(n-i) b_i must be regular at 0
  std::vector<QRatFun> q;
  for (int i = 0; i <= n; ++i) {
    QRatFun qi = QRatFun(m.coeff(i).num().shifted(n - i), m.coeff(i).den());
    if (qi.den().coeff(0).is_zero())
      throw MathError(ErrorKind::IrregularSingularPoint, "0 is an irregular singular point");
    q.push_back(qi);
  }
  auto indicial_at = [&](std::size_t order) {
    std::vector<TruncatedSeries<Rational>> qs;
    for (const auto& qi : q) qs.push_back(TruncatedSeries<Rational>::from_ratfun(qi, order));
    // P_j(s) = sum_i q_{i,j} ff(s, i)
    std::vector<QPoly> pj;
    for (std::size_t j = 0; j < order; ++j) {
      QPoly acc(QCtx{});
      for (int i = 0; i <= n; ++i)
        if (!qs[i][j].is_zero()) acc += falling_factorial_poly(i).scaled(qs[i][j]);
      pj.push_back(acc);
    }
    return pj;
  };
  res.indicial = indicial_at(1)[0];
  res.exponents = rational_roots(res.indicial);
  int rational_count = 0;
  QPoly rest = res.indicial;
  for (const auto& r : res.exponents) {
    rational_count += r.multiplicity;
    rest = rest / QPoly(QCtx{}, std::vector<Rational>{-r.value, Rational(1)}).pow(r.multiplicity);
  }
  res.irrational_root_count = n - rational_count;
  if (rest.degree() > 0) {
    if (poly_gcd(rest, rest.derivative()).degree() > 0) {
      res.logs_present = true;  // repeated irrational exponent
    } else {
      // integer differences between irrational exponents
      BigInt bound = 0;
      QPoly mr = rest.monic();
      for (int i = 0; i < mr.degree(); ++i) {
        Rational c = mr.coeff(i).abs();
        BigInt ceil_c = c.num() / c.den() + 1;
        bound = std::max(bound, ceil_c);
      }
      bound = 2 * (bound + 1);
      if (!bound.fits_slong_p() || bound.get_si() > 100000)
        throw MathError(ErrorKind::InvalidArgument, "indicial polynomial coefficients too large");
      for (long k = 1; k <= bound.get_si(); ++k)
        if (poly_gcd(mr, mr.taylor_shift(Rational(k))).degree() > 0)
          throw MathError(ErrorKind::InvalidArgument, "integer-spaced irrational exponents are not supported");
    }
  }
  // clusters of rational exponents congruent mod Z
  std::vector<bool> used(res.exponents.size(), false);
  for (std::size_t i = 0; i < res.exponents.size(); ++i) {
    if (used[i]) continue;
    LogCluster c;
    c.base = res.exponents[i].value;
    Rational top = c.base;
    for (std::size_t j = i; j < res.exponents.size(); ++j) {
      if (used[j] || !(res.exponents[j].value - c.base).is_integer()) continue;
      used[j] = true;
      c.multiplicity += res.exponents[j].multiplicity;
      top = res.exponents[j].value;
    }
    c.max_gap = static_cast<int>((top - c.base).num().get_si());
    const std::size_t order = static_cast<std::size_t>(c.max_gap) + 11;
    auto pj = indicial_at(order);
    // coefficient of x^(base+N): sum_j P_j(base + N - j) c_{N-j}
    std::vector<std::vector<Rational>> rows;
    for (std::size_t N = 0; N < order; ++N) {
      std::vector<Rational> row(order);
      for (std::size_t j = 0; j <= N; ++j) row[N - j] = pj[j].eval(c.base + Rational(static_cast<long long>(N - j)));
      rows.push_back(std::move(row));
    }
    c.log_free_dimension = static_cast<int>(rational_nullspace(rows, order).size());
    if (c.log_free_dimension < c.multiplicity) res.logs_present = true;
    res.clusters.push_back(c);
  }
  return res;
}

const char* kronecker_status_name(KroneckerStatus s) {
  switch (s) {
    case KroneckerStatus::True: return "true";
    case KroneckerStatus::False: return "false";
    case KroneckerStatus::Excluded: return "excluded";
    case KroneckerStatus::BadReduction: return "bad-reduction";
  }
  return "unknown";
}

KroneckerReport kronecker_scan(const QPoly& poly, std::uint64_t pmin, std::uint64_t pmax) {
  if (poly.degree() < 1) throw MathError(ErrorKind::InvalidArgument, "polynomial must have degree at least 1");
  if (poly_gcd(poly, poly.derivative()).degree() > 0)
    throw MathError(ErrorKind::InvalidArgument, "polynomial must be squarefree");
  KroneckerReport rep;
  for (std::uint64_t p = std::max<std::uint64_t>(pmin, 2); p <= pmax; ++p) {
    if (!is_prime(p)) continue;
    KroneckerStatus st;
    try {
      FpPoly fp = reduce_mod_p(poly, p);
      if (fp.degree() != poly.degree()) {
        st = KroneckerStatus::BadReduction;
      } else if (poly_gcd(fp, fp.derivative()).degree() > 0) {
        st = KroneckerStatus::Excluded;
      } else {
        FpCtx c = fp_ctx(p);
        FpPoly x = FpPoly::x(c);
        st = poly_powmod(x, p, fp) == x % fp ? KroneckerStatus::True : KroneckerStatus::False;
      }
    } catch (const MathError&) {
      st = KroneckerStatus::BadReduction;
    }
    rep.entries.emplace_back(p, st);
    if (st == KroneckerStatus::True) rep.true_primes.push_back(p);
  }
  return rep;
}

}  // namespace pcurv
