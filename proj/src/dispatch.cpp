#include "pcurv/dispatch.hpp"

#include <sstream>

#include "pcurv/criteria.hpp"
#include "pcurv/parser.hpp"

namespace pcurv {

namespace {

const char* const kCommands[] = {"divide",     "pcurvature", "cartier",   "scan",   "order1",   "hypergeom",
                                 "eisenstein", "integrality", "locallogs", "series", "diagonal", "kronecker",
                                 "relation",   nullptr};

bool has(const Json& a, const char* key) { return a.contains(key) && !a[key].is_null(); }

std::string str_arg(const Json& a, const char* key) {
  if (!has(a, key)) throw ArgError(std::string("missing required argument --") + key);
  const Json& v = a[key];
  return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string str_arg(const Json& a, const char* key, const std::string& dflt) {
  return has(a, key) ? str_arg(a, key) : dflt;
}

std::uint64_t u64_arg(const Json& a, const char* key) {
  std::string s = str_arg(a, key);
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18)
    throw ArgError(std::string("--") + key + " expects a nonnegative integer, got '" + s + "'");
  return std::stoull(s);
}

std::uint64_t u64_arg(const Json& a, const char* key, std::uint64_t dflt) { return has(a, key) ? u64_arg(a, key) : dflt; }

std::uint64_t prime_arg(const Json& a, const char* key = "prime") {
  std::uint64_t p = u64_arg(a, key);
  if (!is_prime(p)) throw ArgError("--" + std::string(key) + " must be a prime, got " + std::to_string(p));
  if (p >= (1ULL << 62)) throw ArgError("prime must be below 2^62");
  return p;
}

template <class K>
Json ratfun_json(const RationalFunction<K>& f) {
  return Json{{"num", f.num().str()}, {"den", f.den().str()}};
}

template <class K>
Json op_json(const DiffOp<K>& l) {
  Json cs = Json::array();
  for (const auto& c : l.coeffs()) cs.push_back(ratfun_json(c));
  return Json{{"text", l.str()}, {"order", l.order()}, {"coeffs", cs}};
}

template <class K>
Json series_json(const TruncatedSeries<K>& s) {
  Json out = Json::array();
  for (const auto& c : s.coeffs()) out.push_back(c.str());
  return out;
}

Json matrix_json(const FpRFMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(ratfun_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string matrix_text(const FpRFMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += "  [";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + m(i, j).str();
    out += "]\n";
  }
  return out;
}

std::string charpoly_text(const std::vector<FpRatFun>& cp) {
  std::string out;
  for (std::size_t k = cp.size(); k-- > 0;) {
    if (cp[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string lam = k == 0 ? "" : (k == 1 ? "lambda" : "lambda^" + std::to_string(k));
    if (cp[k].is_one() && k > 0)
      out += lam;
    else
      out += "(" + cp[k].str() + ")" + (k ? "*" + lam : "");
  }
  return out.empty() ? "0" : out;
}

Json charpoly_json(const std::vector<FpRatFun>& cp) {
  Json out = Json::array();
  for (const auto& c : cp) out.push_back(ratfun_json(c));
  return out;
}

template <class T>
Json int_strings(const std::vector<T>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(std::to_string(x));
  return out;
}

Json rationals_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

template <class T>
std::string join_nums(const std::vector<T>& v) {
  std::vector<std::string> s;
  for (const auto& x : v) {
    std::ostringstream o;
    o << x;
    s.push_back(o.str());
  }
  return "{" + join(s) + "}";
}

std::vector<Rational> init_arg(const Json& a, std::size_t n) {
  if (!has(a, "init")) {
    if (n == 1) return {Rational(1)};
    throw ArgError("missing --init with " + std::to_string(n) + " initial values");
  }
  auto v = parse_rational_list(str_arg(a, "init"));
  if (v.size() != n) throw ArgError("--init needs " + std::to_string(n) + " values, got " + std::to_string(v.size()));
  return v;
}

HypergeomParams hyper_args(const Json& a) {
  HypergeomParams h;
  h.upper = parse_rational_list(str_arg(a, "upper"));
  h.lower = parse_rational_list(str_arg(a, "lower", ""));
  return h;
}

// Series from --op/--init, or --upper/--lower with optional --scale.
TruncatedSeries<Rational> series_source(const Json& a, std::size_t t, std::string& desc) {
  if (has(a, "op")) {
    QOp l = parse_operator(str_arg(a, "op"));
    desc = "series solution of " + l.str();
    return series_solve(l, init_arg(a, l.order()), t);
  }
  if (has(a, "upper")) {
    Rational scale = parse_rational(str_arg(a, "scale", "1"));
    desc = "hypergeometric series";
    return hypergeom_series(hyper_args(a), t, scale);
  }
  if (has(a, "coeffs")) {
    auto v = parse_rational_list(str_arg(a, "coeffs"));
    if (v.size() < t) throw ArgError("--coeffs has fewer than --terms values");
    v.resize(t);
    desc = "given coefficients";
    return TruncatedSeries<Rational>(QCtx{}, v);
  }
  throw ArgError("a series source is required: --op with --init, --upper/--lower, or --coeffs");
}

Report cmd_divide(const Json& a) {
  QOp num = parse_operator(str_arg(a, "num")), den = parse_operator(str_arg(a, "den"));
  Report r;
  if (has(a, "prime")) {
    std::uint64_t p = prime_arg(a);
    auto dm = right_divmod(reduce_op_mod_p(num, p), reduce_op_mod_p(den, p));
    r.json = Json{{"prime", std::to_string(p)}, {"quotient", op_json(dm.quotient)}, {"remainder", op_json(dm.remainder)},
                  {"remainder_is_zero", dm.remainder.is_zero()}};
    r.text = "over F_" + std::to_string(p) + ":\nquotient:  " + dm.quotient.str() + "\nremainder: " + dm.remainder.str() + "\n";
  } else {
    auto dm = right_divmod(num, den);
    r.json = Json{{"prime", nullptr}, {"quotient", op_json(dm.quotient)}, {"remainder", op_json(dm.remainder)},
                  {"remainder_is_zero", dm.remainder.is_zero()}};
    r.text = "over Q(x):\nquotient:  " + dm.quotient.str() + "\nremainder: " + dm.remainder.str() + "\n";
  }
  return r;
}

Report cmd_pcurvature(const Json& a) {
  QOp l = parse_operator(str_arg(a, "op"));
  std::uint64_t p = prime_arg(a);
  FpOp lp = reduce_op_mod_p(l, p);
  std::string method = str_arg(a, "method", "recurrence");
  PCurvatureMatrix m;
  if (method == "recurrence") {
    m = pcurvature_recurrence(lp);
  } else if (method == "remainders") {
    m = pcurvature_via_remainders(lp);
  } else if (method == "local-series-crt" || method == "crt") {
    std::optional<std::vector<std::uint64_t>> pts;
    if (has(a, "points")) {
      pts.emplace();
      for (const auto& q : parse_rational_list(str_arg(a, "points"))) {
        if (!q.is_integer() || q.sign() < 0) throw ArgError("--points expects nonnegative integers");
        pts->push_back(mod_u(q.num(), p));
      }
    }
    m = pcurvature_local_series_crt(lp, pts);
  } else if (method == "closed-form") {
    if (lp.order() != 1) throw ArgError("closed-form method needs an order-1 operator");
    FpOp mo = lp.monic();
    m = {p, PCurvMethod::Recurrence, FpRFMatrix(1, 1, pcurvature_order1_closed_form(mo.coeff(0)))};
  } else {
    throw ArgError("unknown --method '" + method + "' (recurrence, remainders, local-series-crt, closed-form)");
  }
  auto cp = pcurvature_charpoly(m);
  Report r;
  r.json = Json{{"prime", std::to_string(p)}, {"method", method}, {"operator", op_json(lp)}, {"is_zero", m.is_zero()},
                {"matrix", matrix_json(m.entries)}, {"charpoly", charpoly_json(cp)}};
  r.text = "p-curvature of " + lp.str() + " over F_" + std::to_string(p) + " (" + method + "):\n" +
           matrix_text(m.entries) + "charpoly: " + charpoly_text(cp) + "\n";
  return r;
}

Report cmd_cartier(const Json& a) {
  QOp l = parse_operator(str_arg(a, "op"));
  std::uint64_t p = prime_arg(a);
  Report r;
  FpOp lp;
  try {
    lp = reduce_op_mod_p(l, p);
  } catch (const MathError& e) {
    if (e.kind() != ErrorKind::BadReduction) throw;
    r.json = Json{{"prime", std::to_string(p)}, {"status", "bad-reduction"}, {"reason", e.what()}};
    r.text = "p = " + std::to_string(p) + ": bad reduction (" + e.what() + ")\n";
    return r;
  }
  auto rep = cartier_test(lp);
  Json witness;
  std::string wtext;
  if (rep.status == PCurvStatus::Zero) {
    Json basis = Json::array();
    for (const auto& b : rep.basis) {
      basis.push_back(b.str());
      wtext += "  " + b.str() + "\n";
    }
    witness = Json{{"kind", "polynomial-basis"}, {"degree_bound", rep.degree_bound}, {"basis", basis}};
    wtext = "polynomial solutions (degree < " + std::to_string(rep.degree_bound) + "):\n" + wtext;
  } else {
    witness = Json{{"kind", "remainder"}, {"remainder", op_json(rep.remainder)}};
    wtext = "Dx^" + std::to_string(p) + " mod L = " + rep.remainder.str() + "\n";
  }
  r.json = Json{{"prime", std::to_string(p)}, {"status", status_name(rep.status)}, {"operator", op_json(lp)},
                {"charpoly", charpoly_json(rep.charpoly)}, {"witness", witness}};
  r.text = "p = " + std::to_string(p) + ": p-curvature " + status_name(rep.status) + "\ncharpoly: " +
           charpoly_text(rep.charpoly) + "\n" + wtext;
  return r;
}

Report cmd_scan(const Json& a) {
  QOp l = parse_operator(str_arg(a, "op"));
  std::uint64_t pmin = u64_arg(a, "pmin", 2), pmax = u64_arg(a, "pmax", 200);
  unsigned workers = static_cast<unsigned>(u64_arg(a, "workers", 0));
  auto rep = grothendieck_scan(l, pmin, pmax, workers);
  Json entries = Json::array();
  std::string lines;
  for (const auto& e : rep.entries) {
    Json j{{"prime", std::to_string(e.prime)}, {"status", status_name(e.status)}};
    if (!e.reason.empty()) j["reason"] = e.reason;
    entries.push_back(j);
    lines += "  " + std::to_string(e.prime) + ": " + status_name(e.status) + (e.reason.empty() ? "" : " (" + e.reason + ")") + "\n";
  }
  Report r;
  r.json = Json{{"operator", rep.op},
                {"pmin", std::to_string(pmin)},
                {"pmax", std::to_string(pmax)},
                {"entries", entries},
                {"counts", Json{{"zero", rep.zero}, {"nilpotent-nonzero", rep.nilpotent}, {"nonzero", rep.nonzero},
                                {"bad-reduction", rep.bad}}},
                {"exceptions", int_strings(rep.exceptions)},
                {"summary", "heuristic: statuses are per-prime facts; no algebraicity is proved"}};
  r.text = "scan of " + rep.op + " for primes in [" + std::to_string(pmin) + ", " + std::to_string(pmax) + "]\n" + lines +
           "zero: " + std::to_string(rep.zero) + ", nilpotent-nonzero: " + std::to_string(rep.nilpotent) +
           ", nonzero: " + std::to_string(rep.nonzero) + ", bad-reduction: " + std::to_string(rep.bad) +
           "\nexceptions: " + join_nums(rep.exceptions) + "\n(heuristic verdict)\n";
  return r;
}

Report cmd_order1(const Json& a) {
  QRatFun f = parse_ratfun(str_arg(a, "a"));
  auto v = order1_char0_classify(f);
  Json factors = Json::array();
  std::string ftext;
  for (const auto& fc : v.factors) {
    Json j{{"factor", fc.factor.str()}, {"multiplicity", fc.multiplicity}, {"residue_constant", fc.residue_constant}};
    j["residue"] = fc.residue ? Json(fc.residue->str()) : Json(nullptr);
    j["residue_integral"] = fc.residue_integral;
    factors.push_back(j);
    ftext += "  " + fc.factor.str() + ": multiplicity " + std::to_string(fc.multiplicity) +
             (fc.residue ? ", residue " + fc.residue->str() : ", residue not a rational constant") + "\n";
  }
  Report r;
  r.json = Json{{"a", ratfun_json(f)},
                {"char0", Json{{"has_rational_solution", v.has_rational_solution},
                               {"has_algebraic_solution", v.has_algebraic_solution},
                               {"vanishes_at_infinity", v.vanishes_at_infinity},
                               {"factors", factors}}}};
  r.text = "y' = a y with a = " + f.str() + "\nrational solution: " + (v.has_rational_solution ? "yes" : "no") +
           "\nalgebraic solution: " + (v.has_algebraic_solution ? "yes" : "no") +
           "\nvanishes at infinity: " + (v.vanishes_at_infinity ? "yes" : "no") + "\n" + ftext;
  if (has(a, "prime")) {
    std::uint64_t p = prime_arg(a);
    Json cp;
    try {
      FpRatFun b = -reduce_mod_p(f, p);
      bool rat = order1_charp_has_rational(b);
      cp = Json{{"prime", std::to_string(p)}, {"status", "ok"}, {"has_rational_solution", rat}};
      r.text += "mod " + std::to_string(p) + ": rational solution " + (rat ? "yes" : "no") + "\n";
    } catch (const MathError& e) {
      if (e.kind() != ErrorKind::BadReduction) throw;
      cp = Json{{"prime", std::to_string(p)}, {"status", "bad-reduction"}, {"has_rational_solution", nullptr}};
      r.text += "mod " + std::to_string(p) + ": bad reduction\n";
    }
    r.json["charp"] = cp;
  }
  return r;
}

Report cmd_hypergeom(const Json& a) {
  auto h = hyper_args(a);
  auto v = hypergeom_classify(h);
  Json certs = Json::array();
  std::string ctext;
  for (const auto& c : v.certificates) {
    certs.push_back(Json{{"ell", c.ell}, {"pattern", c.pattern}, {"interlaces", c.interlaces}});
    ctext += "  l = " + std::to_string(c.ell) + ": " + c.pattern + (c.interlaces ? " interlaces" : " does not interlace") + "\n";
  }
  Report r;
  r.json = Json{{"upper", rationals_json(h.upper)},
                {"lower", rationals_json(h.lower)},
                {"common_denominator", v.common_denominator.get_str()},
                {"verdict", hypergeom_class_name(v.verdict)},
                {"certificates", certs}};
  r.text = std::string("verdict: ") + hypergeom_class_name(v.verdict) + " (common denominator " +
           v.common_denominator.get_str() + ")\n" + ctext;
  if (has(a, "terms")) {
    auto s = hypergeom_series(h, u64_arg(a, "terms"), parse_rational(str_arg(a, "scale", "1")));
    r.json["series"] = series_json(s);
    r.text += "series: " + s.str() + "\n";
  }
  return r;
}

Report cmd_eisenstein(const Json& a) {
  std::size_t t = u64_arg(a, "terms", 30);
  BigInt bound(str_arg(a, "bound", "1000000"));
  std::string desc;
  auto s = series_source(a, std::max<std::size_t>(t, 1), desc);
  auto e = eisenstein_check(s, t, bound);
  Json w = Json::array();
  std::vector<std::string> ws;
  for (const auto& q : e.witnesses) {
    w.push_back(q.get_str());
    ws.push_back(q.get_str());
  }
  Report r;
  r.json = Json{{"source", desc}, {"terms", t}, {"bound", bound.get_str()}, {"pass", e.pass},
                {"N", e.pass ? Json(e.n.get_str()) : Json(nullptr)}, {"heuristic", e.pass}, {"witnesses", w}};
  r.text = desc + ", first " + std::to_string(t) + " terms: " +
           (e.pass ? "pass with N = " + e.n.get_str() + " (heuristic: only the examined prefix)"
                   : "fail, denominator primes {" + join(ws) + "}") + "\n";
  return r;
}

Report cmd_integrality(const Json& a) {
  QOp l = parse_operator(str_arg(a, "op"));
  std::uint64_t p = prime_arg(a);
  std::size_t t = u64_arg(a, "terms", 200);
  auto res = p_integrality_check(l, init_arg(a, l.order()), p, t);
  Report r;
  r.json = Json{{"operator", l.str()}, {"prime", std::to_string(p)}, {"terms", t}, {"pass", res.pass},
                {"first_failure", res.pass ? Json(nullptr) : Json(res.first_failure)},
                {"reduced_degree", res.pass ? Json(res.reduced_degree) : Json(nullptr)},
                {"factorial_scaled_vanishes", res.pass ? Json(res.factorial_scaled_vanishes) : Json(nullptr)}};
  r.text = "series solution of " + l.str() + " to order " + std::to_string(t) + ": " +
           (res.pass ? std::to_string(p) + "-integral; reduction mod p has degree " + std::to_string(res.reduced_degree) +
                           " within the truncation; n! c_n = 0 mod p for n >= p: " +
                           (res.factorial_scaled_vanishes ? "yes" : "no")
                     : "not " + std::to_string(p) + "-integral, first failure at index " + std::to_string(res.first_failure)) +
           "\n";
  return r;
}

Report cmd_locallogs(const Json& a) {
  QOp l = parse_operator(str_arg(a, "op"));
  auto res = local_logs_at_zero(l);
  Json roots = Json::array(), clusters = Json::array();
  std::string rtext, ctext;
  for (const auto& e : res.exponents) {
    roots.push_back(Json{{"root", e.value.str()}, {"multiplicity", e.multiplicity}});
    rtext += " " + e.value.str() + (e.multiplicity > 1 ? " (x" + std::to_string(e.multiplicity) + ")" : "");
  }
  for (const auto& c : res.clusters) {
    clusters.push_back(Json{{"base", c.base.str()}, {"multiplicity", c.multiplicity}, {"max_gap", c.max_gap},
                            {"log_free_dimension", c.log_free_dimension}});
    ctext += "  exponents " + c.base.str() + " + Z: multiplicity " + std::to_string(c.multiplicity) +
             ", log-free solutions " + std::to_string(c.log_free_dimension) + "\n";
  }
  Report r;
  r.json = Json{{"operator", l.str()}, {"ordinary", res.ordinary}, {"indicial", res.indicial.str("s")},
                {"rational_roots", roots}, {"irrational_roots", res.irrational_root_count}, {"clusters", clusters},
                {"logs_present", res.logs_present}};
  r.text = "local analysis at 0 of " + l.str() + "\n" + (res.ordinary ? "ordinary point\n" : "regular singular point\n") +
           "indicial polynomial: " + res.indicial.str("s") + "\nrational exponents:" + rtext + "\n" + ctext +
           "logs present: " + (res.logs_present ? "yes" : "no") + "\n";
  return r;
}

BivariatePoly<Rational> relation_poly(const Json& a, const char* key) {
  return to_bivariate(parse_multi_poly(str_arg(a, key)));
}

Report cmd_series(const Json& a) {
  std::size_t t = u64_arg(a, "terms", 10);
  Report r;
  if (has(a, "algebraic")) {
    std::uint64_t p = prime_arg(a);
    auto P = reduce_mod_p(relation_poly(a, "algebraic"), p);
    Rational y0 = parse_rational(str_arg(a, "y0", "1"));
    auto h = algebraic_series_mod_p(P, reduce_mod_p(y0, p), t);
    r.json = Json{{"mode", "algebraic"}, {"prime", std::to_string(p)}, {"terms", t}, {"series", series_json(h.series)},
                  {"newton_precisions", h.precisions}, {"per_step_checks_hold", h.per_step_checks_hold}};
    r.text = "root of P(x, y) mod " + std::to_string(p) + ": " + h.series.str() + "\n";
    return r;
  }
  if (has(a, "op")) {
    QOp l = parse_operator(str_arg(a, "op"));
    Json rec;
    std::string rtext;
    auto pr = operator_to_recurrence(l);
    rec = Json{{"text", pr.str()}, {"offset", pr.offset}};
    Json cs = Json::array();
    for (const auto& c : pr.coeffs) cs.push_back(c.str("k"));
    rec["coeffs"] = cs;
    rtext = "recurrence: " + pr.str() + "\n";
    if (has(a, "prime")) {
      std::uint64_t p = prime_arg(a);
      FpOp lp = reduce_op_mod_p(l, p);
      std::vector<Fp> init;
      for (const auto& q : init_arg(a, l.order())) init.push_back(reduce_mod_p(q, p));
      auto s = series_solve(lp, init, t);
      r.json = Json{{"mode", "operator"}, {"operator", l.str()}, {"prime", std::to_string(p)}, {"recurrence", rec}, {"series", series_json(s)}};
      r.text = rtext + "series mod " + std::to_string(p) + ": " + s.str() + "\n";
    } else {
      auto s = series_solve(l, init_arg(a, l.order()), t);
      r.json = Json{{"mode", "operator"}, {"operator", l.str()}, {"prime", nullptr}, {"recurrence", rec}, {"series", series_json(s)}};
      r.text = rtext + "series: " + s.str() + "\n";
    }
    return r;
  }
  if (has(a, "upper")) {
    auto s = hypergeom_series(hyper_args(a), t, parse_rational(str_arg(a, "scale", "1")));
    r.json = Json{{"mode", "hypergeometric"}, {"series", series_json(s)}};
    r.text = "series: " + s.str() + "\n";
    return r;
  }
  throw ArgError("series needs --op, --upper or --algebraic");
}

Report cmd_diagonal(const Json& a) {
  MultiRatFun f = parse_multi_ratfun(str_arg(a, "f"));
  int vars = static_cast<int>(u64_arg(a, "vars", 0));
  if (vars == 0) vars = (f.num.uses(2) || f.den.uses(2)) ? 3 : 2;
  std::size_t t = u64_arg(a, "terms", 8);
  auto s = diagonal_small(f, vars, t);
  Report r;
  r.json = Json{{"numerator", f.num.str()}, {"denominator", f.den.str()}, {"vars", vars}, {"terms", t},
                {"series", series_json(s)}};
  r.text = "diagonal: " + s.str() + "\n";
  return r;
}

Report cmd_kronecker(const Json& a) {
  QPoly P = parse_polynomial(str_arg(a, "poly"));
  std::uint64_t pmin = u64_arg(a, "pmin", 2), pmax = u64_arg(a, "pmax", 200);
  auto rep = kronecker_scan(P, pmin, pmax);
  Json entries = Json::array();
  std::string lines;
  for (const auto& [p, st] : rep.entries) {
    entries.push_back(Json{{"prime", std::to_string(p)}, {"status", kronecker_status_name(st)}});
    lines += "  " + std::to_string(p) + ": " + kronecker_status_name(st) + "\n";
  }
  Report r;
  r.json = Json{{"poly", P.str()}, {"pmin", std::to_string(pmin)}, {"pmax", std::to_string(pmax)}, {"entries", entries}, {"true_primes", int_strings(rep.true_primes)}};
  r.text = "X^p = X mod (P, p) for P = " + P.str() + "\n" + lines + "true for: " + join_nums(rep.true_primes) + "\n";
  return r;
}

Report cmd_relation(const Json& a) {
  std::size_t t = u64_arg(a, "terms", 30);
  std::string desc;
  auto s = series_source(a, t, desc);
  auto P = relation_poly(a, "poly");
  Report r;
  bool holds;
  if (has(a, "prime")) {
    std::uint64_t p = prime_arg(a);
    std::vector<Fp> cs;
    for (const auto& c : s.coeffs()) cs.push_back(reduce_mod_p(c, p));
    holds = check_algebraic_relation(TruncatedSeries<Fp>(fp_ctx(p), cs), reduce_mod_p(P, p), t);
    r.json = Json{{"source", desc}, {"prime", std::to_string(p)}, {"terms", t}, {"holds", holds}};
  } else {
    holds = check_algebraic_relation(s, P, t);
    r.json = Json{{"source", desc}, {"prime", nullptr}, {"terms", t}, {"holds", holds}};
  }
  r.text = "P(x, s(x)) = 0 mod x^" + std::to_string(t) + ": " + (holds ? "true" : "false") + "\n";
  return r;
}

}  // namespace

const char* const* command_names() { return kCommands; }

Report run_command(const std::string& command, const Json& args) {
  Report r;
  if (command == "divide") r = cmd_divide(args);
  else if (command == "pcurvature") r = cmd_pcurvature(args);
  else if (command == "cartier") r = cmd_cartier(args);
  else if (command == "scan") r = cmd_scan(args);
  else if (command == "order1") r = cmd_order1(args);
  else if (command == "hypergeom") r = cmd_hypergeom(args);
  else if (command == "eisenstein") r = cmd_eisenstein(args);
  else if (command == "integrality") r = cmd_integrality(args);
  else if (command == "locallogs") r = cmd_locallogs(args);
  else if (command == "series") r = cmd_series(args);
  else if (command == "diagonal") r = cmd_diagonal(args);
  else if (command == "kronecker") r = cmd_kronecker(args);
  else if (command == "relation") r = cmd_relation(args);
  else throw ArgError("unknown command '" + command + "'");
  Json out;
  out["command"] = command;
  out["args"] = args;
  out["status"] = "ok";
  out["result"] = std::move(r.json);
  r.json = std::move(out);
  return r;
}

}  // namespace pcurv
