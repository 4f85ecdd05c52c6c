#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "pcurv/series.hpp"

namespace pcurv {

// P(x, y) = sum_j c_j(x) y^j.
template <class K>
struct BivariatePoly {
  std::vector<Polynomial<K>> c;

  int y_degree() const { return static_cast<int>(c.size()) - 1; }
  Polynomial<K> coeff(std::size_t j) const { return j < c.size() ? c[j] : Polynomial<K>(); }
  BivariatePoly y_derivative() const;
  // P(x, s(x)) mod x^order(s)
  TruncatedSeries<K> substitute(const TruncatedSeries<K>& s) const;
};

struct HenselResult {
  TruncatedSeries<Fp> series;
  std::vector<std::size_t> precisions;  // precision reached after each Newton step
  bool per_step_checks_hold = true;     // P(x, y) = 0 mod x^precision after every step
};

HenselResult algebraic_series_mod_p(const BivariatePoly<Fp>& p, const Fp& y0, std::size_t t);

template <class K>
bool check_algebraic_relation(const TruncatedSeries<K>& s, const BivariatePoly<K>& p, std::size_t t);

// Sparse polynomial in up to three variables over Q.
struct MultiPoly {
  using Exp = std::array<int, 3>;
  std::map<Exp, Rational> terms;

  static MultiPoly constant(const Rational& v);
  static MultiPoly var(int i);
  bool is_zero() const { return terms.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  int degree_in(int var) const;
  int total_degree() const;
  bool uses(int var) const { return degree_in(var) > 0; }

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly pow(unsigned e) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms == b.terms; }
  std::string str() const;
};

// F = num / den, den(0) != 0.
struct MultiRatFun {
  MultiPoly num, den;
};

TruncatedSeries<Rational> diagonal_small(const MultiRatFun& f, int nvars, std::size_t t);

// Coefficient polynomials in x, y-degree indexing; fails on z or fractional use.
BivariatePoly<Rational> to_bivariate(const MultiPoly& p);
BivariatePoly<Fp> reduce_mod_p(const BivariatePoly<Rational>& p, std::uint64_t prime);

}  // namespace pcurv
