#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcurv/diffop.hpp"

namespace pcurv {

// sum_t p_t(k) u_{k+t} = 0 for every integer k >= offset; u at negative indices is 0.
struct PRecurrence {
  std::vector<QPoly> coeffs;  // p_0 .. p_s, polynomials in k
  long offset = 0;
  std::vector<Rational> initial;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  std::string str(const std::string& seq = "u") const;
};

// Operator with polynomial coefficients (denominators are cleared first).
PRecurrence operator_to_recurrence(const QOp& l);

// Values u_0..u_{count-1}.
TruncatedSeries<Rational> recurrence_unroll(const PRecurrence& rec, std::size_t count);

// Falling factorial k (k-1) ... (k-i+1) as a polynomial in k.
QPoly falling_factorial_poly(int i);

// Unique solution at an ordinary point 0 with y^(i)(0)/i! given by `initial`.
template <class K>
TruncatedSeries<K> series_solve(const DiffOp<K>& l, const std::vector<K>& initial, std::size_t t);

struct HypergeomParams {
  std::vector<Rational> upper, lower;  // lower excludes the implicit 1
};

TruncatedSeries<Rational> hypergeom_series(const HypergeomParams& params, std::size_t t,
                                           const Rational& scale = Rational(1));

}  // namespace pcurv
