#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcurv/diffop.hpp"
#include "pcurv/matrix.hpp"

namespace pcurv {

template <class K>
using RFMatrix = Matrix<RationalFunction<K>>;

// Y' + B Y = 0 for Y = (y, y', ..., y^(n-1)); superdiagonal -1, last row b_0..b_{n-1}.
template <class K>
RFMatrix<K> companion_matrix(const DiffOp<K>& monic_l) {
  using RF = RationalFunction<K>;
  auto c = monic_l.ctx();
  const int n = monic_l.order();
  if (n < 1) throw MathError(ErrorKind::InvalidArgument, "companion matrix needs order >= 1");
  if (!monic_l.lc().is_one()) throw MathError(ErrorKind::InvalidArgument, "companion matrix needs a monic operator");
  RFMatrix<K> b(n, n, RF(c));
  for (int i = 0; i + 1 < n; ++i) b(i, i + 1) = RF::from_int(c, -1);
  for (int j = 0; j < n; ++j) b(n - 1, j) = monic_l.coeff(j);
  return b;
}

// Monic operator written as Dx^n + sum (num_i / f) Dx^i with f monic.
struct CommonDenominatorForm {
  std::uint64_t p = 0;
  int n = 0;
  FpPoly f;
  std::vector<FpPoly> num;
  int d = 0;  // max(deg f, deg num_i)
};
CommonDenominatorForm common_denominator_form(const FpOp& l);

using FpPolyMatrix = Matrix<FpPoly>;
using FpRFMatrix = Matrix<FpRatFun>;

enum class PCurvMethod { Recurrence, Remainders, LocalSeriesCrt };
const char* method_name(PCurvMethod m);

struct PCurvatureMatrix {
  std::uint64_t prime = 0;
  PCurvMethod method = PCurvMethod::Recurrence;
  FpRFMatrix entries;
  bool is_zero() const { return mat_is_zero(entries); }
};

// Numerators C_0..C_count of B_k = C_k / f^k, with B_0 = I and B_{k+1} = B_k' + B B_k.
std::vector<FpPolyMatrix> recurrence_numerators(const CommonDenominatorForm& form, unsigned count);

PCurvatureMatrix pcurvature_recurrence(const FpOp& l);
FpRatFun pcurvature_order1_closed_form(const FpRatFun& b);
// Remainder of Dx^k by the monic operator, iterating Dx * r mod L.
FpOp remainder_of_d_power(const FpOp& l, std::uint64_t k);
PCurvatureMatrix pcurvature_via_remainders(const FpOp& l);
PCurvatureMatrix pcurvature_local_series_crt(const FpOp& l,
                                             const std::optional<std::vector<std::uint64_t>>& points = std::nullopt);

// Coefficients of det(lambda I - M), index = power of lambda.
std::vector<FpRatFun> pcurvature_charpoly(const PCurvatureMatrix& m);
// Division-free characteristic polynomial over F_p[x].
std::vector<FpPoly> berkowitz_charpoly(const FpPolyMatrix& a);

enum class PCurvStatus { Zero, NilpotentNonzero, Nonzero, BadReduction };
const char* status_name(PCurvStatus s);

struct PCurvatureReport {
  std::uint64_t prime = 0;
  PCurvStatus status = PCurvStatus::Zero;
  std::vector<FpRatFun> charpoly;
  PCurvatureMatrix matrix;
  FpOp remainder;                 // Dx^p mod L
  std::vector<FpPoly> basis;      // polynomial solutions when status is zero
  int degree_bound = 0;           // basis degrees are < degree_bound
  std::string reason;             // bad-reduction detail
};

PCurvatureReport cartier_test(const FpOp& l);

// Nullspace of the polynomial-solution system for degrees < bound.
std::vector<FpPoly> polynomial_solutions(const FpOp& l, int bound);
// Greedy subset that stays independent over F_p(x^p), at most `limit` elements.
std::vector<FpPoly> independent_over_frobenius(const std::vector<FpPoly>& sols, std::size_t limit);

FpRFMatrix fundamental_matrix_at(const FpOp& l, std::uint64_t a);

// Sum a_k gamma_k with gamma_m gamma_n = binom(m+n, m) gamma_{m+n}.
class HurwitzSeries {
 public:
  HurwitzSeries() = default;
  HurwitzSeries(std::uint64_t p, std::size_t order) : p_(p), c_(order, Fp::raw(0, p)) {}
  HurwitzSeries(std::uint64_t p, std::vector<Fp> coeffs) : p_(p), c_(std::move(coeffs)) {}

  std::uint64_t prime() const { return p_; }
  std::size_t order() const { return c_.size(); }
  const Fp& operator[](std::size_t i) const { return c_[i]; }
  Fp& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Fp>& coeffs() const { return c_; }
  bool is_zero() const;

  friend HurwitzSeries operator+(const HurwitzSeries& a, const HurwitzSeries& b);
  friend HurwitzSeries operator-(const HurwitzSeries& a, const HurwitzSeries& b);
  friend HurwitzSeries operator*(const HurwitzSeries& a, const HurwitzSeries& b);
  friend bool operator==(const HurwitzSeries& a, const HurwitzSeries& b) { return a.c_ == b.c_; }
  HurwitzSeries derivative() const;
  // k-fold derivative
  HurwitzSeries derivative(std::size_t k) const;
  // Image of an ordinary series: x^k maps to k! gamma_k.
  static HurwitzSeries from_series(const TruncatedSeries<Fp>& s);

 private:
  std::uint64_t p_ = 0;
  std::vector<Fp> c_;
};

Fp binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p);

using HurwitzMatrix = Matrix<HurwitzSeries>;
HurwitzMatrix hurwitz_fundamental_solution(const FpOp& l, std::size_t t);
// Checks d^p S / dx^p = -B_p^dp S up to the available truncation.
bool hurwitz_relation_holds(const FpOp& l, const HurwitzMatrix& s);

struct SeriesCongruence {
  bool holds = true;
  long first_failure = -1;
};
SeriesCongruence order1_series_congruence(const FpRatFun& b, std::size_t count);

struct Char0Relations {
  std::uint64_t prime = 0;
  std::size_t truncation = 0;
  bool sp_available = false;
  int sign = 0;  // S_p = sign * B_p(0)/p! exactly; 0 when neither sign holds
  bool congruence_holds = false;  // p! S_p = (-1)^p B_p(0) mod p
  Matrix<Rational> s_p, bp_at_zero;
  bool pcurvature_zero = false;
  bool weak_bound_holds = true;
  long weak_first_violation = -1;
  bool strong_bound_checked = false;
  bool strong_bound_holds = true;
  long strong_first_violation = -1;
  std::vector<long> valuations;  // v_p(S_i), i < truncation
};
Char0Relations char0_series_relations(const QOp& l, std::uint64_t p, std::size_t t);

// Coefficient matrices S_0..S_{t-1} of the char-0 fundamental solution with S(0) = I.
std::vector<Matrix<Rational>> char0_fundamental_series(const QOp& l, std::size_t t);

}  // namespace pcurv
