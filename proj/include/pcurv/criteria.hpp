#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcurv/pcurvature.hpp"
#include "pcurv/recurrence.hpp"
#include "pcurv/roots.hpp"

namespace pcurv {

struct Order1Factor {
  QPoly factor;              // squarefree factor of the denominator (or a split of it)
  int multiplicity = 1;
  bool residue_constant = false;
  std::optional<Rational> residue;
  bool residue_integral = false;
};

struct Order1Verdict {
  bool has_rational_solution = false;
  bool has_algebraic_solution = false;
  bool vanishes_at_infinity = false;
  std::vector<Order1Factor> factors;
};

// Solutions of y' = a y.
Order1Verdict order1_char0_classify(const QRatFun& a);
// y' + b y = 0 has a nonzero rational solution over F_p(x).
bool order1_charp_has_rational(const FpRatFun& b);

enum class HypergeomClass { Algebraic, Transcendental };

struct InterlacingCertificate {
  long ell = 0;
  std::string pattern;  // 'a' upper, 'b' lower, joint ascending order of fractional parts
  bool interlaces = false;
};

struct HypergeomVerdict {
  HypergeomClass verdict = HypergeomClass::Transcendental;
  BigInt common_denominator;
  std::vector<InterlacingCertificate> certificates;
};

HypergeomVerdict hypergeom_classify(const HypergeomParams& params);
const char* hypergeom_class_name(HypergeomClass c);

struct ScanEntry {
  std::uint64_t prime = 0;
  PCurvStatus status = PCurvStatus::Zero;
  std::string reason;
};

struct ScanReport {
  std::string op;
  std::vector<ScanEntry> entries;
  std::size_t zero = 0, nilpotent = 0, nonzero = 0, bad = 0;
  std::vector<std::uint64_t> exceptions;  // primes whose status is not zero
};

// Primes in [pmin, pmax]; workers = 0 picks the hardware concurrency.
ScanReport grothendieck_scan(const QOp& l, std::uint64_t pmin, std::uint64_t pmax, unsigned workers = 0);
// Status only, without the polynomial witness basis.
PCurvStatus pcurvature_status(const FpOp& l);

struct EisensteinResult {
  bool pass = false;
  bool heuristic = true;  // a pass only covers the examined prefix
  BigInt n;               // smallest N when passing
  std::vector<BigInt> witnesses;
  std::size_t truncation = 0;
};

EisensteinResult eisenstein_check(const TruncatedSeries<Rational>& s, std::size_t t, const BigInt& n_bound);

struct IntegralityResult {
  std::uint64_t prime = 0;
  std::size_t truncation = 0;
  bool pass = true;
  long first_failure = -1;
  // Only meaningful on pass: reduction of sum c_n x^n mod p, its degree.
  int reduced_degree = -1;
  // n! c_n = 0 mod p for all p <= n < truncation.
  bool factorial_scaled_vanishes = false;
  TruncatedSeries<Rational> series;
};

IntegralityResult p_integrality_check(const QOp& l, const std::vector<Rational>& initial, std::uint64_t p,
                                      std::size_t t);

struct LogCluster {
  Rational base;      // smallest exponent of the cluster
  int multiplicity = 0;
  int max_gap = 0;
  int log_free_dimension = 0;
};

struct LocalLogsResult {
  bool ordinary = false;
  bool logs_present = false;
  QPoly indicial;  // in s
  std::vector<RationalRoot> exponents;  // rational indicial roots
  int irrational_root_count = 0;
  std::vector<LogCluster> clusters;
};

LocalLogsResult local_logs_at_zero(const QOp& l);

enum class KroneckerStatus { True, False, Excluded, BadReduction };
const char* kronecker_status_name(KroneckerStatus s);

struct KroneckerReport {
  std::vector<std::pair<std::uint64_t, KroneckerStatus>> entries;
  std::vector<std::uint64_t> true_primes;
};

KroneckerReport kronecker_scan(const QPoly& p, std::uint64_t pmin, std::uint64_t pmax);

}  // namespace pcurv
