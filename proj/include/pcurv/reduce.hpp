#pragma once

#include <cstdint>
#include <utility>

#include "pcurv/ratfun.hpp"

namespace pcurv {

using QPoly = Polynomial<Rational>;
using FpPoly = Polynomial<Fp>;
using QRatFun = RationalFunction<Rational>;
using FpRatFun = RationalFunction<Fp>;

Fp reduce_mod_p(const Rational& q, std::uint64_t p);
FpPoly reduce_mod_p(const QPoly& f, std::uint64_t p);
// Reduces num and den after scaling both to a jointly primitive integer pair.
FpRatFun reduce_mod_p(const QRatFun& f, std::uint64_t p);

// lcm of the coefficient denominators.
BigInt denominator_lcm(const QPoly& f);
// gcd of the numerators of an integer polynomial.
BigInt integer_content(const QPoly& f);
// (N, D) with integer coefficients, jointly primitive, N/D = f.
std::pair<QPoly, QPoly> integer_form(const QRatFun& f);

// Lifts residues to {0..p-1}.
QPoly lift(const FpPoly& f);

}  // namespace pcurv
