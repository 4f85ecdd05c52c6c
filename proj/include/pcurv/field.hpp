#pragma once

#include <cstdint>

#include "pcurv/fp.hpp"
#include "pcurv/rational.hpp"

namespace pcurv {

// Per-field context: nothing for Q, the modulus for F_p.
template <class K>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  struct Ctx {
    friend bool operator==(Ctx, Ctx) { return true; }
  };
  static Rational zero(Ctx) { return Rational(); }
  static Rational from_int(Ctx, long long v) { return Rational(v); }
  static std::uint64_t characteristic(Ctx) { return 0; }
  static Ctx merge(Ctx a, Ctx) { return a; }
};

template <>
struct FieldTraits<Fp> {
  struct Ctx {
    std::uint64_t p = 0;
    friend bool operator==(Ctx a, Ctx b) { return a.p == b.p; }
  };
  static Fp zero(Ctx c) { return Fp::raw(0, c.p); }
  static Fp from_int(Ctx c, long long v) { return Fp(v, c.p); }
  static std::uint64_t characteristic(Ctx c) { return c.p; }
  static Ctx merge(Ctx a, Ctx b) { return a.p ? a : b; }
};

using QCtx = FieldTraits<Rational>::Ctx;
using FpCtx = FieldTraits<Fp>::Ctx;

inline FpCtx fp_ctx(std::uint64_t p) { return FpCtx{p}; }

}  // namespace pcurv
