#include "pcurv/diffop.hpp"

#include <algorithm>

namespace pcurv {

FpOp reduce_op_mod_p(const QOp& l, std::uint64_t p) {
  FpCtx c = fp_ctx(p);
  std::vector<FpRatFun> a;
  for (int i = 0; i <= l.order(); ++i) {
    try {
      a.push_back(reduce_mod_p(l.coeff(i), p));
    } catch (const MathError& e) {
      throw MathError(ErrorKind::BadReduction,
                      "coefficient of Dx^" + std::to_string(i) + " does not reduce mod " + std::to_string(p));
    }
  }
  if (!a.empty() && a.back().is_zero())
    throw MathError(ErrorKind::BadReduction, "leading coefficient vanishes mod " + std::to_string(p));
  return FpOp(c, std::move(a));
}

int coefficient_degree_bound(const FpOp& monic_l) {
  int d = 0;
  for (const auto& c : monic_l.coeffs()) d = std::max({d, c.num().degree(), c.den().degree()});
  return d;
}

}  // namespace pcurv
