#pragma once

#include <utility>
#include <vector>

#include "pcurv/matrix.hpp"
#include "pcurv/reduce.hpp"

namespace pcurv {

struct RationalRoot {
  Rational value;
  int multiplicity;
};

// All rational roots with multiplicity, ascending.
std::vector<RationalRoot> rational_roots(const QPoly& f);

// det(z I - M) over Q.
QPoly rational_charpoly(const Matrix<Rational>& m);

Rational rational_det(Matrix<Rational> m);

}  // namespace pcurv
