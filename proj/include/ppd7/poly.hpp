#pragma once

#include <vector>

#include "ppd7/common.hpp"

namespace ppd7 {

/* Dense univariate polynomials with exact integer coefficients; index =
 * degree.  Small helpers shared by the modular-equation and recurrence-data
 * checks. */
using Poly = std::vector<Int>;

Poly poly_trim(Poly p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Int& c, const Poly& a);
// (1+7x)^k expanded
Poly poly_onep7x_pow(long k);
// p(1+7x)
Poly poly_substitute_1p7x(const Poly& p);
// exact division, throws DataShapeFailure when not divisible
Poly poly_div_exact(const Poly& num, const Poly& den);
Int poly_eval(const Poly& p, const Int& v);
Rat poly_eval(const Poly& p, const Rat& v);

}  // namespace ppd7
