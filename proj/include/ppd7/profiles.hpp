#pragma once

#include "ppd7/common.hpp"

namespace ppd7 {

/* Piecewise floor profiles prescribing 7-adic weights on the localized basis.
 * theta: weight of y^beta x^m inside V^(parity); pi: weight gained by the
 * coefficient of y^gamma x^r in a U-image of y^beta x^m.  Domains follow the
 * defining tables; out-of-domain arguments throw DomainError. */

long theta(int parity, int beta, long m);
long pi_profile(int parity, int beta, int gamma, long m, long r);

// phi(l) = floor((7l+17)/9), the weight in the n-recurrence expansion.
inline long phi(long l) { return fdiv(7 * l + 17, 9); }

// Eventual-form offset: pi^(parity)_{beta gamma}(m,r) ~ floor((7r-m+eps)/9)
// (possibly plus a constant absorbed into eps) for large arguments.
long pi_epsilon(int parity, int beta, int gamma);

// kappa: growth of the localizing exponent under one U step.
inline long kappa_of(int parity) { return parity == 1 ? 0 : 3; }

// Smallest legal m for y^beta x^m (the space has no constants).
inline long m_min(int beta) { return 1 - beta; }

}  // namespace ppd7
