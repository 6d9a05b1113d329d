#pragma once

#include <string>

#include "ppd7/poly.hpp"
#include "ppd7/qseries.hpp"

namespace ppd7 {

/* The level-14 modular equation data: fifteen b_k (polynomials in z(7tau))
 * with b_0 = z^14 and b_14 = 1, and fifteen a_j (polynomials in x(7tau))
 * with a_14 = 1, loaded from the checked-in coefficient file.  The loader
 * recomputes the content hash and refuses drifted data. */
struct ModularEquationData {
    std::vector<Poly> b;  // size 15
    std::vector<Poly> a;  // size 15
    std::string checksum;

    static ModularEquationData load(const std::string& path);

    // Substituting z = 1+7x into the b-relation reproduces the a-relation:
    // sum_k b_k(1+7X) (1+7x)^k == 7^14 (x^14 + sum_{j<14} a_j(X) x^j),
    // an exact two-variable polynomial identity.
    void verify_substitution_consistency() const;
};

/* Expands z^14 + sum_k b_k(z(7tau)) z^k (resp. the x-form) as a q-series and
 * asserts it vanishes through `order` coefficients.  Throws IdentityFailure
 * with the first offending exponent. */
void verify_modeq_z(const ModularEquationData& d, long order);
void verify_modeq_x(const ModularEquationData& d, long order);

}  // namespace ppd7
