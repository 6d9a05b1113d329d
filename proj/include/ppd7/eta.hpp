#pragma once

#include <map>
#include <string>
#include <vector>

#include "ppd7/qseries.hpp"

namespace ppd7 {

/* Symbolic eta-quotient shape: q^qpow * prod_delta (q^delta; q^delta)^e. */
struct EtaQuotientSpec {
    long qpow = 0;
    std::vector<std::pair<long, long>> factors;  // (delta, exponent)

    // Valuation of the q-expansion at [infinity] (the product part has
    // valuation 0, so this is just qpow).
    long order_at_infinity() const { return qpow; }

    // qpow + sum delta*e/24, the eta-normalized weight-0 exponent; integral
    // exactly when the object is a pure eta quotient times an integer q-power.
    Rat eta_normalized_order() const;
};

QSeries eta_series(const EtaQuotientSpec& spec, long order);

// ---- the named object catalog ----

EtaQuotientSpec spec_Dk(int k);     // D_k(q) = (q^2)^k / (q)^{3k+1}
EtaQuotientSpec spec_z();
EtaQuotientSpec spec_y0();
EtaQuotientSpec spec_A(int k = 2);  // q^c D_k(q)/D_k(q^49); c = 6 for k = 2
EtaQuotientSpec spec_m_frak();      // has qpow -4; eta_series rejects it

QSeries series_Dk(int k, long order);
QSeries series_z(long order);
QSeries series_x(long order);   // (z-1)/7, integrality checked
QSeries series_y0(long order);
QSeries series_y(long order);   // (y0-1)/8, integrality checked
QSeries series_rL(long order);  // (x+3x^2+x^3+6y+5xy)/7, integrality checked
QSeries series_A(int k, long order);

// Minimal positive inverse of 8 (k=2) resp. 6 (k=3) modulo 7^alpha.
Int lambda_index(int k, long alpha);
inline Int lambda_index(long alpha) { return lambda_index(2, alpha); }

/* Ladder of generating functions: L_1 = U-image of the multiplier A, and
 * L_{alpha+1} obtained from L_alpha by U_7 with an alternating premultiplier.
 * Parameterized by k in {2,3}; k=3 exists for the brute-force congruence
 * check only. */
struct LadderState {
    int k = 2;
    long alpha = 1;
    QSeries series;

    int parity() const { return static_cast<int>(alpha % 2); }
};

// Step multiplier for index alpha: q^c * (D_k(q)/D_k(q^49))^eps.
struct StepShape {
    long c;
    int eps;
};
StepShape ladder_step_shape(int k, long alpha);

/* L_1 to the requested order, built two ways and cross-checked:
 *  (a) prefactor (q^7)^7/(q^14)^2 times the subsequence series of d_k along
 *      the lambda_1 progression (read off D_k), and
 *  (b) U_7 of the eta-quotient multiplier A.
 * Route (a) is the primary series; (b) is compared through
 * min(order, crosscheck_order). */
LadderState build_L1(int k, long order, long crosscheck_order = 500);
inline LadderState build_L1(long order) { return build_L1(2, order); }

LadderState ladder_step(const LadderState& state, long demanded_order);

// Orders of L_1..L_alpha required so the final series reaches order n_final.
std::vector<long> ladder_budget(int k, long alpha_target, long n_final);

// JSON catalog of the named objects (spec, leading coefficients, orders).
std::string named_catalog_json(long coeffs = 20);

}  // namespace ppd7
