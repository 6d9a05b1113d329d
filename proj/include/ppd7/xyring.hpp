#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ppd7/profiles.hpp"
#include "ppd7/qseries.hpp"

namespace ppd7 {

/* Raw representation of a q-series in the localized basis:
 *   f = (1+7x)^{-nu} * ( sum c0[r] x^r  +  y * sum c1[r] x^r ).
 * Coefficients are exact rationals (denominators are powers of 7 in every
 * case arising here). */
struct RawXY {
    long nu = 0;
    std::map<long, Rat> c0;  // r >= 1
    std::map<long, Rat> c1;  // r >= 0

    const Rat& at(int beta, long m) const;
    long max_degree() const;
};

struct XYTerm {
    int beta;
    long m;
    Int s;       // integer coefficient after factoring out 7^theta
    long theta;  // profile weight
};

struct XYElement {
    long nu = 0;
    int parity = 1;
    std::vector<XYTerm> terms;

    std::string to_json() const;
};

struct Deficit {
    int beta;
    long m;
    long gap;  // theta(m) - v7(coefficient), positive when short
};

struct MembershipReport {
    bool member = true;
    std::vector<Deficit> deficits;
};

/* Shared solver state: generator series (x^r and y x^r to a fixed budget),
 * plus per-prime reduced row-echelon transforms.  Exactness never rests on
 * the modular layer: candidates from CRT are verified by an exact residual
 * check over the integers. */
class RepContext {
public:
    RepContext(long maxdeg, long guard = 25);

    long maxdeg() const { return maxdeg_; }
    long window() const { return window_; }  // q-order the solver consumes

    const QSeries& x() const { return x_; }
    const QSeries& y() const { return y_; }
    const QSeries& xpow(long r) const { return xpow_[r]; }
    const QSeries& onep7x_pow(long nu);

    /* Represent f (known to >= window()) as (1+7x)^{-nu}(...) with numerator
     * degree <= maxdeg.  Throws UnderdeterminedInput when f is too short,
     * NoRepresentation when no exact representation exists in budget. */
    RawXY represent(const QSeries& f, long nu);

private:
    friend struct RepContextTestAccess;
    struct PrimeLayer;
    long maxdeg_, guard_, window_;
    QSeries x_, y_;
    std::vector<QSeries> xpow_;  // x^0..x^maxdeg at window length
    std::vector<QSeries> ygen_;  // y*x^0..y*x^{maxdeg-1}
    std::map<long, QSeries> zpow_;
    std::vector<std::unique_ptr<PrimeLayer>> layers_;
    size_t next_prime_idx_ = 0;
    void add_layer();
    std::vector<Int> crt_solve(const QSeries& target, size_t nprimes);
    bool residual_ok(const QSeries& target49, const std::vector<Int>& c49);
};

/* Small dense exact-rational solver over the same basis; independent of the
 * CRT path and used as its oracle in tests.  Quadratic-cubic in maxdeg, only
 * suitable for small degrees. */
RawXY represent_exact_dense(const QSeries& f, long nu, long maxdeg,
                            long guard = 25);

// Factor each raw coefficient as s * 7^theta for the given parity.
XYElement normalize(const RawXY& raw, int parity);

// 7-adic valuation check of every coefficient against its theta target.
MembershipReport membership_report(const RawXY& raw, int parity);

// Exact q-series of the represented element (power-of-7 denominator carrier).
Scaled evaluate(const XYElement& e, long order);
Scaled evaluate_raw(const RawXY& raw, long order);

/* The nine tracked residues mod 49: (s0(1..5), s1(0..3)). */
using SVector = std::array<long, 9>;
SVector s_vector(const XYElement& e);

extern const std::array<std::pair<int, long>, 9> kTrackedSlots;

}  // namespace ppd7
