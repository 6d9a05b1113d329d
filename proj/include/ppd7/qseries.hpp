#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ppd7/common.hpp"

namespace ppd7 {

/* Truncated formal power series in q with exact integer coefficients.
 * Coefficients are correct for all exponents < trunc(); exponents >= trunc()
 * are unknown, not zero.  Values are immutable in practice: every operation
 * returns a fresh series. */
class QSeries {
public:
    explicit QSeries(long trunc) : trunc_(trunc), c_(trunc > 0 ? trunc : 0) {
        if (trunc < 1) throw DomainError("QSeries: truncation must be >= 1");
    }

    static QSeries one(long trunc) {
        QSeries s(trunc);
        s.c_[0] = 1;
        return s;
    }
    static QSeries monomial(long exponent, const Int& coeff, long trunc) {
        QSeries s(trunc);
        if (exponent < 0) throw NegativeValuation("monomial: negative exponent");
        if (exponent < trunc) s.c_[exponent] = coeff;
        return s;
    }

    long trunc() const { return trunc_; }

    const Int& coeff(long e) const {
        if (e < 0 || e >= trunc_)
            throw InsufficientTruncation("coefficient index beyond truncation");
        return c_[e];
    }
    Int& coeff_mut(long e) { return c_[e]; }

    // Least exponent with a nonzero coefficient; nullopt when the series is
    // identically O(q^trunc).
    std::optional<long> valuation() const {
        for (long i = 0; i < trunc_; ++i)
            if (c_[i] != 0) return i;
        return std::nullopt;
    }
    // Lower bound on the true valuation usable in truncation arithmetic.
    long known_valuation() const {
        auto v = valuation();
        return v ? *v : trunc_;
    }

    bool is_zero() const { return !valuation().has_value(); }

    QSeries truncate(long n) const {
        if (n > trunc_)
            throw InsufficientTruncation("truncate: cannot extend knowledge");
        QSeries out(n);
        for (long i = 0; i < n; ++i) out.c_[i] = c_[i];
        return out;
    }

    const std::vector<Int>& data() const { return c_; }

private:
    long trunc_;
    std::vector<Int> c_;

    friend QSeries mul(const QSeries&, const QSeries&);
    friend QSeries add_scaled(const QSeries&, const Int&, const QSeries&);
};

QSeries add(const QSeries& f, const QSeries& g);
QSeries sub(const QSeries& f, const QSeries& g);
QSeries scale(const Int& a, const QSeries& f);
QSeries linear_combine(const std::vector<std::pair<Int, QSeries>>& terms);

// Exact product with truncation min(N1+v2, N2+v1).
QSeries mul(const QSeries& f, const QSeries& g);

// U_ell(f*g) computed directly (only every ell-th coefficient of the product
// is formed); equals u_operator(mul(f,g), ell) but 1/ell the work.
QSeries mul_then_u(const QSeries& f, const QSeries& g, long ell);

// Multiplicative inverse; constant term must be a unit (+-1).
QSeries invert(const QSeries& f);

QSeries power(const QSeries& f, long e);   // e >= 0
QSeries dilate(const QSeries& f, long m);  // q -> q^m; trunc becomes m*trunc
QSeries u_operator(const QSeries& f, long ell);
QSeries shift(const QSeries& f, long s);   // multiply by q^s

QSeries reduce_mod(const QSeries& f, const Int& modulus);
bool is_divisible(const QSeries& f, const Int& modulus);

/* (q^a; q^a)_inf^e.  Built from the sparse pentagonal-number series (and its
 * cube, which is also sparse) so a single factor costs O(N sqrt(N/a)). */
QSeries euler_factor(long a, long e, long order);

// Sparse expansions used by euler_factor; exposed for tests.
QSeries pentagonal_series(long scale, long order);
QSeries jacobi_cube_series(long scale, long order);

/* Integer series scaled by a power-of-7 denominator: value = num / 7^den7.
 * All rational series arising here have such denominators. */
struct Scaled {
    QSeries num;
    long den7 = 0;

    // Exact integer form; throws when 7^den7 does not divide every coefficient.
    QSeries to_integer() const;
    bool is_integral() const;
};

Scaled scaled_linear_combine(const std::vector<std::pair<Rat, QSeries>>& terms);

}  // namespace ppd7
