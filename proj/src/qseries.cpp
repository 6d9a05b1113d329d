#include "ppd7/qseries.hpp"

#include <algorithm>
#include <cstdio>

namespace ppd7 {

std::string fnv1a64_hex(const std::string& s) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(s)));
    return std::string(buf);
}

QSeries add(const QSeries& f, const QSeries& g) {
    long n = std::min(f.trunc(), g.trunc());
    QSeries out(n);
    for (long i = 0; i < n; ++i) out.coeff_mut(i) = f.coeff(i) + g.coeff(i);
    return out;
}

QSeries sub(const QSeries& f, const QSeries& g) {
    long n = std::min(f.trunc(), g.trunc());
    QSeries out(n);
    for (long i = 0; i < n; ++i) out.coeff_mut(i) = f.coeff(i) - g.coeff(i);
    return out;
}

QSeries scale(const Int& a, const QSeries& f) {
    QSeries out(f.trunc());
    for (long i = 0; i < f.trunc(); ++i) out.coeff_mut(i) = a * f.coeff(i);
    return out;
}

QSeries linear_combine(const std::vector<std::pair<Int, QSeries>>& terms) {
    if (terms.empty()) throw DomainError("linear_combine: empty term list");
    long n = terms.front().second.trunc();
    for (auto& t : terms) n = std::min(n, t.second.trunc());
    QSeries out(n);
    for (auto& [a, s] : terms) {
        if (a == 0) continue;
        for (long i = 0; i < n; ++i) {
            const Int& c = s.coeff(i);
            if (c != 0) out.coeff_mut(i) += a * c;
        }
    }
    return out;
}

QSeries mul(const QSeries& f, const QSeries& g) {
    long v1 = f.known_valuation(), v2 = g.known_valuation();
    long n = std::min(f.trunc() + v2, g.trunc() + v1);
    QSeries out(n);
    // convolve with the sparser factor outermost
    const QSeries* a = &f;
    const QSeries* b = &g;
    long nza = 0, nzb = 0;
    for (long i = 0; i < f.trunc() && i < n; ++i) nza += (f.coeff(i) != 0);
    for (long i = 0; i < g.trunc() && i < n; ++i) nzb += (g.coeff(i) != 0);
    if (nzb < nza) std::swap(a, b);
    for (long i = 0; i < a->trunc() && i < n; ++i) {
        const Int& ai = a->coeff(i);
        if (ai == 0) continue;
        long jm = std::min(b->trunc(), n - i);
        for (long j = 0; j < jm; ++j) {
            const Int& bj = b->coeff(j);
            if (bj != 0)
                mpz_addmul(out.coeff_mut(i + j).get_mpz_t(), ai.get_mpz_t(),
                           bj.get_mpz_t());
        }
    }
    return out;
}

QSeries mul_then_u(const QSeries& f, const QSeries& g, long ell) {
    if (ell < 1) throw DomainError("mul_then_u: ell must be >= 1");
    long v1 = f.known_valuation(), v2 = g.known_valuation();
    long nprod = std::min(f.trunc() + v2, g.trunc() + v1);
    long n = (nprod + ell - 1) / ell;
    QSeries out(n);
    for (long i = 0; i < f.trunc() && i < nprod; ++i) {
        const Int& ai = f.coeff(i);
        if (ai == 0) continue;
        long t0 = (i + ell - 1) / ell;
        for (long t = t0; t < n; ++t) {
            long j = ell * t - i;
            if (j >= g.trunc() || ell * t >= nprod) break;
            const Int& bj = g.coeff(j);
            if (bj != 0)
                mpz_addmul(out.coeff_mut(t).get_mpz_t(), ai.get_mpz_t(),
                           bj.get_mpz_t());
        }
    }
    return out;
}

QSeries invert(const QSeries& f) {
    const Int& c0 = f.coeff(0);
    if (c0 != 1 && c0 != -1)
        throw NonUnitConstantTerm("invert: constant term is not a unit");
    long n = f.trunc();
    QSeries out(n);
    out.coeff_mut(0) = c0;  // (+-1)^{-1} = +-1
    std::vector<long> nz;   // nonzero support of f beyond the constant
    for (long j = 1; j < n; ++j)
        if (f.coeff(j) != 0) nz.push_back(j);
    Int acc;
    for (long k = 1; k < n; ++k) {
        acc = 0;
        for (long j : nz) {
            if (j > k) break;
            mpz_addmul(acc.get_mpz_t(), f.coeff(j).get_mpz_t(),
                       out.coeff(k - j).get_mpz_t());
        }
        out.coeff_mut(k) = (c0 == 1) ? Int(-acc) : acc;
    }
    return out;
}

QSeries power(const QSeries& f, long e) {
    if (e < 0) throw DomainError("power: negative exponent, use invert");
    QSeries out = QSeries::one(f.trunc());
    QSeries base = f;
    while (e > 0) {
        if (e & 1) out = mul(out, base).truncate(std::min(out.trunc(), f.trunc()));
        e >>= 1;
        if (e) base = mul(base, base).truncate(f.trunc());
    }
    return out.truncate(f.trunc());
}

QSeries dilate(const QSeries& f, long m) {
    if (m < 1) throw DomainError("dilate: m must be >= 1");
    if (m == 1) return f;
    QSeries out(f.trunc() * m);
    for (long i = 0; i < f.trunc(); ++i)
        if (f.coeff(i) != 0) out.coeff_mut(i * m) = f.coeff(i);
    return out;
}

QSeries u_operator(const QSeries& f, long ell) {
    if (ell < 1) throw DomainError("u_operator: ell must be >= 1");
    if (ell == 1) return f;
    long n = (f.trunc() + ell - 1) / ell;
    QSeries out(n);
    for (long i = 0; i < n; ++i)
        if (ell * i < f.trunc()) out.coeff_mut(i) = f.coeff(ell * i);
    return out;
}

QSeries shift(const QSeries& f, long s) {
    if (s < 0) throw NegativeValuation("shift: negative q-power");
    QSeries out(f.trunc() + s);
    for (long i = 0; i < f.trunc(); ++i)
        if (f.coeff(i) != 0) out.coeff_mut(i + s) = f.coeff(i);
    return out;
}

QSeries reduce_mod(const QSeries& f, const Int& modulus) {
    if (modulus < 2) throw DomainError("reduce_mod: modulus must be >= 2");
    QSeries out(f.trunc());
    for (long i = 0; i < f.trunc(); ++i)
        out.coeff_mut(i) = mod_reduce(f.coeff(i), modulus);
    return out;
}

bool is_divisible(const QSeries& f, const Int& modulus) {
    if (modulus < 2) throw DomainError("is_divisible: modulus must be >= 2");
    for (long i = 0; i < f.trunc(); ++i)
        if (!mpz_divisible_p(f.coeff(i).get_mpz_t(), modulus.get_mpz_t()))
            return false;
    return true;
}

QSeries pentagonal_series(long scale, long order) {
    QSeries s(order);
    s.coeff_mut(0) = 1;
    for (long k = 1;; ++k) {
        long e1 = scale * k * (3 * k - 1) / 2;
        long e2 = scale * k * (3 * k + 1) / 2;
        if (e1 >= order && e2 >= order) break;
        Int sg = (k % 2) ? -1 : 1;
        if (e1 < order) s.coeff_mut(e1) += sg;
        if (e2 < order) s.coeff_mut(e2) += sg;
    }
    return s;
}

QSeries jacobi_cube_series(long scale, long order) {
    QSeries s(order);
    for (long k = 0;; ++k) {
        long e = scale * k * (k + 1) / 2;
        if (e >= order) break;
        s.coeff_mut(e) += Int((k % 2) ? -(2 * k + 1) : (2 * k + 1));
    }
    return s;
}

namespace {

// dense * sparse, full truncation (both known to `order`)
QSeries mul_sparse(const QSeries& dense, const QSeries& sparse, long order) {
    QSeries out(order);
    std::vector<std::pair<long, const Int*>> nz;
    for (long j = 0; j < sparse.trunc() && j < order; ++j)
        if (sparse.coeff(j) != 0) nz.emplace_back(j, &sparse.coeff(j));
    for (long i = 0; i < dense.trunc() && i < order; ++i) {
        const Int& ai = dense.coeff(i);
        if (ai == 0) continue;
        for (auto& [j, c] : nz) {
            if (i + j >= order) break;
            mpz_addmul(out.coeff_mut(i + j).get_mpz_t(), ai.get_mpz_t(),
                       c->get_mpz_t());
        }
    }
    return out;
}

// dense / sparse with sparse constant term 1, via the division recurrence
QSeries div_sparse(const QSeries& dense, const QSeries& sparse, long order) {
    if (sparse.coeff(0) != 1)
        throw NonUnitConstantTerm("div_sparse: divisor constant term not 1");
    std::vector<std::pair<long, const Int*>> nz;
    for (long j = 1; j < sparse.trunc() && j < order; ++j)
        if (sparse.coeff(j) != 0) nz.emplace_back(j, &sparse.coeff(j));
    QSeries out(order);
    Int acc;
    for (long k = 0; k < order; ++k) {
        acc = (k < dense.trunc()) ? dense.coeff(k) : Int(0);
        for (auto& [j, c] : nz) {
            if (j > k) break;
            mpz_submul(acc.get_mpz_t(), c->get_mpz_t(),
                       out.coeff(k - j).get_mpz_t());
        }
        out.coeff_mut(k) = acc;
    }
    return out;
}

}  // namespace

QSeries euler_factor(long a, long e, long order) {
    if (a < 1) throw DomainError("euler_factor: scale must be >= 1");
    if (order < 1) throw DomainError("euler_factor: order must be >= 1");
    QSeries out = QSeries::one(order);
    if (e == 0) return out;
    long mag = e > 0 ? e : -e;
    long cubes = mag / 3, singles = mag % 3;
    if (cubes) {
        QSeries J = jacobi_cube_series(a, order);
        for (long i = 0; i < cubes; ++i)
            out = (e > 0) ? mul_sparse(out, J, order) : div_sparse(out, J, order);
    }
    if (singles) {
        QSeries P = pentagonal_series(a, order);
        for (long i = 0; i < singles; ++i)
            out = (e > 0) ? mul_sparse(out, P, order) : div_sparse(out, P, order);
    }
    return out;
}

QSeries Scaled::to_integer() const {
    if (den7 == 0) return num;
    Int d = pow7(den7);
    QSeries out(num.trunc());
    for (long i = 0; i < num.trunc(); ++i) {
        if (!mpz_divisible_p(num.coeff(i).get_mpz_t(), d.get_mpz_t()))
            throw NonIntegralEvaluation(
                "scaled series is not integral at q^" + std::to_string(i));
        mpz_divexact(out.coeff_mut(i).get_mpz_t(), num.coeff(i).get_mpz_t(),
                     d.get_mpz_t());
    }
    return out;
}

bool Scaled::is_integral() const {
    if (den7 == 0) return true;
    Int d = pow7(den7);
    for (long i = 0; i < num.trunc(); ++i)
        if (!mpz_divisible_p(num.coeff(i).get_mpz_t(), d.get_mpz_t()))
            return false;
    return true;
}

Scaled scaled_linear_combine(const std::vector<std::pair<Rat, QSeries>>& terms) {
    if (terms.empty()) throw DomainError("scaled_linear_combine: empty");
    long den7 = 0;
    for (auto& [a, s] : terms) {
        Int d = a.get_den();
        long o = 0;
        while (mpz_divisible_ui_p(d.get_mpz_t(), 7)) {
            mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), 7);
            ++o;
        }
        if (d != 1)
            throw RationalCoefficients(
                "scaled_linear_combine: denominator is not a power of 7");
        den7 = std::max(den7, o);
    }
    Int big = pow7(den7);
    std::vector<std::pair<Int, QSeries>> scaled;
    scaled.reserve(terms.size());
    for (auto& [a, s] : terms)
        scaled.emplace_back(Int(a.get_num() * big / a.get_den()), s);
    return Scaled{linear_combine(scaled), den7};
}

}  // namespace ppd7
