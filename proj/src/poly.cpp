#include "ppd7/poly.hpp"

namespace ppd7 {

Poly poly_trim(Poly p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return poly_trim(std::move(out));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {Int(0)};
    Poly out(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0)
                mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(),
                           b[j].get_mpz_t());
    }
    return poly_trim(std::move(out));
}

Poly poly_scale(const Int& c, const Poly& a) {
    Poly out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
    return poly_trim(std::move(out));
}

Poly poly_onep7x_pow(long k) {
    Poly out(static_cast<size_t>(k) + 1);
    Int binom = 1;
    Int p7 = 1;
    for (long j = 0; j <= k; ++j) {
        mpz_bin_uiui(out[j].get_mpz_t(), static_cast<unsigned long>(k),
                     static_cast<unsigned long>(j));
        out[j] *= p7;
        p7 *= 7;
    }
    return out;
}

Poly poly_substitute_1p7x(const Poly& p) {
    Poly out{Int(0)};
    const Poly lin{Int(1), Int(7)};
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        out = poly_mul(out, lin);
        out[0] += *it;
    }
    return poly_trim(std::move(out));
}

Poly poly_div_exact(const Poly& num, const Poly& den) {
    if (den.empty() || den.back() == 0)
        throw DataShapeFailure("poly_div_exact: bad divisor");
    if (num.size() < den.size())
        throw DataShapeFailure("poly_div_exact: degree underflow");
    Poly q(num.size() - den.size() + 1, Int(0));
    Poly r = num;
    for (size_t i = q.size(); i-- > 0;) {
        Int& lead = r[i + den.size() - 1];
        if (!mpz_divisible_p(lead.get_mpz_t(), den.back().get_mpz_t()))
            throw DataShapeFailure("poly_div_exact: not divisible");
        mpz_divexact(q[i].get_mpz_t(), lead.get_mpz_t(),
                     den.back().get_mpz_t());
        if (q[i] == 0) continue;
        for (size_t j = 0; j < den.size(); ++j)
            mpz_submul(r[i + j].get_mpz_t(), q[i].get_mpz_t(),
                       den[j].get_mpz_t());
    }
    for (auto& c : r)
        if (c != 0) throw DataShapeFailure("poly_div_exact: nonzero remainder");
    return poly_trim(std::move(q));
}

Int poly_eval(const Poly& p, const Int& v) {
    Int acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * v + *it;
    return acc;
}

Rat poly_eval(const Poly& p, const Rat& v) {
    Rat acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * v + Rat(*it);
    return acc;
}

}  // namespace ppd7
