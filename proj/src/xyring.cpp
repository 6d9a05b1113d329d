#include "ppd7/xyring.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "ppd7/eta.hpp"

namespace ppd7 {

const std::array<std::pair<int, long>, 9> kTrackedSlots = {{
    {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 0}, {1, 1}, {1, 2}, {1, 3},
}};

const Rat& RawXY::at(int beta, long m) const {
    static const Rat kZero(0);
    const auto& side = beta ? c1 : c0;
    auto it = side.find(m);
    return it == side.end() ? kZero : it->second;
}

long RawXY::max_degree() const {
    long d = 0;
    if (!c0.empty()) d = std::max(d, c0.rbegin()->first);
    if (!c1.empty()) d = std::max(d, c1.rbegin()->first);
    return d;
}

// ---------------------------------------------------------------------------
// modular layer
// ---------------------------------------------------------------------------

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 p) {
    return static_cast<u64>(static_cast<u128>(a) * b % p);
}

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

// deterministic prime stream just above 2^62
u64 nth_solver_prime(size_t idx) {
    static std::vector<u64> cache;
    static Int cursor = Int(1) << 62;
    while (cache.size() <= idx) {
        Int nxt;
        mpz_nextprime(nxt.get_mpz_t(), cursor.get_mpz_t());
        cursor = nxt;
        cache.push_back(nxt.get_ui());
    }
    return cache[idx];
}

inline u64 reduce_mpz(const Int& v, u64 p) {
    Int r;
    mpz_mod_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return r.get_ui();
}

}  // namespace

struct RepContext::PrimeLayer {
    u64 p;
    size_t rows, ncol;
    // Full row-reduced transform: T * A = RREF, stored row-major.
    std::vector<u64> T;
    std::vector<std::pair<size_t, size_t>> pivots;  // (row, col)
    bool healthy = false;

    u64& t(size_t i, size_t j) { return T[i * rows + j]; }
};

RepContext::RepContext(long maxdeg, long guard)
    : maxdeg_(maxdeg),
      guard_(guard),
      window_(2 * maxdeg + guard + 2),
      x_(series_x(window_)),
      y_(series_y(window_)) {
    if (maxdeg < 2) throw DomainError("RepContext: maxdeg too small");
    xpow_.reserve(maxdeg_ + 1);
    xpow_.push_back(QSeries::one(window_));
    for (long r = 1; r <= maxdeg_; ++r)
        xpow_.push_back(mul(xpow_.back(), x_).truncate(window_));
    ygen_.reserve(maxdeg_);
    for (long r = 0; r < maxdeg_; ++r)
        ygen_.push_back(mul(y_, xpow_[r]).truncate(window_));
    QSeries z = series_z(window_);
    zpow_[0] = QSeries::one(window_);
    zpow_[1] = z;
    for (size_t i = 0; i < 10; ++i) add_layer();
}

const QSeries& RepContext::onep7x_pow(long nu) {
    if (nu < 0) throw DomainError("onep7x_pow: negative exponent");
    auto it = zpow_.find(nu);
    if (it != zpow_.end()) return it->second;
    // binary build from cached powers
    long half = nu / 2;
    QSeries v = mul(onep7x_pow(half), onep7x_pow(nu - half)).truncate(window_);
    return zpow_.emplace(nu, std::move(v)).first->second;
}

void RepContext::add_layer() {
    auto layer = std::make_unique<PrimeLayer>();
    size_t rows = static_cast<size_t>(window_ - 1);
    size_t ncol = static_cast<size_t>(2 * maxdeg_);
    for (;;) {
        layer->p = nth_solver_prime(next_prime_idx_++);
        layer->rows = rows;
        layer->ncol = ncol;
        layer->pivots.clear();
        u64 p = layer->p;
        // generator matrix mod p: columns ordered x^1, yx^0, x^2, yx^1, ...
        std::vector<u64> M(rows * ncol);
        for (size_t e = 0; e < rows; ++e) {
            long q = static_cast<long>(e) + 1;
            for (long r = 1; r <= maxdeg_; ++r) {
                M[e * ncol + 2 * (r - 1)] = reduce_mpz(xpow_[r].coeff(q), p);
                M[e * ncol + 2 * (r - 1) + 1] =
                    reduce_mpz(ygen_[r - 1].coeff(q), p);
            }
        }
        layer->T.assign(rows * rows, 0);
        for (size_t i = 0; i < rows; ++i) layer->t(i, i) = 1;
        auto mrow = [&](size_t i) { return M.data() + i * ncol; };
        size_t ri = 0;
        bool bad = false;
        for (size_t c = 0; c < ncol && !bad; ++c) {
            size_t pr = ri;
            while (pr < rows && mrow(pr)[c] == 0) ++pr;
            if (pr == rows) {
                bad = true;  // column dependent mod p: unusable prime
                break;
            }
            if (pr != ri) {
                for (size_t j = c; j < ncol; ++j)
                    std::swap(mrow(ri)[j], mrow(pr)[j]);
                for (size_t j = 0; j < rows; ++j)
                    std::swap(layer->t(ri, j), layer->t(pr, j));
            }
            u64 inv = invmod(mrow(ri)[c], p);
            for (size_t j = c; j < ncol; ++j)
                mrow(ri)[j] = mulmod(mrow(ri)[j], inv, p);
            for (size_t j = 0; j < rows; ++j)
                layer->t(ri, j) = mulmod(layer->t(ri, j), inv, p);
            for (size_t i = 0; i < rows; ++i) {
                if (i == ri) continue;
                u64 f = mrow(i)[c];
                if (!f) continue;
                u64 neg = p - f;
                for (size_t j = c; j < ncol; ++j)
                    mrow(i)[j] =
                        (mrow(i)[j] + mulmod(neg, mrow(ri)[j], p)) % p;
                for (size_t j = 0; j < rows; ++j)
                    layer->t(i, j) =
                        (layer->t(i, j) + mulmod(neg, layer->t(ri, j), p)) % p;
            }
            layer->pivots.emplace_back(ri, c);
            ++ri;
        }
        if (!bad) {
            layer->healthy = true;
            break;
        }
    }
    layers_.push_back(std::move(layer));
}

std::vector<Int> RepContext::crt_solve(const QSeries& target49,
                                       size_t nprimes) {
    while (layers_.size() < nprimes) add_layer();
    size_t rows = static_cast<size_t>(window_ - 1);
    size_t ncol = static_cast<size_t>(2 * maxdeg_);
    std::vector<std::vector<u64>> sols;
    std::vector<u64> used;
    for (size_t li = 0; li < nprimes; ++li) {
        auto& L = *layers_[li];
        u64 p = L.p;
        std::vector<u64> b(rows);
        for (size_t e = 0; e < rows; ++e)
            b[e] = reduce_mpz(target49.coeff(static_cast<long>(e) + 1), p);
        std::vector<u64> tb(rows, 0);
        for (size_t i = 0; i < rows; ++i) {
            u128 acc = 0;
            const u64* trow = L.T.data() + i * rows;
            for (size_t j = 0; j < rows; ++j) {
                if (b[j]) acc += static_cast<u128>(trow[j]) * b[j] % p;
            }
            tb[i] = static_cast<u64>(acc % p);
        }
        for (size_t i = L.pivots.size(); i < rows; ++i)
            if (tb[i] % p)
                throw NoRepresentation(
                    "residual row nonzero in modular solve (row " +
                    std::to_string(i) + ")");
        std::vector<u64> sol(ncol, 0);
        for (auto& [r, c] : L.pivots) sol[c] = tb[r];
        sols.push_back(std::move(sol));
        used.push_back(p);
    }
    // balanced CRT
    Int M = 1;
    for (u64 p : used) M *= Int(static_cast<unsigned long>(p));
    std::vector<Int> out(ncol);
    for (size_t c = 0; c < ncol; ++c) {
        Int acc = 0;
        for (size_t li = 0; li < used.size(); ++li) {
            Int p(static_cast<unsigned long>(used[li]));
            Int Mi = M / p;
            u64 mi_mod = reduce_mpz(Mi, used[li]);
            u64 coef = mulmod(sols[li][c], invmod(mi_mod, used[li]), used[li]);
            acc += Mi * Int(static_cast<unsigned long>(coef));
        }
        acc = mod_reduce(acc, M);
        if (acc * 2 > M) acc -= M;
        out[c] = acc;
    }
    return out;
}

bool RepContext::residual_ok(const QSeries& target49,
                             const std::vector<Int>& c49) {
    QSeries acc(window_);
    for (long r = 1; r <= maxdeg_; ++r) {
        const Int& a = c49[2 * (r - 1)];
        const Int& b = c49[2 * (r - 1) + 1];
        if (a != 0)
            for (long e = r; e < window_; ++e)
                mpz_addmul(acc.coeff_mut(e).get_mpz_t(), a.get_mpz_t(),
                           xpow_[r].coeff(e).get_mpz_t());
        if (b != 0)
            for (long e = r; e < window_; ++e)
                mpz_addmul(acc.coeff_mut(e).get_mpz_t(), b.get_mpz_t(),
                           ygen_[r - 1].coeff(e).get_mpz_t());
    }
    for (long e = 0; e < window_; ++e)
        if (acc.coeff(e) != target49.coeff(e)) return false;
    return true;
}

RawXY RepContext::represent(const QSeries& f, long nu) {
    if (nu < 0) throw DomainError("represent: nu must be >= 0");
    if (f.trunc() < window_)
        throw UnderdeterminedInput(
            "represent: series order " + std::to_string(f.trunc()) +
            " below solver window " + std::to_string(window_));
    QSeries P = mul(f.truncate(window_), onep7x_pow(nu)).truncate(window_);
    if (P.coeff(0) != 0)
        throw NoRepresentation("represent: nonzero constant term");
    QSeries P49 = scale(49, P);
    const size_t kStart = 10, kMax = 26;
    for (size_t np = kStart; np <= kMax; np += 4) {
        std::vector<Int> c49 = crt_solve(P49, np);
        if (residual_ok(P49, c49)) {
            // support must close strictly inside budget
            for (long r = maxdeg_ - 8; r <= maxdeg_; ++r)
                if (c49[2 * (r - 1)] != 0 || c49[2 * (r - 1) + 1] != 0)
                    throw NoRepresentation(
                        "represent: support reaches degree budget " +
                        std::to_string(maxdeg_));
            RawXY out;
            out.nu = nu;
            for (long r = 1; r <= maxdeg_; ++r) {
                if (c49[2 * (r - 1)] != 0) {
                    Rat v(c49[2 * (r - 1)], 49);
                    v.canonicalize();
                    out.c0[r] = v;
                }
                if (c49[2 * (r - 1) + 1] != 0) {
                    Rat v(c49[2 * (r - 1) + 1], 49);
                    v.canonicalize();
                    out.c1[r - 1] = v;
                }
            }
            return out;
        }
    }
    throw NoRepresentation(
        "represent: CRT candidates never satisfied the exact residual check");
}

// ---------------------------------------------------------------------------
// dense exact-rational fallback (independent of the modular path)
// ---------------------------------------------------------------------------

RawXY represent_exact_dense(const QSeries& f, long nu, long maxdeg,
                            long guard) {
    long window = 2 * maxdeg + guard + 2;
    if (f.trunc() < window)
        throw UnderdeterminedInput("represent_exact_dense: series too short");
    QSeries x = series_x(window), y = series_y(window);
    QSeries z = series_z(window);
    QSeries P = f.truncate(window);
    for (long i = 0; i < nu; ++i) P = mul(P, z).truncate(window);
    std::vector<QSeries> gens;
    QSeries xp = QSeries::one(window);
    for (long r = 1; r <= maxdeg; ++r) {
        QSeries prev = xp;
        xp = mul(xp, x).truncate(window);
        gens.push_back(xp);
        gens.push_back(mul(y, prev).truncate(window));
    }
    size_t rows = static_cast<size_t>(window - 1), ncol = gens.size();
    std::vector<std::vector<Rat>> A(rows, std::vector<Rat>(ncol));
    std::vector<Rat> b(rows);
    for (size_t e = 0; e < rows; ++e) {
        for (size_t c = 0; c < ncol; ++c)
            A[e][c] = Rat(gens[c].coeff(static_cast<long>(e) + 1));
        b[e] = Rat(P.coeff(static_cast<long>(e) + 1));
    }
    std::vector<std::pair<size_t, size_t>> piv;
    size_t ri = 0;
    for (size_t c = 0; c < ncol; ++c) {
        size_t pr = ri;
        while (pr < rows && A[pr][c] == 0) ++pr;
        if (pr == rows)
            throw UnderdeterminedInput(
                "represent_exact_dense: rank-deficient window");
        std::swap(A[ri], A[pr]);
        std::swap(b[ri], b[pr]);
        Rat inv = 1 / A[ri][c];
        for (size_t j = c; j < ncol; ++j) A[ri][j] *= inv;
        b[ri] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == ri || A[i][c] == 0) continue;
            Rat fac = A[i][c];
            for (size_t j = c; j < ncol; ++j) A[i][j] -= fac * A[ri][j];
            b[i] -= fac * b[ri];
        }
        piv.emplace_back(ri, c);
        ++ri;
    }
    for (size_t i = piv.size(); i < rows; ++i)
        if (b[i] != 0)
            throw NoRepresentation(
                "represent_exact_dense: residual row nonzero");
    RawXY out;
    out.nu = nu;
    for (auto& [r, c] : piv) {
        if (b[r] == 0) continue;
        long deg = static_cast<long>(c / 2) + 1;
        if (c % 2 == 0)
            out.c0[deg] = b[r];
        else
            out.c1[deg - 1] = b[r];
    }
    return out;
}

// ---------------------------------------------------------------------------
// normalization, membership, evaluation
// ---------------------------------------------------------------------------

namespace {
// 7-adic valuation of a nonzero rational
long ord7_rat(const Rat& v) {
    long num = *ord7(Int(v.get_num()));
    Int den = v.get_den();
    long dord = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 7)) {
        mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), 7);
        ++dord;
    }
    return num - dord;
}
}  // namespace

XYElement normalize(const RawXY& raw, int parity) {
    XYElement out;
    out.nu = raw.nu;
    out.parity = parity;
    auto push = [&](int beta, long m, const Rat& c) {
        if (c == 0) return;
        long th = theta(parity, beta, m);
        Rat s = c;
        if (th >= 0)
            s /= Rat(pow7(th));
        else
            s *= Rat(pow7(-th));
        s.canonicalize();
        if (s.get_den() != 1)
            throw IntegralityViolation(
                "normalize: coefficient at (beta=" + std::to_string(beta) +
                ", m=" + std::to_string(m) + ") is not s * 7^theta");
        out.terms.push_back(XYTerm{beta, m, Int(s.get_num()), th});
    };
    for (auto& [m, c] : raw.c0) push(0, m, c);
    for (auto& [m, c] : raw.c1) push(1, m, c);
    return out;
}

MembershipReport membership_report(const RawXY& raw, int parity) {
    MembershipReport rep;
    auto check = [&](int beta, long m, const Rat& c) {
        if (c == 0) return;
        long have = ord7_rat(c);
        long need = theta(parity, beta, m);
        if (have < need) {
            rep.member = false;
            rep.deficits.push_back(Deficit{beta, m, need - have});
        }
    };
    for (auto& [m, c] : raw.c0) check(0, m, c);
    for (auto& [m, c] : raw.c1) check(1, m, c);
    return rep;
}

Scaled evaluate_raw(const RawXY& raw, long order) {
    QSeries x = series_x(order), y = series_y(order);
    std::vector<std::pair<Rat, QSeries>> terms;
    QSeries xp = QSeries::one(order);
    long top = raw.max_degree();
    std::vector<QSeries> xcache;
    xcache.push_back(xp);
    for (long r = 1; r <= top; ++r)
        xcache.push_back(mul(xcache.back(), x).truncate(order));
    for (auto& [m, c] : raw.c0) terms.emplace_back(c, xcache[m]);
    for (auto& [m, c] : raw.c1)
        terms.emplace_back(c, mul(y, xcache[m]).truncate(order));
    if (terms.empty()) return Scaled{QSeries(order), 0};
    Scaled num = scaled_linear_combine(terms);
    if (raw.nu > 0) {
        QSeries zden = power(series_z(order), raw.nu);
        num.num = mul(num.num, invert(zden)).truncate(order);
    }
    return num;
}

Scaled evaluate(const XYElement& e, long order) {
    RawXY raw;
    raw.nu = e.nu;
    for (auto& t : e.terms) {
        Rat c(t.s);
        if (t.theta >= 0)
            c *= Rat(pow7(t.theta));
        else
            c /= Rat(pow7(-t.theta));
        c.canonicalize();
        if (t.beta == 0)
            raw.c0[t.m] += c;
        else
            raw.c1[t.m] += c;
    }
    return evaluate_raw(raw, order);
}

SVector s_vector(const XYElement& e) {
    SVector out{};
    for (size_t i = 0; i < kTrackedSlots.size(); ++i) {
        auto [beta, m] = kTrackedSlots[i];
        for (auto& t : e.terms)
            if (t.beta == beta && t.m == m)
                out[i] = mod_reduce_ul(t.s, 49);
    }
    return out;
}

std::string XYElement::to_json() const {
    nlohmann::json j;
    j["nu"] = nu;
    j["parity"] = parity;
    j["terms"] = nlohmann::json::array();
    for (auto& t : terms)
        j["terms"].push_back({{"beta", t.beta},
                              {"m", t.m},
                              {"s", t.s.get_str()},
                              {"theta", t.theta}});
    return j.dump();
}

}  // namespace ppd7
