#include "ppd7/htable.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "ppd7/eta.hpp"

namespace ppd7 {

const Int& HTable::at(int beta, int gamma, long m, long n, long r) const {
    static const Int kZero(0);
    auto it = h_.find({beta, gamma, m, n, r});
    return it == h_.end() ? kZero : it->second;
}

bool HTable::has_cell(int beta, long m, long n) const {
    return cells_.count({beta, m, n}) != 0;
}

long HTable::support_max(int beta, int gamma, long m, long n) const {
    long top = -1;
    auto lo = h_.lower_bound({beta, gamma, m, n, -1});
    for (auto it = lo; it != h_.end(); ++it) {
        auto& [b, g, mm, nn, r] = it->first;
        if (b != beta || g != gamma || mm != m || nn != n) break;
        top = std::max(top, r);
    }
    return top;
}

void HTable::insert(int beta, int gamma, long m, long n, long r, Int h) {
    h_[{beta, gamma, m, n, r}] = std::move(h);
}

void HTable::mark_cell(int beta, long m, long n, bool nu_exact) {
    cells_[{beta, m, n}] = nu_exact;
}

bool HTable::nu_exact(int beta, long m, long n) const {
    auto it = cells_.find({beta, m, n});
    if (it == cells_.end()) throw DomainError("nu_exact: cell not computed");
    return it->second;
}

std::string HTable::to_json() const {
    nlohmann::json payload;
    payload["parity"] = parity_;
    payload["entries"] = nlohmann::json::array();
    for (auto& [key, v] : h_) {
        auto& [b, g, m, n, r] = key;
        payload["entries"].push_back(
            {{"beta", b}, {"gamma", g}, {"m", m}, {"n", n}, {"r", r},
             {"h", v.get_str()}});
    }
    nlohmann::json j;
    j["payload"] = payload;
    j["fnv1a64"] = fnv1a64_hex(payload.dump());
    return j.dump();
}

long h_table_maxdeg(const HTableJob& job) {
    long n_top = 0;
    for (long n : job.n_values) n_top = std::max(n_top, n);
    return 7 * std::max(job.m_max, n_top) + kappa_of(job.parity) + 14 + 16;
}

HTable compute_h_table(const HTableJob& job, RepContext& ctx) {
    if (h_table_maxdeg(job) > ctx.maxdeg())
        throw UnderdeterminedInput("compute_h_table: solver budget too small");
    const long NN = 7 * ctx.window();
    HTable table(job.parity);

    // numerators y^beta x^m and denominators (A *) z^{-n}, cached at order NN
    QSeries x = series_x(NN), y = series_y(NN);
    std::vector<QSeries> num0, num1;
    num0.push_back(QSeries::one(NN));
    for (long m = 1; m <= job.m_max; ++m)
        num0.push_back(mul(num0.back(), x).truncate(NN));
    for (long m = 0; m <= job.m_max; ++m)
        num1.push_back(mul(y, num0[m]).truncate(NN));

    QSeries zinv = eta_series(
        EtaQuotientSpec{0, {{1, 7}, {14, 1}, {2, -7}, {7, -1}}}, NN);
    QSeries a_mult = job.parity == 0 ? series_A(2, NN) : QSeries::one(1);
    std::map<long, QSeries> den;
    {
        QSeries acc = QSeries::one(NN);
        long built = 0;
        std::vector<long> sorted_n = job.n_values;
        std::sort(sorted_n.begin(), sorted_n.end());
        for (long n : sorted_n) {
            while (built < n) {
                acc = mul(acc, zinv).truncate(NN);
                ++built;
            }
            den[n] = (job.parity == 0) ? mul(a_mult, acc).truncate(NN) : acc;
        }
    }

    long kappa = kappa_of(job.parity);
    for (long n : job.n_values) {
        for (int beta = 0; beta <= 1; ++beta) {
            for (long m = m_min(beta); m <= job.m_max; ++m) {
                const QSeries& num = beta ? num1[m] : num0[m];
                QSeries img = mul_then_u(num, den.at(n), 7);
                long nu = 7 * n + kappa;
                RawXY raw = ctx.represent(img.truncate(ctx.window()), nu);
                // factor the pi-profile weight out of every coefficient
                auto split = [&](int gamma, const std::map<long, Rat>& side) {
                    for (auto& [r, c] : side) {
                        long p = pi_profile(job.parity, beta, gamma, m, r);
                        Rat s = c;
                        if (p >= 0)
                            s /= Rat(pow7(p));
                        else
                            s *= Rat(pow7(-p));
                        s.canonicalize();
                        if (s.get_den() != 1)
                            throw NonIntegralH(
                                "h^{(" + std::to_string(job.parity) + ")}_{" +
                                std::to_string(beta) + std::to_string(gamma) +
                                "}(" + std::to_string(m) + "," +
                                std::to_string(n) + "," + std::to_string(r) +
                                ") misses its 7-adic weight");
                        table.insert(beta, gamma, m, n, r, Int(s.get_num()));
                    }
                };
                split(0, raw.c0);
                split(1, raw.c1);
                // is nu = 7n+kappa sharp? sharp iff the numerator pair does
                // not vanish at x = -1/7
                Rat at_root0(0), at_root1(0);
                Rat mx(-1, 7);
                {
                    // Horner over sparse maps
                    auto horner = [&](const std::map<long, Rat>& side) {
                        Rat acc(0);
                        long prev = -1;
                        for (auto it = side.rbegin(); it != side.rend(); ++it) {
                            if (prev < 0) {
                                acc = it->second;
                                prev = it->first;
                                continue;
                            }
                            for (long i = prev; i > it->first; --i) acc *= mx;
                            acc += it->second;
                            prev = it->first;
                        }
                        if (prev > 0)
                            for (long i = prev; i > 0; --i) acc *= mx;
                        return acc;
                    };
                    at_root0 = horner(raw.c0);
                    at_root1 = horner(raw.c1);
                }
                table.mark_cell(beta, m, n, !(at_root0 == 0 && at_root1 == 0));
            }
        }
    }
    return table;
}

const std::vector<HCongruenceRange>& h_congruence_ranges(int parity) {
    static const std::vector<HCongruenceRange> parity1 = {
        {0, 0, 1, 4, 1, 14}, {0, 0, 5, 5, 1, 1},  {0, 1, 1, 4, 1, 14},
        {1, 0, 0, 2, 1, 14}, {1, 0, 3, 3, 1, 1},  {1, 1, 1, 14, 1, 14},
    };
    static const std::vector<HCongruenceRange> parity0 = {
        {0, 0, 1, 14, 1, 14}, {0, 1, 1, 14, 1, 14},
        {1, 0, 1, 14, 1, 14}, {1, 1, 1, 14, 1, 14},
    };
    return parity ? parity1 : parity0;
}

long verify_h_congruences(const HTable& table) {
    long checked = 0;
    for (auto& rg : h_congruence_ranges(table.parity())) {
        for (long m = rg.m_lo; m <= rg.m_hi; ++m) {
            for (long r = rg.r_lo; r <= rg.r_hi; ++r) {
                for (long n = 1; n <= 7; ++n) {
                    Int d = table.at(rg.beta, rg.gamma, m, n, r) -
                            table.at(rg.beta, rg.gamma, m, n + 7, r);
                    if (!mpz_divisible_ui_p(d.get_mpz_t(), 49))
                        throw CongruenceFailure(
                            "mod 49 n->n+7 fails at (beta,gamma,m,n,r)=(" +
                            std::to_string(rg.beta) + "," +
                            std::to_string(rg.gamma) + "," +
                            std::to_string(m) + "," + std::to_string(n) +
                            "," + std::to_string(r) + ")");
                    ++checked;
                }
                for (long n = 1; n <= 13; ++n) {
                    Int d = table.at(rg.beta, rg.gamma, m, n, r) -
                            table.at(rg.beta, rg.gamma, m, n + 1, r);
                    if (!mpz_divisible_ui_p(d.get_mpz_t(), 7))
                        throw CongruenceFailure(
                            "mod 7 n->n+1 fails at (beta,gamma,m,n,r)=(" +
                            std::to_string(rg.beta) + "," +
                            std::to_string(rg.gamma) + "," +
                            std::to_string(m) + "," + std::to_string(n) +
                            "," + std::to_string(r) + ")");
                    ++checked;
                }
            }
        }
    }
    return checked;
}

}  // namespace ppd7
