#include "ppd7/eta.hpp"

#include <nlohmann/json.hpp>

namespace ppd7 {

Rat EtaQuotientSpec::eta_normalized_order() const {
    Rat acc(qpow);
    for (auto& [d, e] : factors) acc += Rat(d * e, 24);
    acc.canonicalize();
    return acc;
}

QSeries eta_series(const EtaQuotientSpec& spec, long order) {
    if (order < 1) throw DomainError("eta_series: order must be >= 1");
    if (spec.qpow < 0)
        throw NegativeValuation(
            "eta_series: negative leading q-power cannot be expanded at "
            "[infinity]");
    QSeries out = QSeries::one(order);
    for (auto& [d, e] : spec.factors)
        if (e != 0) out = mul(out, euler_factor(d, e, order)).truncate(order);
    if (spec.qpow > 0) out = shift(out, spec.qpow).truncate(order + spec.qpow);
    return out;
}

EtaQuotientSpec spec_Dk(int k) {
    if (k < 1) throw DomainError("spec_Dk: k must be >= 1");
    return {0, {{2, k}, {1, -(3 * k + 1)}}};
}
EtaQuotientSpec spec_z() { return {0, {{2, 7}, {7, 1}, {1, -7}, {14, -1}}}; }
EtaQuotientSpec spec_y0() { return {0, {{2, 4}, {7, 8}, {1, -8}, {14, -4}}}; }
EtaQuotientSpec spec_A(int k) {
    if (k == 2) return {6, {{2, 2}, {49, 7}, {1, -7}, {98, -2}}};
    if (k == 3) return {1, {{2, 3}, {49, 10}, {1, -10}, {98, -3}}};
    throw DomainError("spec_A: k must be 2 or 3");
}
EtaQuotientSpec spec_m_frak() {
    return {-4, {{2, 5}, {7, 7}, {1, -1}, {14, -11}}};
}

QSeries series_Dk(int k, long order) { return eta_series(spec_Dk(k), order); }
QSeries series_z(long order) { return eta_series(spec_z(), order); }
QSeries series_y0(long order) { return eta_series(spec_y0(), order); }
QSeries series_A(int k, long order) { return eta_series(spec_A(k), order); }

namespace {
QSeries shift_down_unit(const QSeries& f, long div, const char* what) {
    // (f - 1)/div with divisibility checked coefficientwise
    QSeries out(f.trunc());
    for (long i = 0; i < f.trunc(); ++i) {
        Int c = f.coeff(i);
        if (i == 0) c -= 1;
        if (!mpz_divisible_ui_p(c.get_mpz_t(), div))
            throw IntegralityViolation(std::string(what) +
                                       ": coefficient not divisible at q^" +
                                       std::to_string(i));
        mpz_divexact_ui(out.coeff_mut(i).get_mpz_t(), c.get_mpz_t(), div);
    }
    return out;
}
}  // namespace

QSeries series_x(long order) {
    return shift_down_unit(series_z(order), 7, "x = (z-1)/7");
}
QSeries series_y(long order) {
    return shift_down_unit(series_y0(order), 8, "y = (y0-1)/8");
}

QSeries series_rL(long order) {
    QSeries x = series_x(order), y = series_y(order);
    QSeries x2 = mul(x, x).truncate(order);
    QSeries x3 = mul(x2, x).truncate(order);
    QSeries xy = mul(x, y).truncate(order);
    QSeries comb = linear_combine(
        {{1, x}, {3, x2}, {1, x3}, {6, y}, {5, xy}});
    QSeries out(order);
    for (long i = 0; i < order; ++i) {
        if (!mpz_divisible_ui_p(comb.coeff(i).get_mpz_t(), 7))
            throw IntegralityViolation("r_L: coefficient not divisible by 7 at q^" +
                                       std::to_string(i));
        mpz_divexact_ui(out.coeff_mut(i).get_mpz_t(), comb.coeff(i).get_mpz_t(),
                        7);
    }
    return out;
}

Int lambda_index(int k, long alpha) {
    if (alpha < 1) throw DomainError("lambda_index: alpha must be >= 1");
    if (k != 2 && k != 3) throw DomainError("lambda_index: k must be 2 or 3");
    Int mod = pow7(alpha);
    Int base = (k == 2) ? 8 : 6;
    Int inv;
    if (!mpz_invert(inv.get_mpz_t(), base.get_mpz_t(), mod.get_mpz_t()))
        throw DomainError("lambda_index: not invertible");
    return inv;  // mpz_invert returns the least non-negative representative
}

StepShape ladder_step_shape(int k, long alpha) {
    // Exponent c makes U_7(q^c * ...) extract the next lambda progression:
    // c = (6 - t) mod 7 with t = (lambda_{a+1} - lambda_a)/7^a.
    if (k == 2) return (alpha % 2 == 1) ? StepShape{0, 0} : StepShape{6, 1};
    if (k == 3) return (alpha % 2 == 1) ? StepShape{1, 0} : StepShape{1, 1};
    throw DomainError("ladder_step_shape: k must be 2 or 3");
}

LadderState build_L1(int k, long order, long crosscheck_order) {
    if (order < 1) throw DomainError("build_L1: order must be >= 1");
    // route (a): definitional subsequence assembly
    QSeries Dk_big = series_Dk(k, 7 * order);
    QSeries sub(order);
    Int lam1 = lambda_index(k, 1);
    long lam = lam1.get_si();
    for (long n = 0; n + 1 < order; ++n) sub.coeff_mut(n + 1) = Dk_big.coeff(7 * n + lam);
    QSeries prefactor =
        mul(euler_factor(7, 3 * k + 1, order), euler_factor(14, -k, order))
            .truncate(order);
    QSeries l1 = mul(prefactor, sub).truncate(order);

    // route (b): U_7 of the eta-quotient multiplier
    long cap = std::min(order, crosscheck_order);
    if (cap >= 2) {
        QSeries a_form = eta_series(spec_A(k), 7 * cap);
        QSeries l1b = u_operator(a_form.truncate(7 * cap), 7);
        for (long i = 0; i < cap; ++i)
            if (l1.coeff(i) != l1b.coeff(i))
                throw CrossCheckMismatch(
                    "build_L1: definitional and U-image routes disagree at q^" +
                    std::to_string(i));
    }
    return LadderState{k, 1, l1};
}

LadderState ladder_step(const LadderState& state, long demanded_order) {
    StepShape sh = ladder_step_shape(state.k, state.alpha);
    long have = state.series.trunc();
    QSeries next = [&] {
        if (sh.eps == 0) {
            if (sh.c == 0) return u_operator(state.series, 7);
            return u_operator(shift(state.series, sh.c), 7);
        }
        // multiplier q^c * D_k(q)/D_k(q^49)
        long n = have + sh.c;
        QSeries m = mul(series_Dk(state.k, n),
                        invert(eta_series(
                            EtaQuotientSpec{0, {{98, state.k},
                                                {49, -(3 * state.k + 1)}}},
                            n)))
                        .truncate(n);
        return u_operator(mul(shift(m, sh.c), state.series), 7);
    }();
    if (next.trunc() < demanded_order)
        throw InsufficientTruncation(
            "ladder_step: input order " + std::to_string(have) +
            " yields only " + std::to_string(next.trunc()) + " < " +
            std::to_string(demanded_order));
    return LadderState{state.k, state.alpha + 1, next.truncate(demanded_order)};
}

std::vector<long> ladder_budget(int k, long alpha_target, long n_final) {
    std::vector<long> need(static_cast<size_t>(alpha_target) + 1, 0);
    need[alpha_target] = n_final;
    for (long a = alpha_target - 1; a >= 1; --a) {
        StepShape sh = ladder_step_shape(k, a);
        need[a] = 7 * need[a + 1] - sh.c;
    }
    need[0] = 7 * need[1];  // order of D_k needed by build_L1
    return need;
}

std::string named_catalog_json(long coeffs) {
    nlohmann::json cat = nlohmann::json::object();
    auto put = [&](const std::string& name, const EtaQuotientSpec& sp,
                   bool expandable) {
        nlohmann::json e;
        e["qpow"] = sp.qpow;
        for (auto& [d, ex] : sp.factors)
            e["factors"].push_back({{"delta", d}, {"exponent", ex}});
        Rat eno = sp.eta_normalized_order();
        e["eta_normalized_order"] = eno.get_str();
        e["order_at_infinity"] = sp.order_at_infinity();
        if (expandable) {
            QSeries s = eta_series(sp, coeffs);
            for (long i = 0; i < coeffs; ++i)
                e["coefficients"].push_back(s.coeff(i).get_str());
        }
        cat[name] = e;
    };
    put("D2", spec_Dk(2), true);
    put("D3", spec_Dk(3), true);
    put("z", spec_z(), true);
    put("y0", spec_y0(), true);
    put("A", spec_A(2), true);
    put("m", spec_m_frak(), false);
    for (auto& [name, fn] :
         std::vector<std::pair<std::string, QSeries (*)(long)>>{
             {"x", series_x}, {"y", series_y}, {"rL", series_rL}}) {
        nlohmann::json e;
        e["derived"] = true;
        QSeries s = fn(coeffs);
        for (long i = 0; i < coeffs; ++i)
            e["coefficients"].push_back(s.coeff(i).get_str());
        cat[name] = e;
    }
    return cat.dump(1);
}

}  // namespace ppd7
