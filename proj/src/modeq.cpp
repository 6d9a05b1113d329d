#include "ppd7/modeq.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "ppd7/eta.hpp"

namespace ppd7 {

ModularEquationData ModularEquationData::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataShapeFailure("cannot open coefficient file: " + path);
    nlohmann::json j;
    in >> j;
    std::string recorded = j.at("fnv1a64").get<std::string>();
    std::string canonical = j.at("payload").dump();
    if (fnv1a64_hex(canonical) != recorded)
        throw ChecksumMismatch("coefficient file content hash mismatch: " +
                               path);
    ModularEquationData d;
    d.checksum = recorded;
    auto read_family = [&](const char* key) {
        std::vector<Poly> fam(15);
        for (auto& [idx, arr] : j.at("payload").at(key).items()) {
            Poly p;
            for (auto& c : arr) p.emplace_back(c.get<std::string>());
            fam.at(std::stoul(idx)) = poly_trim(std::move(p));
        }
        return fam;
    };
    d.b = read_family("b");
    d.a = read_family("a");
    // structural pins: b0 = z^14, b14 = 1, a14 = 1
    Poly z14(15, Int(0));
    z14[14] = 1;
    if (d.b[0] != z14) throw DataShapeFailure("b0 != z^14");
    if (d.b[14] != Poly{Int(1)}) throw DataShapeFailure("b14 != 1");
    if (d.a[14] != Poly{Int(1)}) throw DataShapeFailure("a14 != 1");
    return d;
}

void ModularEquationData::verify_substitution_consistency() const {
    // LHS_j(X) := sum_k b_k(1+7X) * C(k,j) * 7^j  must equal 7^14 * a_j(X)
    // for j < 14 and 7^14 for j = 14.
    std::vector<Poly> lhs(15, Poly{Int(0)});
    for (long k = 0; k <= 14; ++k) {
        Poly bk = poly_substitute_1p7x(b[k]);
        Int binom, p7 = 1;
        for (long j = 0; j <= k; ++j) {
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k),
                         static_cast<unsigned long>(j));
            lhs[j] = poly_add(lhs[j], poly_scale(binom * p7, bk));
            p7 *= 7;
        }
    }
    Int seven14 = pow7(14);
    for (long j = 0; j <= 14; ++j) {
        Poly want = (j == 14) ? Poly{seven14} : poly_scale(seven14, a[j]);
        if (poly_trim(lhs[j]) != want)
            throw DataShapeFailure(
                "substitution consistency fails at x^" + std::to_string(j));
    }
}

namespace {

/* Shared driver: given the argument series `arg` (z or x), its dilation
 * `arg7` = arg(q^7) already expanded, and the coefficient family, expand
 *   arg^14 + sum_{k=0}^{13} fam_k(arg7) * arg^k
 * by Horner in arg and assert vanishing through `order`. */
void verify_relation(const std::vector<Poly>& fam, const QSeries& arg,
                     const QSeries& arg7, long order, const char* label) {
    // powers of arg7 (supported on multiples of 7) up to degree 14
    std::vector<QSeries> a7pow;
    a7pow.push_back(QSeries::one(order));
    for (int j = 1; j <= 14; ++j)
        a7pow.push_back(mul(a7pow.back(), arg7).truncate(order));
    auto eval_fam = [&](const Poly& p) {
        std::vector<std::pair<Int, QSeries>> terms;
        for (size_t d = 0; d < p.size(); ++d)
            if (p[d] != 0) terms.emplace_back(p[d], a7pow[d]);
        if (terms.empty()) return QSeries(order);
        return linear_combine(terms);
    };
    // Horner: acc = 1 (coefficient of arg^14); then fold in fam_13..fam_0
    QSeries acc = QSeries::one(order);
    for (int k = 13; k >= 0; --k) {
        acc = mul(acc, arg).truncate(order);
        acc = add(acc, eval_fam(fam[k]));
    }
    for (long e = 0; e < order; ++e)
        if (acc.coeff(e) != 0)
            throw IdentityFailure(std::string(label) +
                                  ": nonzero coefficient at q^" +
                                  std::to_string(e));
}

}  // namespace

void verify_modeq_z(const ModularEquationData& d, long order) {
    QSeries z = series_z(order);
    QSeries z7 = dilate(series_z((order + 6) / 7 + 1), 7).truncate(order);
    verify_relation(d.b, z, z7, order, "modular equation in z");
}

void verify_modeq_x(const ModularEquationData& d, long order) {
    QSeries x = series_x(order);
    QSeries x7 = dilate(series_x((order + 6) / 7 + 1), 7).truncate(order);
    verify_relation(d.a, x, x7, order, "modular equation in x");
}

}  // namespace ppd7
