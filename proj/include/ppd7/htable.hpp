#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "ppd7/xyring.hpp"

namespace ppd7 {

/* Integer arrays h^(parity)_{beta gamma}(m, n, r): the U-image of
 * y^beta x^m (1+7x)^{-n} expands exactly as
 *   (1+7x)^{-(7n+kappa)} sum_{gamma,r} h * 7^{pi(m,r)} y^gamma x^r
 * with integer h of finite support in r. */
class HTable {
public:
    using Key = std::tuple<int, int, long, long, long>;  // beta,gamma,m,n,r

    explicit HTable(int parity) : parity_(parity) {}

    int parity() const { return parity_; }

    const Int& at(int beta, int gamma, long m, long n, long r) const;
    bool has_cell(int beta, long m, long n) const;
    long support_max(int beta, int gamma, long m, long n) const;

    void insert(int beta, int gamma, long m, long n, long r, Int h);
    void mark_cell(int beta, long m, long n, bool nu_exact);
    bool nu_exact(int beta, long m, long n) const;

    size_t entries() const { return h_.size(); }
    std::string to_json() const;  // decimal strings + content hash

    const std::map<Key, Int>& raw() const { return h_; }

private:
    int parity_;
    std::map<Key, Int> h_;
    std::map<std::tuple<int, long, long>, bool> cells_;  // value: nu exact
};

/* Computes h-table cells for m in [m_min(beta), m_max], n in n_values.
 * `ctx` supplies the solver; its budget must cover 7*max(m,n)+kappa+14beta
 * plus slack.  Throws NonIntegralH when a raw coefficient misses its
 * pi-profile weight. */
struct HTableJob {
    int parity;
    long m_max = 14;
    std::vector<long> n_values;  // e.g. 1..14
};

HTable compute_h_table(const HTableJob& job, RepContext& ctx);

// Required solver budget for the given job (degree of the largest numerator).
long h_table_maxdeg(const HTableJob& job);

/* Theorem-style congruence checks on a computed table:
 *   h(m,n,r) == h(m,n+7,r)  (mod 49)  on the listed (beta,gamma,m,r) ranges
 *   h(m,n,r) == h(m,n+1,r)  (mod 7)   on the same ranges.
 * Returns the number of congruences checked; throws CongruenceFailure with a
 * witness tuple on the first violation. */
struct HCongruenceRange {
    int beta, gamma;
    long m_lo, m_hi, r_lo, r_hi;
};
const std::vector<HCongruenceRange>& h_congruence_ranges(int parity);
long verify_h_congruences(const HTable& table);

}  // namespace ppd7
