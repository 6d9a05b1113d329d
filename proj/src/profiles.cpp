#include "ppd7/profiles.hpp"

#include <algorithm>

namespace ppd7 {

namespace {
void check01(int parity, int beta, int gamma = 0) {
    if (parity < 0 || parity > 1 || beta < 0 || beta > 1 || gamma < 0 ||
        gamma > 1)
        throw DomainError("profile: parity/beta/gamma must be 0 or 1");
}
}  // namespace

long theta(int parity, int beta, long m) {
    check01(parity, beta);
    if (m < m_min(beta)) throw DomainError("theta: m below domain");
    if (parity == 1) {
        if (beta == 0) return m <= 3 ? -1 : fdiv(7 * m - 28, 9);
        return m <= 1 ? -1 : fdiv(7 * m - 14, 9);
    }
    if (beta == 0) return m <= 2 ? 0 : fdiv(7 * m - 16, 9);
    return m <= 1 ? 0 : fdiv(7 * m - 5, 9);
}

long pi_profile(int parity, int beta, int gamma, long m, long r) {
    check01(parity, beta, gamma);
    if (m < m_min(beta)) throw DomainError("pi: m below domain");
    if (r < m_min(gamma)) throw DomainError("pi: r below domain");
    if (parity == 1) {
        if (beta == 0 && gamma == 0) {
            if (m <= 3 && r >= 9) return fdiv(7 * r + 2, 9);
            return std::max(0L, fdiv(7 * r - m, 9));
        }
        if (beta == 0 && gamma == 1)
            return std::max(0L, fdiv(7 * r - m + 16, 9));
        if (beta == 1 && gamma == 0) {
            if (m <= 1 && r >= 11) return fdiv(7 * r + 2, 9);
            if (m == 0 && r <= 10) return fdiv(7 * r - 3, 9);
            return std::max(0L, fdiv(7 * r - m - 2, 9));
        }
        // (1,1)
        if (m <= 1 && r >= 7) return fdiv(7 * r + 4, 9) + 1;
        if (m == 0) return fdiv(7 * r + 2, 9) + 1;
        return std::max(0L, fdiv(7 * r - m + 3, 9) + 1);
    }
    if (beta == 0 && gamma == 0) {
        if (r <= 3) return -1;
        return std::max(0L, fdiv(7 * r - m + 4, 9) - 3);
    }
    if (beta == 0 && gamma == 1) {
        // the defining table skips 2 <= r <= 3; the r >= 4 branch extends
        // there, and the h integrality checks pin the choice down
        if (r <= 1) return -1;
        return std::max(0L, fdiv(7 * r - m, 9) - 1);
    }
    if (beta == 1 && gamma == 0) {
        if (r <= 3) return -1;
        if (m == 0) return std::max(0L, fdiv(7 * r - 1, 9) - 3);
        return std::max(0L, fdiv(7 * r - m, 9) - 3);
    }
    // (1,1)
    if (r <= 1) return -1;
    if (m == 0) return std::max(0L, fdiv(7 * r - m + 4, 9) - 2);
    return std::max(0L, fdiv(7 * r - m + 5, 9) - 2);
}

long pi_epsilon(int parity, int beta, int gamma) {
    check01(parity, beta, gamma);
    if (parity == 1) {
        if (beta == 0 && gamma == 0) return 0;
        if (beta == 0 && gamma == 1) return 16;
        if (beta == 1 && gamma == 0) return -2;
        return 3;  // eventual form carries an extra +1 handled by callers
    }
    if (beta == 0 && gamma == 0) return 4 - 27;
    if (beta == 0 && gamma == 1) return -9;
    if (beta == 1 && gamma == 0) return -27;
    return 5 - 18;
}

}  // namespace ppd7
