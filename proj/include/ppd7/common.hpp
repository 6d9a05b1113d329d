#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ppd7 {

using Int = mpz_class;
using Rat = mpq_class;

// Floor division; C++ '/' truncates toward zero, the profile formulas need
// true floors on negative numerators.
inline long fdiv(long a, long b) {
    long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline Int pow7(long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 7, static_cast<unsigned long>(e));
    return r;
}

// 7-adic valuation; nullopt for 0.
inline std::optional<long> ord7(const Int& v) {
    if (v == 0) return std::nullopt;
    Int t = v;
    long o = 0;
    while (mpz_divisible_ui_p(t.get_mpz_t(), 7)) {
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), 7);
        ++o;
    }
    return o;
}

// Least non-negative residue.
inline Int mod_reduce(const Int& v, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline long mod_reduce_ul(const Int& v, unsigned long m) {
    Int r;
    mpz_mod_ui(r.get_mpz_t(), v.get_mpz_t(), m);
    return static_cast<long>(r.get_ui());
}

// FNV-1a 64, used as the content hash for data files and tables.
inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string fnv1a64_hex(const std::string& s);

// ---- error taxonomy ----

struct NonUnitConstantTerm : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RationalCoefficients : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NegativeValuation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IntegralityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CrossCheckMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InsufficientTruncation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NoRepresentation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnderdeterminedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonIntegralEvaluation : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IdentityFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonIntegralH : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataShapeFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CongruenceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotInIdeal : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ChecksumMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ppd7
