#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace overq {

/// Arbitrary-precision signed integer; all exact coefficient work runs on it.
using Integer = mpz_class;

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer pow2_integer(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

/// Canonical residue of v in [0, m), for either sign of v.
inline std::uint64_t mod_u64(const Integer& v, std::uint64_t m) {
    return mpz_fdiv_ui(v.get_mpz_t(), m);
}

}  // namespace overq
