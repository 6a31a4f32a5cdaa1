#pragma once

#include <cstdint>
#include <optional>

namespace overq {

bool is_prime_small(long long p);

/// Legendre symbol (a|p) in {-1, 0, +1} by Euler's criterion.
/// Throws unless p is an odd prime.
int legendre(long long a, long long p);

/// Inverse of a modulo m via extended gcd; throws when gcd(a, m) != 1.
long long mod_inverse(long long a, long long m);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Which quadratic shapes n takes, with witnesses, plus the number of
/// ordered representations n = k^2 + 2*l^2 with k, l >= 1.
struct NSquareClassification {
    long long n = 0;
    std::optional<long long> square_root;             // k >= 0 with n = k^2
    std::optional<long long> twice_square_root;       // k >= 1 with n = 2k^2
    std::optional<long long> twice_even_square_root;  // k >= 1 with n = 2(2k)^2
    std::optional<long long> twice_odd_square_root;   // k >= 1 with n = 2(2k-1)^2
    std::optional<long long> four_square_root;        // k >= 1 with n = 4k^2
    long long rep_count_k2_plus_2l2 = 0;

    bool is_square() const { return square_root.has_value(); }
    bool is_twice_square() const { return twice_square_root.has_value(); }
    bool is_4_times_square() const { return four_square_root.has_value(); }
};

NSquareClassification classify_n(long long n);

}  // namespace overq
