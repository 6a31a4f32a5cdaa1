#include "overq/ntheory.hpp"

#include <stdexcept>
#include <utility>

namespace overq {

bool is_prime_small(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    using u128 = unsigned __int128;
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) result = static_cast<std::uint64_t>((u128)result * base % mod);
        base = static_cast<std::uint64_t>((u128)base * base % mod);
        exp >>= 1;
    }
    return result;
}

int legendre(long long a, long long p) {
    if (p < 3 || !is_prime_small(p))
        throw std::invalid_argument("legendre: p must be an odd prime");
    long long r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    const std::uint64_t e = pow_mod(static_cast<std::uint64_t>(r),
                                    static_cast<std::uint64_t>((p - 1) / 2),
                                    static_cast<std::uint64_t>(p));
    return e == 1 ? 1 : -1;
}

long long mod_inverse(long long a, long long m) {
    if (m < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
    long long t = 0, newt = 1;
    long long r = m, newr = ((a % m) + m) % m;
    while (newr != 0) {
        const long long q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (r != 1)
        throw std::invalid_argument("mod_inverse: argument is not a unit");
    return t < 0 ? t + m : t;
}

namespace {

std::optional<long long> exact_sqrt(long long n) {
    if (n < 0) return std::nullopt;
    long long k = 0;
    while (k * k < n) ++k;
    if (k * k == n) return k;
    return std::nullopt;
}

}  // namespace

NSquareClassification classify_n(long long n) {
    if (n < 0) throw std::invalid_argument("classify_n: n must be >= 0");
    NSquareClassification c;
    c.n = n;
    c.square_root = exact_sqrt(n);
    if (n % 2 == 0) {
        if (auto k = exact_sqrt(n / 2); k && *k >= 1) {
            c.twice_square_root = k;
            if (*k % 2 == 0)
                c.twice_even_square_root = *k / 2;
            else
                c.twice_odd_square_root = (*k + 1) / 2;
        }
    }
    if (n % 4 == 0) {
        if (auto k = exact_sqrt(n / 4); k && *k >= 1) c.four_square_root = k;
    }
    for (long long k = 1; k * k < n; ++k) {
        const long long rest = n - k * k;
        if (rest % 2 != 0) continue;
        if (auto l = exact_sqrt(rest / 2); l && *l >= 1)
            ++c.rep_count_k2_plus_2l2;
    }
    return c;
}

}  // namespace overq
