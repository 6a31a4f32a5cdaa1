#include "overq/series.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace overq {

namespace {

std::atomic<ConvolutionMode> g_conv_mode{ConvolutionMode::Auto};

constexpr std::size_t kKroneckerThreshold = 48;
constexpr std::size_t kNewtonThreshold = 48;

using u64 = std::uint64_t;
using u128 = unsigned __int128;

[[noreturn]] void ring_mismatch() {
    throw std::invalid_argument("series: operands live in different rings");
}

void require_same_ring(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!(a.ring() == b.ring())) ring_mismatch();
}

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

/* Extended gcd inverse; works for any modulus, not just primes. */
bool try_inverse_mod(u64 a, u64 m, u64& inv) {
    long long t = 0, newt = 1;
    long long r = static_cast<long long>(m), newr = static_cast<long long>(a % m);
    while (newr != 0) {
        long long q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (r != 1) return false;
    if (t < 0) t += static_cast<long long>(m);
    inv = static_cast<u64>(t);
    return true;
}

// ---------------------------------------------------------------------------
// Modular kernels. Values are canonical residues; the accumulation strategy
// depends on the modulus width so the inner loops stay free of per-term
// divisions:
//   m <= 2^16 : products < 2^32, plain u64 accumulator
//   m <= 2^32 : products < 2^64, u128 accumulator
//   otherwise : per-term mulmod, u128 accumulator of residues
// ---------------------------------------------------------------------------

std::vector<u64> conv_mod(const std::vector<u64>& a, const std::vector<u64>& b,
                          std::size_t n, u64 m) {
    std::vector<u64> out(n, 0);
    const std::size_t na = a.size(), nb = b.size();
    if (na == 0 || nb == 0) return out;
    if (m <= (u64{1} << 16)) {
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t lo = (k + 1 > nb) ? k + 1 - nb : 0;
            const std::size_t hi = std::min(k, na - 1);
            u64 acc = 0;
            for (std::size_t i = lo; i <= hi; ++i) acc += a[i] * b[k - i];
            out[k] = acc % m;
        }
    } else if (m <= (u64{1} << 32)) {
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t lo = (k + 1 > nb) ? k + 1 - nb : 0;
            const std::size_t hi = std::min(k, na - 1);
            u128 acc = 0;
            for (std::size_t i = lo; i <= hi; ++i)
                acc += static_cast<u128>(a[i] * b[k - i]);
            out[k] = static_cast<u64>(acc % m);
        }
    } else {
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t lo = (k + 1 > nb) ? k + 1 - nb : 0;
            const std::size_t hi = std::min(k, na - 1);
            u128 acc = 0;
            for (std::size_t i = lo; i <= hi; ++i) acc += mulmod(a[i], b[k - i], m);
            out[k] = static_cast<u64>(acc % m);
        }
    }
    return out;
}

std::vector<u64> invert_mod(const std::vector<u64>& a, u64 m) {
    if (a.empty())
        throw std::invalid_argument("invert: empty series has no constant term");
    u64 inv0;
    if (!try_inverse_mod(a[0], m, inv0))
        throw std::invalid_argument(
            "invert: constant term is not a unit modulo " + std::to_string(m));
    const std::size_t n = a.size();
    std::vector<u64> b(n, 0);
    b[0] = inv0;
    // a0*b_n = -(a_1 b_{n-1} + ... + a_n b_0)
    for (std::size_t k = 1; k < n; ++k) {
        u128 acc = 0;
        if (m <= (u64{1} << 32)) {
            for (std::size_t i = 1; i <= k; ++i)
                acc += static_cast<u128>(a[i] * b[k - i]);
        } else {
            for (std::size_t i = 1; i <= k; ++i) acc += mulmod(a[i], b[k - i], m);
        }
        u64 s = static_cast<u64>(acc % m);
        b[k] = mulmod((m - s) % m, inv0, m);
    }
    return b;
}

// ---------------------------------------------------------------------------
// Exact kernels.
// ---------------------------------------------------------------------------

std::vector<Integer> conv_exact_school(const std::vector<Integer>& a,
                                       const std::vector<Integer>& b,
                                       std::size_t n) {
    std::vector<Integer> out(n);
    const std::size_t na = a.size(), nb = b.size();
    if (na == 0 || nb == 0) return out;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t lo = (k + 1 > nb) ? k + 1 - nb : 0;
        const std::size_t hi = std::min(k, na - 1);
        Integer acc = 0;
        for (std::size_t i = lo; i <= hi; ++i)
            mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[k - i].get_mpz_t());
        out[k] = std::move(acc);
    }
    return out;
}

std::size_t max_coeff_bits(const std::vector<Integer>& v) {
    std::size_t bits = 0;
    for (const Integer& x : v)
        if (mpz_sgn(x.get_mpz_t()) != 0)
            bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
    return bits;
}

/* Packs the positive (or negative) part of the coefficient vector into one
 * big integer with 64*slot_limbs bits per coefficient slot. mpz_export writes
 * magnitudes, which is exactly what the split wants. */
mpz_class kron_pack(const std::vector<Integer>& v, bool positive_part,
                    std::size_t slot_limbs, bool& any) {
    std::vector<u64> buf(slot_limbs * v.size(), 0);
    any = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        int sg = mpz_sgn(v[i].get_mpz_t());
        if ((positive_part && sg <= 0) || (!positive_part && sg >= 0)) continue;
        any = true;
        mpz_export(&buf[i * slot_limbs], nullptr, -1, sizeof(u64), 0, 0,
                   v[i].get_mpz_t());
    }
    mpz_class z;
    if (any) mpz_import(z.get_mpz_t(), buf.size(), -1, sizeof(u64), 0, 0, buf.data());
    return z;
}

void kron_unpack(const mpz_class& z, std::size_t slot_limbs, std::size_t n,
                 std::vector<Integer>& slots) {
    slots.assign(n, Integer(0));
    if (mpz_sgn(z.get_mpz_t()) == 0) return;
    const std::size_t zbits = mpz_sizeinbase(z.get_mpz_t(), 2);
    std::vector<u64> buf((zbits + 63) / 64 + slot_limbs * n, 0);
    mpz_export(buf.data(), nullptr, -1, sizeof(u64), 0, 0, z.get_mpz_t());
    for (std::size_t i = 0; i < n; ++i)
        mpz_import(slots[i].get_mpz_t(), slot_limbs, -1, sizeof(u64), 0, 0,
                   &buf[i * slot_limbs]);
}

/* Kronecker-substitution product: evaluate both polynomials at 2^(64*L),
 * multiply once in GMP, read the coefficients back out of the slots. Signed
 * input is split into positive and negative parts, giving four non-negative
 * products recombined per slot. Slot width is sized so that even the sum of
 * two packed products cannot carry across slots. */
std::vector<Integer> conv_exact_kronecker(const std::vector<Integer>& a,
                                          const std::vector<Integer>& b,
                                          std::size_t n) {
    const std::size_t ba = max_coeff_bits(a), bb = max_coeff_bits(b);
    if (ba == 0 || bb == 0) return std::vector<Integer>(n);
    std::size_t cnt = std::min(a.size(), b.size());
    std::size_t log2cnt = 0;
    while ((std::size_t{1} << log2cnt) < cnt) ++log2cnt;
    const std::size_t slot_bits = ba + bb + log2cnt + 2;
    const std::size_t slot_limbs = (slot_bits + 63) / 64;

    bool ap_any, an_any, bp_any, bn_any;
    mpz_class apos = kron_pack(a, true, slot_limbs, ap_any);
    mpz_class aneg = kron_pack(a, false, slot_limbs, an_any);
    mpz_class bpos = kron_pack(b, true, slot_limbs, bp_any);
    mpz_class bneg = kron_pack(b, false, slot_limbs, bn_any);

    mpz_class zpos = 0, zneg = 0;
    if (ap_any && bp_any) zpos += apos * bpos;
    if (an_any && bn_any) zpos += aneg * bneg;
    if (ap_any && bn_any) zneg += apos * bneg;
    if (an_any && bp_any) zneg += aneg * bpos;

    std::vector<Integer> pos_slots, neg_slots;
    kron_unpack(zpos, slot_limbs, n, pos_slots);
    kron_unpack(zneg, slot_limbs, n, neg_slots);
    std::vector<Integer> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = pos_slots[k] - neg_slots[k];
    return out;
}

std::vector<Integer> conv_exact(const std::vector<Integer>& a,
                                const std::vector<Integer>& b, std::size_t n) {
    switch (g_conv_mode.load(std::memory_order_relaxed)) {
        case ConvolutionMode::Schoolbook:
            return conv_exact_school(a, b, n);
        case ConvolutionMode::Kronecker:
            return conv_exact_kronecker(a, b, n);
        case ConvolutionMode::Auto:
        default:
            if (n >= kKroneckerThreshold) return conv_exact_kronecker(a, b, n);
            return conv_exact_school(a, b, n);
    }
}

Integer exact_unit_inverse(const Integer& c0) {
    if (c0 != 1 && c0 != -1)
        throw std::invalid_argument(
            "invert: constant term must be +1 or -1 over the exact ring");
    return c0;  // +-1 is its own inverse
}

std::vector<Integer> invert_exact_recurrence(const std::vector<Integer>& a) {
    const Integer inv0 = exact_unit_inverse(a.at(0));
    const std::size_t n = a.size();
    std::vector<Integer> b(n);
    b[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        Integer acc = 0;
        for (std::size_t i = 1; i <= k; ++i)
            mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(), b[k - i].get_mpz_t());
        b[k] = -inv0 * acc;
    }
    return b;
}

/* Newton doubling b <- b*(2 - a*b); each pass doubles the number of valid
 * coefficients, and the heavy lifting is two convolutions at the new size. */
std::vector<Integer> invert_exact_newton(const std::vector<Integer>& a) {
    const Integer inv0 = exact_unit_inverse(a.at(0));
    const std::size_t n = a.size();
    std::vector<Integer> b{inv0};
    while (b.size() < n) {
        const std::size_t k = std::min(b.size() * 2, n);
        std::vector<Integer> head(a.begin(), a.begin() + k);
        std::vector<Integer> t = conv_exact(head, b, k);
        t[0] = 2 - t[0];
        for (std::size_t i = 1; i < k; ++i) t[i] = -t[i];
        b = conv_exact(b, t, k);
    }
    return b;
}

std::vector<Integer> invert_exact(const std::vector<Integer>& a) {
    if (a.empty())
        throw std::invalid_argument("invert: empty series has no constant term");
    const ConvolutionMode mode = g_conv_mode.load(std::memory_order_relaxed);
    if (mode != ConvolutionMode::Schoolbook && a.size() >= kNewtonThreshold)
        return invert_exact_newton(a);
    return invert_exact_recurrence(a);
}

}  // namespace

void set_convolution_mode(ConvolutionMode mode) noexcept {
    g_conv_mode.store(mode, std::memory_order_relaxed);
}

ConvolutionMode convolution_mode() noexcept {
    return g_conv_mode.load(std::memory_order_relaxed);
}

// ---------------------------------------------------------------------------
// TruncatedSeries
// ---------------------------------------------------------------------------

TruncatedSeries::TruncatedSeries(const CoefficientRing& ring,
                                 std::vector<Integer> coeffs)
    : ring_(ring) {
    if (ring.is_exact()) {
        exact_ = std::move(coeffs);
    } else {
        const u64 m = ring.modulus();
        mod_.resize(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            mod_[i] = mod_u64(coeffs[i], m);
    }
}

TruncatedSeries TruncatedSeries::zero(const CoefficientRing& ring,
                                      std::size_t order) {
    TruncatedSeries s(ring);
    if (ring.is_exact())
        s.exact_.assign(order, Integer(0));
    else
        s.mod_.assign(order, 0);
    return s;
}

TruncatedSeries TruncatedSeries::one(const CoefficientRing& ring,
                                     std::size_t order) {
    return monomial(ring, order, 0, 1);
}

TruncatedSeries TruncatedSeries::monomial(const CoefficientRing& ring,
                                          std::size_t order, std::size_t degree,
                                          const Integer& coefficient) {
    TruncatedSeries s = zero(ring, order);
    if (degree < order) {
        if (ring.is_exact())
            s.exact_[degree] = coefficient;
        else
            s.mod_[degree] = mod_u64(coefficient, ring.modulus());
    }
    return s;
}

TruncatedSeries TruncatedSeries::from_words(const CoefficientRing& ring,
                                            std::vector<std::uint64_t> words) {
    if (ring.is_exact())
        throw std::logic_error("from_words: ring must be modular");
    TruncatedSeries s(ring);
    s.mod_ = std::move(words);
    return s;
}

std::size_t TruncatedSeries::order() const noexcept {
    return ring_.is_exact() ? exact_.size() : mod_.size();
}

Integer TruncatedSeries::coeff(std::size_t k) const {
    if (k >= order()) throw std::out_of_range("coeff: index past truncation order");
    if (ring_.is_exact()) return exact_[k];
    return Integer(static_cast<unsigned long>(mod_[k]));
}

std::uint64_t TruncatedSeries::coeff_word(std::size_t k) const {
    return words().at(k);
}

const std::vector<Integer>& TruncatedSeries::exact_coeffs() const {
    if (!ring_.is_exact())
        throw std::logic_error("exact_coeffs: series is modular");
    return exact_;
}

const std::vector<std::uint64_t>& TruncatedSeries::words() const {
    if (ring_.is_exact()) throw std::logic_error("words: series is exact");
    return mod_;
}

bool TruncatedSeries::is_zero() const {
    if (ring_.is_exact())
        return std::all_of(exact_.begin(), exact_.end(),
                           [](const Integer& x) { return x == 0; });
    return std::all_of(mod_.begin(), mod_.end(), [](u64 x) { return x == 0; });
}

// ---------------------------------------------------------------------------
// Free operations
// ---------------------------------------------------------------------------

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_ring(a, b);
    const std::size_t n = std::min(a.order(), b.order());
    if (a.ring().is_exact()) {
        std::vector<Integer> out(n);
        const auto& ca = a.exact_coeffs();
        const auto& cb = b.exact_coeffs();
        for (std::size_t i = 0; i < n; ++i) out[i] = ca[i] + cb[i];
        return TruncatedSeries(a.ring(), std::move(out));
    }
    const u64 m = a.ring().modulus();
    std::vector<u64> out(n);
    const auto& ca = a.words();
    const auto& cb = b.words();
    for (std::size_t i = 0; i < n; ++i) {
        u64 s = ca[i] + cb[i];  // both < m <= 2^63 would be needed for no-overflow;
        out[i] = (s >= m || s < ca[i]) ? (s - m) : s;  // handles wrap for large m
    }
    return TruncatedSeries::from_words(a.ring(), std::move(out));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_ring(a, b);
    const std::size_t n = std::min(a.order(), b.order());
    if (a.ring().is_exact()) {
        std::vector<Integer> out(n);
        const auto& ca = a.exact_coeffs();
        const auto& cb = b.exact_coeffs();
        for (std::size_t i = 0; i < n; ++i) out[i] = ca[i] - cb[i];
        return TruncatedSeries(a.ring(), std::move(out));
    }
    const u64 m = a.ring().modulus();
    std::vector<u64> out(n);
    const auto& ca = a.words();
    const auto& cb = b.words();
    for (std::size_t i = 0; i < n; ++i)
        out[i] = (ca[i] >= cb[i]) ? ca[i] - cb[i] : ca[i] + (m - cb[i]);
    return TruncatedSeries::from_words(a.ring(), std::move(out));
}

TruncatedSeries negate(const TruncatedSeries& a) {
    return sub(TruncatedSeries::zero(a.ring(), a.order()), a);
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_ring(a, b);
    const std::size_t n = std::min(a.order(), b.order());
    if (a.ring().is_exact())
        return TruncatedSeries(a.ring(),
                               conv_exact(a.exact_coeffs(), b.exact_coeffs(), n));
    return TruncatedSeries::from_words(
        a.ring(), conv_mod(a.words(), b.words(), n, a.ring().modulus()));
}

TruncatedSeries invert(const TruncatedSeries& a) {
    if (a.ring().is_exact())
        return TruncatedSeries(a.ring(), invert_exact(a.exact_coeffs()));
    return TruncatedSeries::from_words(a.ring(),
                                       invert_mod(a.words(), a.ring().modulus()));
}

TruncatedSeries pow(const TruncatedSeries& a, long long exponent) {
    if (exponent == std::numeric_limits<long long>::min())
        throw std::invalid_argument("pow: exponent out of range");
    if (exponent < 0) return invert(pow(a, -exponent));
    TruncatedSeries result = TruncatedSeries::one(a.ring(), a.order());
    if (exponent == 0) return result;
    TruncatedSeries base = a;
    unsigned long long e = static_cast<unsigned long long>(exponent);
    while (true) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e == 0) break;
        base = mul(base, base);
    }
    return result;
}

TruncatedSeries scale_variable(const TruncatedSeries& a, std::uint64_t t) {
    if (t < 1) throw std::invalid_argument("scale_variable: t must be >= 1");
    const std::size_t n = a.order();
    if (a.ring().is_exact()) {
        std::vector<Integer> out(n);
        const auto& c = a.exact_coeffs();
        for (std::size_t k = 0; k * t < n; ++k) out[k * t] = c[k];
        return TruncatedSeries(a.ring(), std::move(out));
    }
    std::vector<u64> out(n, 0);
    const auto& c = a.words();
    for (std::size_t k = 0; k * t < n; ++k) out[k * t] = c[k];
    return TruncatedSeries::from_words(a.ring(), std::move(out));
}

TruncatedSeries extract_ap(const TruncatedSeries& a, std::uint64_t residue,
                           std::uint64_t step) {
    if (step < 1 || residue >= step)
        throw std::invalid_argument("extract_ap: need 0 <= residue < step");
    const std::size_t n = a.order();
    const std::size_t m =
        (n > residue) ? (n - residue + step - 1) / step : 0;
    if (a.ring().is_exact()) {
        std::vector<Integer> out(m);
        const auto& c = a.exact_coeffs();
        for (std::size_t k = 0; k < m; ++k) out[k] = c[step * k + residue];
        return TruncatedSeries(a.ring(), std::move(out));
    }
    std::vector<u64> out(m);
    const auto& c = a.words();
    for (std::size_t k = 0; k < m; ++k) out[k] = c[step * k + residue];
    return TruncatedSeries::from_words(a.ring(), std::move(out));
}

TruncatedSeries reduce_mod(const TruncatedSeries& a, std::uint64_t m) {
    if (!a.ring().is_exact())
        throw std::invalid_argument("reduce_mod: operand must be exact");
    const CoefficientRing ring = CoefficientRing::residue(m);
    const auto& c = a.exact_coeffs();
    std::vector<u64> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = mod_u64(c[i], m);
    return TruncatedSeries::from_words(ring, std::move(out));
}

TruncatedSeries shift_up(const TruncatedSeries& a, std::size_t k) {
    const std::size_t n = a.order();
    if (a.ring().is_exact()) {
        std::vector<Integer> out(n);
        const auto& c = a.exact_coeffs();
        for (std::size_t i = k; i < n; ++i) out[i] = c[i - k];
        return TruncatedSeries(a.ring(), std::move(out));
    }
    std::vector<u64> out(n, 0);
    const auto& c = a.words();
    for (std::size_t i = k; i < n; ++i) out[i] = c[i - k];
    return TruncatedSeries::from_words(a.ring(), std::move(out));
}

TruncatedSeries scalar_mul(const TruncatedSeries& a, const Integer& c) {
    const std::size_t n = a.order();
    if (a.ring().is_exact()) {
        std::vector<Integer> out(n);
        const auto& v = a.exact_coeffs();
        for (std::size_t i = 0; i < n; ++i) out[i] = v[i] * c;
        return TruncatedSeries(a.ring(), std::move(out));
    }
    const u64 m = a.ring().modulus();
    const u64 cw = mod_u64(c, m);
    std::vector<u64> out(n);
    const auto& v = a.words();
    for (std::size_t i = 0; i < n; ++i) out[i] = mulmod(v[i], cw, m);
    return TruncatedSeries::from_words(a.ring(), std::move(out));
}

SeriesComparison compare(const TruncatedSeries& a, const TruncatedSeries& b,
                         std::size_t max_mismatches) {
    require_same_ring(a, b);
    SeriesComparison r;
    r.order_compared = std::min(a.order(), b.order());
    if (a.ring().is_exact()) {
        const auto& ca = a.exact_coeffs();
        const auto& cb = b.exact_coeffs();
        for (std::size_t i = 0; i < r.order_compared; ++i) {
            if (ca[i] != cb[i]) {
                r.equal = false;
                if (r.mismatches.size() < max_mismatches)
                    r.mismatches.push_back({i, ca[i], cb[i]});
            }
        }
    } else {
        const auto& ca = a.words();
        const auto& cb = b.words();
        for (std::size_t i = 0; i < r.order_compared; ++i) {
            if (ca[i] != cb[i]) {
                r.equal = false;
                if (r.mismatches.size() < max_mismatches)
                    r.mismatches.push_back({i, Integer((unsigned long)ca[i]),
                                            Integer((unsigned long)cb[i])});
            }
        }
    }
    return r;
}

}  // namespace overq
