#include "overq/qseries.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace overq {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
        .count();
}

bool is_prime_small(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

TruncatedSeries theta_sum(long long t, std::size_t order,
                          const CoefficientRing& ring, bool alternating) {
    if (t < 1) throw std::invalid_argument("phi: t must be >= 1");
    std::vector<Integer> coeffs(order, Integer(0));
    if (order > 0) coeffs[0] = 1;
    for (unsigned long long n = 1;; ++n) {
        const unsigned long long e = static_cast<unsigned long long>(t) * n * n;
        if (e >= order) break;
        coeffs[e] = (alternating && n % 2 == 1) ? -2 : 2;
    }
    return TruncatedSeries(ring, std::move(coeffs));
}

/// sum_m coeff(m) * q^m * base^m for m = 0..mtop, truncated to `order`.
template <class F>
TruncatedSeries weighted_power_sum(std::size_t order, const CoefficientRing& ring,
                                   const TruncatedSeries& base, long long mtop,
                                   F&& coeff) {
    TruncatedSeries sum = TruncatedSeries::zero(ring, order);
    TruncatedSeries bp = TruncatedSeries::one(ring, order);
    for (long long m = 0; m <= mtop && static_cast<std::size_t>(m) < order; ++m) {
        if (m > 0) bp = mul(bp, base);
        sum = add(sum, shift_up(scalar_mul(bp, coeff(m)), static_cast<std::size_t>(m)));
    }
    return sum;
}

void append_mismatches(VerificationReport& report, const SeriesComparison& cmp,
                       long long index_scale = 1, long long index_offset = 0) {
    for (const auto& mm : cmp.mismatches)
        report.counterexamples.push_back(
            {index_scale * static_cast<long long>(mm.index) + index_offset,
             mm.lhs.get_str()});
}

}  // namespace

TruncatedSeries phi(long long t, std::size_t order, const CoefficientRing& ring) {
    return theta_sum(t, order, ring, false);
}

TruncatedSeries phi_neg(long long t, std::size_t order,
                        const CoefficientRing& ring) {
    return theta_sum(t, order, ring, true);
}

EtaQuotientSpec overcolored_spec(const ColorParams& p) {
    return EtaQuotientSpec{
        {2, 3 * p.s - 2 * p.r}, {1, -2 * p.s}, {4, p.r - p.s}};
}

EtaQuotientSpec colored_spec(const ColorParams& p) {
    return EtaQuotientSpec{{2, p.s - p.r}, {1, -p.s}};
}

EtaQuotientSpec even_over_spec(long long r) {
    if (r < 1) throw std::invalid_argument("even_over_spec: r must be >= 1");
    return EtaQuotientSpec{{4, r - 1}, {1, -2}, {2, 3 - 2 * r}};
}

EtaQuotientSpec odd_over_spec(long long s) {
    if (s < 1) throw std::invalid_argument("odd_over_spec: s must be >= 1");
    return EtaQuotientSpec{{2, 3 * s - 2}, {1, -2 * s}, {4, 1 - s}};
}

TruncatedSeries gf_overcolored(const ColorParams& p, std::size_t order,
                               const CoefficientRing& ring) {
    return eta_quotient(overcolored_spec(p), order, ring);
}

TruncatedSeries gf_colored(const ColorParams& p, std::size_t order,
                           const CoefficientRing& ring) {
    return eta_quotient(colored_spec(p), order, ring);
}

TruncatedSeries gf_even_over(long long r, std::size_t order,
                             const CoefficientRing& ring) {
    return eta_quotient(even_over_spec(r), order, ring);
}

TruncatedSeries gf_odd_over(long long s, std::size_t order,
                            const CoefficientRing& ring) {
    return eta_quotient(odd_over_spec(s), order, ring);
}

TruncatedSeries phi_power_product(const ColorParams& p, std::size_t order,
                                  const CoefficientRing& ring) {
    // phi(q)^s * P^(r+s) with P = prod_i phi(q^(2^i))^(2^(i-1)); the dyadic
    // exponents come out of squaring chains rather than generic pow calls.
    TruncatedSeries result = pow(phi(1, order, ring), p.s);
    TruncatedSeries dyadic = TruncatedSeries::one(ring, order);
    for (long long i = 1;
         order > 0 && static_cast<unsigned long long>(1ULL << i) < order; ++i) {
        TruncatedSeries factor = phi(1LL << i, order, ring);
        for (long long sq = 0; sq < i - 1; ++sq) factor = mul(factor, factor);
        dyadic = mul(dyadic, factor);
    }
    return mul(result, pow(dyadic, p.r + p.s));
}

VerificationReport verify_hirschhorn_dissection(std::size_t order) {
    const auto t0 = Clock::now();
    const CoefficientRing Z = CoefficientRing::exact();
    TruncatedSeries lhs = eta_quotient(EtaQuotientSpec{{1, -2}}, order, Z);
    TruncatedSeries even_part =
        eta_quotient(EtaQuotientSpec{{8, 5}, {2, -5}, {16, -2}}, order, Z);
    TruncatedSeries odd_part = eta_quotient(
        EtaQuotientSpec{{4, 2}, {16, 2}, {2, -5}, {8, -1}}, order, Z);
    TruncatedSeries rhs = add(even_part, shift_up(scalar_mul(odd_part, 2), 1));

    VerificationReport report;
    report.label = "L2.1";
    report.description = "two-term dissection of 1/f1^2";
    const SeriesComparison cmp = compare(lhs, rhs);
    report.n_checked = static_cast<long long>(cmp.order_compared);
    append_mismatches(report, cmp);
    report.wall_ms = ms_since(t0);
    return report;
}

VerificationReport verify_phi_dual(long long t, std::size_t order) {
    const auto t0 = Clock::now();
    const CoefficientRing Z = CoefficientRing::exact();
    TruncatedSeries theta = phi(t, order, Z);
    TruncatedSeries eta = eta_quotient(
        EtaQuotientSpec{{2 * t, 5}, {t, -2}, {4 * t, -2}}, order, Z);
    VerificationReport report;
    report.label = "phi";
    report.description = "theta-sum vs eta build of phi(q^t)";
    report.params["t"] = t;
    const SeriesComparison cmp = compare(theta, eta);
    report.n_checked = static_cast<long long>(cmp.order_compared);
    append_mismatches(report, cmp);
    report.wall_ms = ms_since(t0);
    return report;
}

VerificationReport verify_phi_neg_dual(long long t, std::size_t order) {
    const auto t0 = Clock::now();
    const CoefficientRing Z = CoefficientRing::exact();
    TruncatedSeries theta = phi_neg(t, order, Z);
    TruncatedSeries eta =
        eta_quotient(EtaQuotientSpec{{t, 2}, {2 * t, -1}}, order, Z);
    VerificationReport report;
    report.label = "phim";
    report.description = "theta-sum vs eta build of phi(-q^t)";
    report.params["t"] = t;
    const SeriesComparison cmp = compare(theta, eta);
    report.n_checked = static_cast<long long>(cmp.order_compared);
    append_mismatches(report, cmp);
    report.wall_ms = ms_since(t0);
    return report;
}

VerificationReport verify_phi_product_identity(const ColorParams& p,
                                               std::size_t order) {
    const auto t0 = Clock::now();
    const CoefficientRing Z = CoefficientRing::exact();
    TruncatedSeries product = phi_power_product(p, order, Z);
    TruncatedSeries quotient = gf_overcolored(p, order, Z);
    VerificationReport report;
    report.label = "L3.1";
    report.description = "theta power product vs eta quotient form";
    report.params["r"] = p.r;
    report.params["s"] = p.s;
    const SeriesComparison cmp = compare(product, quotient);
    report.n_checked = static_cast<long long>(cmp.order_compared);
    append_mismatches(report, cmp);
    report.wall_ms = ms_since(t0);
    return report;
}

VerificationReport verify_binomial_congruence(long long m, long long p,
                                              long long k, std::size_t order) {
    if (!is_prime_small(p))
        throw std::invalid_argument("verify_binomial_congruence: p must be prime");
    if (k < 1)
        throw std::invalid_argument("verify_binomial_congruence: k must be >= 1");
    const auto t0 = Clock::now();
    std::uint64_t pk = 1;
    for (long long i = 0; i < k; ++i) pk *= static_cast<std::uint64_t>(p);
    const CoefficientRing ring = CoefficientRing::residue(pk);
    TruncatedSeries lhs = pow(euler_f(m, order, ring), static_cast<long long>(pk));
    TruncatedSeries rhs =
        pow(euler_f(m * p, order, ring), static_cast<long long>(pk / p));

    VerificationReport report;
    report.label = "binom";
    report.description = "f_m^(p^k) vs f_(mp)^(p^(k-1)) in Z/p^k";
    report.params["m"] = m;
    report.params["p"] = p;
    report.params["k"] = k;
    report.modulus = pk;
    const SeriesComparison cmp = compare(lhs, rhs);
    report.n_checked = static_cast<long long>(cmp.order_compared);
    append_mismatches(report, cmp);
    report.wall_ms = ms_since(t0);
    return report;
}

VerificationReport verify_parity_split(const ColorParams& p, std::size_t order) {
    const auto t0 = Clock::now();
    const CoefficientRing Z = CoefficientRing::exact();
    const long long r = p.r, s = p.s;

    TruncatedSeries whole = gf_overcolored(p, order, Z);

    // One application of the 1/f1^2 dissection to the full series.
    TruncatedSeries full_prefactor = eta_quotient(
        EtaQuotientSpec{
            {8, 5 * s}, {2, -2 * (s + r)}, {4, r - s}, {16, -2 * s}},
        order, Z);
    TruncatedSeries tq =
        eta_quotient(EtaQuotientSpec{{4, 2}, {16, 4}, {8, -6}}, order, Z);
    TruncatedSeries full_sum = weighted_power_sum(
        order, Z, tq, s, [&](long long m) -> Integer {
            return binomial(static_cast<unsigned long>(s),
                            static_cast<unsigned long>(m)) *
                   pow2_integer(static_cast<unsigned long>(m));
        });
    const SeriesComparison cmp_full = compare(whole, mul(full_prefactor, full_sum));

    // Even- and odd-indexed extractions against their double-sum expansions.
    TruncatedSeries even_lhs = extract_ap(whole, 0, 2);
    TruncatedSeries odd_lhs = extract_ap(whole, 1, 2);
    const std::size_t even_order = even_lhs.order();
    const std::size_t odd_order = odd_lhs.order();

    TruncatedSeries xq = eta_quotient(
        EtaQuotientSpec{{2, 4}, {8, 8}, {4, -12}}, std::max(even_order, odd_order), Z);
    TruncatedSeries yq = eta_quotient(
        EtaQuotientSpec{{4, 2}, {16, 4}, {8, -6}}, std::max(even_order, odd_order), Z);
    TruncatedSeries lsum = weighted_power_sum(
        std::max(even_order, odd_order), Z, yq, s + r, [&](long long l) -> Integer {
            return binomial(static_cast<unsigned long>(s + r),
                            static_cast<unsigned long>(l)) *
                   pow2_integer(static_cast<unsigned long>(l));
        });

    TruncatedSeries even_prefactor = eta_quotient(
        EtaQuotientSpec{{4, 5 * s},
                        {8, 3 * s + 5 * r},
                        {2, -2 * (3 * s + 2 * r)},
                        {16, -2 * (s + r)}},
        even_order, Z);
    TruncatedSeries even_msum = weighted_power_sum(
        even_order, Z, xq, s / 2, [&](long long m) -> Integer {
            return binomial(static_cast<unsigned long>(s),
                            static_cast<unsigned long>(2 * m)) *
                   pow2_integer(static_cast<unsigned long>(2 * m));
        });
    TruncatedSeries even_rhs = mul(mul(even_prefactor, even_msum), lsum);
    const SeriesComparison cmp_even = compare(even_lhs, even_rhs);

    TruncatedSeries odd_prefactor = eta_quotient(
        EtaQuotientSpec{{4, 5 * s - 6},
                        {8, 3 * s + 5 * r - 4},
                        {2, -2 * (3 * s + 2 * r - 1)},
                        {16, -2 * (s + r)}},
        odd_order, Z);
    TruncatedSeries odd_msum = weighted_power_sum(
        odd_order, Z, xq, (s - 1) / 2, [&](long long m) -> Integer {
            return binomial(static_cast<unsigned long>(s),
                            static_cast<unsigned long>(2 * m + 1)) *
                   pow2_integer(static_cast<unsigned long>(2 * m));
        });
    TruncatedSeries odd_rhs =
        scalar_mul(mul(mul(odd_prefactor, odd_msum), lsum), 2);
    const SeriesComparison cmp_odd = compare(odd_lhs, odd_rhs);

    VerificationReport report;
    report.label = "en-split";
    report.description =
        "binomial-sum expansion and even/odd extractions of the overcolored series";
    report.params["r"] = r;
    report.params["s"] = s;
    report.n_checked = static_cast<long long>(cmp_full.order_compared +
                                              cmp_even.order_compared +
                                              cmp_odd.order_compared);
    append_mismatches(report, cmp_full);
    append_mismatches(report, cmp_even, 2, 0);
    append_mismatches(report, cmp_odd, 2, 1);
    report.wall_ms = ms_since(t0);
    return report;
}

}  // namespace overq
