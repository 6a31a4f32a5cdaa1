#pragma once

#include "overq/eta.hpp"
#include "overq/report.hpp"
#include "overq/series.hpp"

namespace overq {

/// Color scheme: even parts choose among r colors, odd parts among s colors.
struct ColorParams {
    long long r;
    long long s;
    ColorParams(long long r_, long long s_) : r(r_), s(s_) {
        if (r < 1 || s < 1)
            throw std::invalid_argument("ColorParams: need r >= 1 and s >= 1");
    }
};

/// Theta series with coefficient 2 at t*n^2 for n >= 1 and constant term 1.
TruncatedSeries phi(long long t, std::size_t order,
                    const CoefficientRing& ring = CoefficientRing::exact());

/// Alternating variant: coefficient 2*(-1)^n at t*n^2.
TruncatedSeries phi_neg(long long t, std::size_t order,
                        const CoefficientRing& ring = CoefficientRing::exact());

// Eta-quotient shapes of the four counting functions.
EtaQuotientSpec overcolored_spec(const ColorParams& p);  // f2^(3s-2r) / (f1^2s f4^(s-r))
EtaQuotientSpec colored_spec(const ColorParams& p);      // f2^(s-r) / f1^s
EtaQuotientSpec even_over_spec(long long r);             // f4^(r-1) / (f1^2 f2^(2r-3))
EtaQuotientSpec odd_over_spec(long long s);              // f2^(3s-2) / (f1^2s f4^(s-1))

/// Coefficient n counts overlined colored partitions of n.
TruncatedSeries gf_overcolored(const ColorParams& p, std::size_t order,
                               const CoefficientRing& ring);
/// Same color scheme without overlining.
TruncatedSeries gf_colored(const ColorParams& p, std::size_t order,
                           const CoefficientRing& ring);
/// Even parts in r colors, odd parts plain; overlining allowed.
TruncatedSeries gf_even_over(long long r, std::size_t order,
                             const CoefficientRing& ring);
/// Odd parts in s colors, even parts plain; overlining allowed.
TruncatedSeries gf_odd_over(long long s, std::size_t order,
                            const CoefficientRing& ring);

/// phi(q)^s * prod_{i>=1} phi(q^(2^i))^((r+s)*2^(i-1)), truncated exactly:
/// factors with 2^i >= order are identically 1 below the order and dropped.
TruncatedSeries phi_power_product(const ColorParams& p, std::size_t order,
                                  const CoefficientRing& ring);

// Identity checks. Each builds both sides independently over the exact ring
// (or the stated residue ring, when the identity itself is a congruence) and
// reports coefficient-wise agreement.

/// 1/f1^2 = f8^5/(f2^5 f16^2) + 2q f4^2 f16^2/(f2^5 f8).
VerificationReport verify_hirschhorn_dissection(std::size_t order);

/// Theta-sum build of phi(q^t) against the eta build f_{2t}^5/(f_t^2 f_{4t}^2).
VerificationReport verify_phi_dual(long long t, std::size_t order);

/// Theta-sum build of phi(-q^t) against f_t^2 / f_{2t}.
VerificationReport verify_phi_neg_dual(long long t, std::size_t order);

/// phi_power_product against gf_overcolored.
VerificationReport verify_phi_product_identity(const ColorParams& p,
                                               std::size_t order);

/// f_m^(p^k) == f_(mp)^(p^(k-1)) over Z/p^k.
VerificationReport verify_binomial_congruence(long long m, long long p,
                                              long long k, std::size_t order);

/// Three checks against the one-step dissection of the overcolored series:
/// the full binomial-sum expansion, and the even/odd coefficient extractions
/// against their double-sum expansions. Binomials past the top index vanish.
VerificationReport verify_parity_split(const ColorParams& p, std::size_t order);

}  // namespace overq
