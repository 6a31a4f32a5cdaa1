#pragma once

#include "overq/ntheory.hpp"
#include "overq/qseries.hpp"
#include "overq/report.hpp"

#include <vector>

namespace overq {

/// Whether claim evaluation builds the series in the residue ring directly
/// or over the exact integers followed by reduction. Results must agree;
/// the exact route exists to test exactly that.
enum class BuildRoute { Modular, ExactThenReduce };

/// Checks the claim's coefficients at step*n + residue for
/// n_start <= n <= n_max (skipping index 0) and collects every violation.
VerificationReport verify_claim(const CongruenceClaim& claim, long long n_max,
                                BuildRoute route = BuildRoute::Modular);

/// Batch evaluation. Claims sharing a color pair share one series build;
/// builds fan out over `jobs` threads. Reports come back sorted.
std::vector<VerificationReport> verify_claims(
    const std::vector<CongruenceClaim>& claims, long long n_max, int jobs = 1,
    BuildRoute route = BuildRoute::Modular);

/// Mod-4 shape of the overcolored series: 1 + 2s*sum q^(k^2)
/// + 2(r+s)*sum q^(2k^2), checked coefficient-wise for n <= n_limit, plus the
/// three-case table on every n >= 1 (the cases are disjoint mod 4).
VerificationReport mod4_profile(const ColorParams& p, long long n_limit);

/// Mod-8 shape with the five quadratic classes and the representation-count
/// weighted k^2 + 2l^2 term. The six-case table is checked only on n where
/// exactly one case applies; overlaps are covered by the additive series.
VerificationReport mod8_profile(const ColorParams& p, long long n_limit);

// Claim families, resolved onto concrete (r, s) grids.
std::vector<CongruenceClaim> thm5_claims(long long r_max, long long s_max,
                                         long long i_max, long long j_max,
                                         bool negative_controls);
std::vector<CongruenceClaim> thm6_claims(long long k_max, long long i_max,
                                         long long j_max, long long r_max);
std::vector<CongruenceClaim> thm7_claims(long long k_max);
std::vector<CongruenceClaim> thm8_claims(const std::vector<long long>& primes,
                                         long long k_max,
                                         bool include_informational);
std::vector<CongruenceClaim> conjecture_claims(long long k_max, long long i_max,
                                               long long j_max);

// Suites. Each returns sorted reports over its stated grid.
std::vector<VerificationReport> suite_thm3(long long r_max, long long s_max,
                                           long long n_limit, int jobs);
std::vector<VerificationReport> suite_thm4(long long r_max, long long s_max,
                                           long long n_limit, int jobs);
std::vector<VerificationReport> suite_thm5(long long r_max, long long s_max,
                                           long long i_max, long long j_max,
                                           long long n_max, int jobs,
                                           bool negative_controls);
std::vector<VerificationReport> suite_thm6(long long k_max, long long i_max,
                                           long long j_max, long long r_max,
                                           long long n_max, int jobs);
std::vector<VerificationReport> suite_thm7(long long k_max, long long n_max,
                                           int jobs);
std::vector<VerificationReport> suite_thm8(const std::vector<long long>& primes,
                                           long long k_max, long long n_max,
                                           int jobs);

/// Specialized tables for s = 1 plus the identification of the overcolored
/// series' s = 1 / r = 1 slices with their single-parity counterparts.
std::vector<VerificationReport> suite_das(long long r_max, long long n_max,
                                          std::size_t spec_order, int jobs);

/// Exponent-transfer principle: perturb the base quotient's exponents by
/// multiples of p^lambda (positive entries on the numerator side, negative on
/// the denominator side) and confirm vanishing mod p on the progression
/// p^lambda * n + C carries over. Requires 1 <= C <= p^lambda - 1.
VerificationReport verify_transfer_principle(
    const EtaQuotientSpec& base,
    const std::vector<std::pair<long long, long long>>& perturbation,
    long long p, long long lambda, long long C, long long n_max);

/// Ten transfer instances rooted at the prime-modulus congruence families,
/// perturbations drawn from the seeded generator.
std::vector<VerificationReport> suite_lemma22(long long n_max, unsigned seed);

/// Scans the three conjectured congruence families over the index grid.
/// Counterexamples are reported, never asserted impossible.
std::vector<VerificationReport> conjecture_scan(long long k_max, long long i_max,
                                                long long j_max, long long n_max,
                                                int jobs);

/// Series identity battery: the 1/f1^2 dissection, both theta dual builds,
/// the parity-split expansions, the binomial congruence grid, and the theta
/// power product identity.
std::vector<VerificationReport> suite_identities(std::size_t order, int jobs);

/// Largest truncation order a claim set needs for a given n_max.
std::size_t required_order(const std::vector<CongruenceClaim>& claims,
                           long long n_max);

}  // namespace overq
