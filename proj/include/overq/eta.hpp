#pragma once

#include "overq/series.hpp"

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace overq {

/// Finite product of Euler factors, prod_m f_m^{e_m} with f_m = (q^m; q^m)_oo.
/// Scales must be positive; repeated scales merge additively and zero
/// exponents drop out, so the empty spec is the constant series 1.
class EtaQuotientSpec {
public:
    EtaQuotientSpec() = default;
    EtaQuotientSpec(std::initializer_list<std::pair<long long, long long>> factors);

    EtaQuotientSpec& push(long long scale, long long exponent);

    /// Normalized view: ascending scales, no zero exponents.
    std::vector<std::pair<long long, long long>> factors() const;

    long long exponent_of(long long scale) const;
    bool trivial() const;  // denotes the constant series 1

    std::string describe() const;  // e.g. "f2^3 / (f1^2 f4)"

private:
    std::map<long long, long long> exps_;
};

/// Euler product f_m expanded by the pentagonal number theorem: the exponent
/// lattice m*k(3k+-1)/2 with sign (-1)^k. Coefficients lie in {-1, 0, +1}.
TruncatedSeries euler_f(long long m, std::size_t order,
                        const CoefficientRing& ring = CoefficientRing::exact());

/// prod f_m^e to the requested order, computed entirely inside `ring`.
/// Negative exponents are always legal: every f_m has constant term 1.
TruncatedSeries eta_quotient(const EtaQuotientSpec& spec, std::size_t order,
                             const CoefficientRing& ring);

}  // namespace overq
