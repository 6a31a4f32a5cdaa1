#include "overq/eta.hpp"

#include <sstream>
#include <stdexcept>

namespace overq {

EtaQuotientSpec::EtaQuotientSpec(
    std::initializer_list<std::pair<long long, long long>> factors) {
    for (const auto& [m, e] : factors) push(m, e);
}

EtaQuotientSpec& EtaQuotientSpec::push(long long scale, long long exponent) {
    if (scale < 1)
        throw std::invalid_argument("EtaQuotientSpec: scale must be positive");
    exps_[scale] += exponent;
    if (exps_[scale] == 0) exps_.erase(scale);
    return *this;
}

std::vector<std::pair<long long, long long>> EtaQuotientSpec::factors() const {
    return {exps_.begin(), exps_.end()};
}

long long EtaQuotientSpec::exponent_of(long long scale) const {
    auto it = exps_.find(scale);
    return it == exps_.end() ? 0 : it->second;
}

bool EtaQuotientSpec::trivial() const { return exps_.empty(); }

std::string EtaQuotientSpec::describe() const {
    if (trivial()) return "1";
    std::ostringstream num, den;
    for (const auto& [m, e] : exps_) {
        std::ostringstream& side = (e > 0) ? num : den;
        if (side.tellp() > 0) side << " ";
        side << "f" << m;
        long long a = e > 0 ? e : -e;
        if (a != 1) side << "^" << a;
    }
    std::string n = num.str(), d = den.str();
    if (n.empty()) n = "1";
    if (d.empty()) return n;
    return n + " / (" + d + ")";
}

TruncatedSeries euler_f(long long m, std::size_t order,
                        const CoefficientRing& ring) {
    if (m < 1) throw std::invalid_argument("euler_f: m must be >= 1");
    TruncatedSeries s = TruncatedSeries::one(ring, order);
    std::vector<Integer> coeffs;
    std::vector<std::uint64_t> words;
    const bool exact = ring.is_exact();
    if (exact)
        coeffs.assign(order, Integer(0));
    else
        words.assign(order, 0);
    auto put = [&](unsigned long long e, bool plus) {
        if (e >= order) return;
        if (exact)
            coeffs[e] = plus ? 1 : -1;
        else
            words[e] = plus ? 1 : ring.modulus() - 1;
    };
    if (order > 0) put(0, true);
    for (unsigned long long k = 1;; ++k) {
        const unsigned long long g1 = k * (3 * k - 1) / 2;
        const unsigned long long e1 = static_cast<unsigned long long>(m) * g1;
        if (e1 >= order) break;
        const bool plus = (k % 2 == 0);
        put(e1, plus);
        const unsigned long long g2 = k * (3 * k + 1) / 2;
        put(static_cast<unsigned long long>(m) * g2, plus);
    }
    if (exact) return TruncatedSeries(ring, std::move(coeffs));
    return TruncatedSeries::from_words(ring, std::move(words));
}

TruncatedSeries eta_quotient(const EtaQuotientSpec& spec, std::size_t order,
                             const CoefficientRing& ring) {
    TruncatedSeries numerator = TruncatedSeries::one(ring, order);
    TruncatedSeries denominator = TruncatedSeries::one(ring, order);
    bool have_den = false;
    for (const auto& [m, e] : spec.factors()) {
        if (static_cast<unsigned long long>(m) >= order && order > 0)
            continue;  // f_m = 1 + O(q^m) contributes nothing below the order
        TruncatedSeries fm = euler_f(m, order, ring);
        if (e > 0) {
            numerator = mul(numerator, pow(fm, e));
        } else {
            denominator = mul(denominator, pow(fm, -e));
            have_den = true;
        }
    }
    if (!have_den) return numerator;
    return mul(numerator, invert(denominator));
}

}  // namespace overq
