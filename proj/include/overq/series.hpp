#pragma once

#include "overq/integer.hpp"
#include "overq/ring.hpp"

#include <cstdint>
#include <cstddef>
#include <vector>

namespace overq {

enum class ConvolutionMode {
    Auto,        ///< Kronecker substitution above a size threshold, schoolbook below
    Schoolbook,  ///< O(N^2) reference convolution
    Kronecker,   ///< pack-coefficients-into-one-big-integer multiply (exact ring)
};

/// Process-wide selector for the exact-ring multiplication kernel. Schoolbook
/// is the correctness reference; Kronecker must agree with it bit for bit.
void set_convolution_mode(ConvolutionMode mode) noexcept;
ConvolutionMode convolution_mode() noexcept;

struct ConvolutionModeGuard {
    explicit ConvolutionModeGuard(ConvolutionMode m)
        : saved_(convolution_mode()) {
        set_convolution_mode(m);
    }
    ~ConvolutionModeGuard() { set_convolution_mode(saved_); }
    ConvolutionModeGuard(const ConvolutionModeGuard&) = delete;
    ConvolutionModeGuard& operator=(const ConvolutionModeGuard&) = delete;

private:
    ConvolutionMode saved_;
};

/// Formal power series truncated to a fixed number of retained coefficients:
/// c_0 ... c_{order-1}, coefficient of q^k at index k. Values are immutable
/// after construction. Modular coefficients are kept canonical in [0, m).
///
/// Operations on two series require identical rings and truncate to the
/// smaller order; nothing ever extrapolates past the information it has.
class TruncatedSeries {
public:
    TruncatedSeries(const CoefficientRing& ring, std::vector<Integer> coeffs);

    static TruncatedSeries zero(const CoefficientRing& ring, std::size_t order);
    static TruncatedSeries one(const CoefficientRing& ring, std::size_t order);
    static TruncatedSeries monomial(const CoefficientRing& ring, std::size_t order,
                                    std::size_t degree, const Integer& coefficient = 1);

    /// Modular fast path; words must already be canonical residues.
    static TruncatedSeries from_words(const CoefficientRing& ring,
                                      std::vector<std::uint64_t> words);

    const CoefficientRing& ring() const noexcept { return ring_; }
    std::size_t order() const noexcept;

    /// Coefficient of q^k as an integer (canonical residue when modular).
    Integer coeff(std::size_t k) const;
    std::uint64_t coeff_word(std::size_t k) const;  // modular rings only

    const std::vector<Integer>& exact_coeffs() const;
    const std::vector<std::uint64_t>& words() const;

    bool is_zero() const;

private:
    TruncatedSeries(const CoefficientRing& ring) : ring_(ring) {}

    CoefficientRing ring_;
    std::vector<Integer> exact_;       // populated iff ring is exact
    std::vector<std::uint64_t> mod_;   // populated iff ring is modular
};

// Arithmetic. Binary operations throw std::invalid_argument on ring mismatch
// and return a series of the operands' minimum order.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries negate(const TruncatedSeries& a);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse to the operand's order. Requires a unit constant
/// term: +-1 over the exact ring, gcd(c0, m) = 1 over Z/m.
TruncatedSeries invert(const TruncatedSeries& a);

/// Repeated-squaring power; pow(a, 0) = 1, pow(a, -e) = invert(pow(a, e)).
TruncatedSeries pow(const TruncatedSeries& a, long long exponent);

/// Substitute q -> q^t; order is preserved, entries off the lattice are zero.
TruncatedSeries scale_variable(const TruncatedSeries& a, std::uint64_t t);

/// b_n = a_{step*n + residue}; order = ceil((order - residue)/step), possibly 0.
TruncatedSeries extract_ap(const TruncatedSeries& a, std::uint64_t residue,
                           std::uint64_t step);

/// Exact-ring series mapped into Z/m with canonical coefficients.
TruncatedSeries reduce_mod(const TruncatedSeries& a, std::uint64_t m);

/// Multiply by q^k within the same order (top k coefficients fall off).
TruncatedSeries shift_up(const TruncatedSeries& a, std::size_t k);

TruncatedSeries scalar_mul(const TruncatedSeries& a, const Integer& c);

struct CoefficientMismatch {
    std::size_t index;
    Integer lhs;
    Integer rhs;
};

/// Equality up to the common order. `mismatches` is capped; `equal` refers
/// to every coefficient in [0, order_compared) regardless of the cap.
struct SeriesComparison {
    std::size_t order_compared = 0;
    bool equal = true;
    std::vector<CoefficientMismatch> mismatches;
};

SeriesComparison compare(const TruncatedSeries& a, const TruncatedSeries& b,
                         std::size_t max_mismatches = 32);

}  // namespace overq
