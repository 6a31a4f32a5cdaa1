#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace overq {

enum class RingKind { ExactInteger, ResidueMod };

/// Coefficient domain for series arithmetic: exact unbounded integers, or
/// residues modulo a fixed m >= 2. m may be composite; unit checks are done
/// per element where inversion is required.
class CoefficientRing {
public:
    static CoefficientRing exact() noexcept {
        return CoefficientRing(RingKind::ExactInteger, 0);
    }

    static CoefficientRing residue(std::uint64_t modulus) {
        if (modulus < 2)
            throw std::invalid_argument("CoefficientRing: modulus must be >= 2");
        return CoefficientRing(RingKind::ResidueMod, modulus);
    }

    RingKind kind() const noexcept { return kind_; }
    bool is_exact() const noexcept { return kind_ == RingKind::ExactInteger; }

    std::uint64_t modulus() const {
        if (is_exact())
            throw std::logic_error("CoefficientRing: exact ring has no modulus");
        return modulus_;
    }

    bool operator==(const CoefficientRing&) const noexcept = default;

    std::string describe() const {
        return is_exact() ? "Z" : "Z/" + std::to_string(modulus_) + "Z";
    }

private:
    CoefficientRing(RingKind k, std::uint64_t m) : kind_(k), modulus_(m) {}

    RingKind kind_;
    std::uint64_t modulus_;
};

}  // namespace overq
