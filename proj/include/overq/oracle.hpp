#pragma once

#include "overq/integer.hpp"
#include "overq/qseries.hpp"

#include <compare>
#include <string>
#include <vector>

namespace overq {

// Combinatorial counts by dynamic programming over part sizes. Everything in
// here runs on exact integers and plain loops only, independent of the series
// engine, so agreement between the two routes means something.

/// Counts of overlined colored partitions for n = 0 .. count-1. Even sizes
/// offer r colors, odd sizes s colors, and each (size, color) class may
/// overline its first occurrence.
std::vector<Integer> count_overcolored(const ColorParams& p, std::size_t count);

/// Same scheme without overlining.
std::vector<Integer> count_colored(const ColorParams& p, std::size_t count);

struct OvercoloredPart {
    long long size = 0;
    long long color = 1;
    bool overlined = false;
    auto operator<=>(const OvercoloredPart&) const = default;
};

/// Parts in canonical order: descending size, ascending color, overlined
/// part first within its (size, color) class.
struct OvercoloredPartition {
    std::vector<OvercoloredPart> parts;
    auto operator<=>(const OvercoloredPartition&) const = default;

    std::string render() const;  // e.g. "3_1~ + 1_2"
};

/// Every object counted by count_overcolored(p)[n], built explicitly.
/// Throws when n exceeds the cap; the cap guards runaway enumeration.
std::vector<OvercoloredPartition> enumerate_small(const ColorParams& p,
                                                  long long n,
                                                  long long cap = 12);

}  // namespace overq
