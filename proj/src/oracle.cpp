#include "overq/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace overq {

namespace {

/* One color class of size d multiplies the count series by
 * 1 + 2q^d + 2q^(2d) + ...: multiplicity zero is one way, any positive
 * multiplicity is two ways (overlined first occurrence present or absent).
 * With s[x] = a[x] + s[x-d] the running d-step prefix sum, the new value is
 * b[x] = a[x] + 2*s[x-d]. */
void apply_overcolored_class(std::vector<Integer>& a, std::size_t d) {
    const std::size_t n = a.size();
    std::vector<Integer> prefix(a);
    for (std::size_t x = d; x < n; ++x) prefix[x] += prefix[x - d];
    for (std::size_t x = d; x < n; ++x) a[x] += 2 * prefix[x - d];
}

/* Plain class factor 1/(1 - q^d), the classical in-place partition DP. */
void apply_colored_class(std::vector<Integer>& a, std::size_t d) {
    for (std::size_t x = d; x < a.size(); ++x) a[x] += a[x - d];
}

long long colors_for_size(const ColorParams& p, long long size) {
    return (size % 2 == 0) ? p.r : p.s;
}

}  // namespace

std::vector<Integer> count_overcolored(const ColorParams& p, std::size_t count) {
    std::vector<Integer> a(count, Integer(0));
    if (count > 0) a[0] = 1;
    for (std::size_t d = 1; d < count; ++d)
        for (long long c = 0; c < colors_for_size(p, static_cast<long long>(d)); ++c)
            apply_overcolored_class(a, d);
    return a;
}

std::vector<Integer> count_colored(const ColorParams& p, std::size_t count) {
    std::vector<Integer> a(count, Integer(0));
    if (count > 0) a[0] = 1;
    for (std::size_t d = 1; d < count; ++d)
        for (long long c = 0; c < colors_for_size(p, static_cast<long long>(d)); ++c)
            apply_colored_class(a, d);
    return a;
}

std::string OvercoloredPartition::render() const {
    if (parts.empty()) return "(empty)";
    std::ostringstream os;
    bool first = true;
    for (const auto& part : parts) {
        if (!first) os << " + ";
        os << part.size << "_" << part.color;
        if (part.overlined) os << "~";
        first = false;
    }
    return os.str();
}

namespace {

struct ClassId {
    long long size;
    long long color;
};

void enumerate_rec(const std::vector<ClassId>& classes, std::size_t idx,
                   long long remaining, std::vector<OvercoloredPart>& acc,
                   std::vector<OvercoloredPartition>& out) {
    if (remaining == 0) {
        out.push_back(OvercoloredPartition{acc});
        return;
    }
    if (idx == classes.size()) return;
    const ClassId& cls = classes[idx];
    // multiplicity 0
    enumerate_rec(classes, idx + 1, remaining, acc, out);
    for (long long mult = 1; mult * cls.size <= remaining; ++mult) {
        for (int overlined = 1; overlined >= 0; --overlined) {
            const std::size_t base = acc.size();
            for (long long i = 0; i < mult; ++i)
                acc.push_back({cls.size, cls.color, overlined == 1 && i == 0});
            enumerate_rec(classes, idx + 1, remaining - mult * cls.size, acc, out);
            acc.resize(base);
        }
    }
}

}  // namespace

std::vector<OvercoloredPartition> enumerate_small(const ColorParams& p,
                                                  long long n, long long cap) {
    if (n < 0) throw std::invalid_argument("enumerate_small: n must be >= 0");
    if (n > cap)
        throw std::invalid_argument("enumerate_small: n exceeds the enumeration cap");
    std::vector<ClassId> classes;
    for (long long size = n; size >= 1; --size)
        for (long long color = 1; color <= colors_for_size(p, size); ++color)
            classes.push_back({size, color});
    std::vector<OvercoloredPartition> out;
    std::vector<OvercoloredPart> acc;
    enumerate_rec(classes, 0, n, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace overq
