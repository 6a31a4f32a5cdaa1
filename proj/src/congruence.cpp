#include "overq/congruence.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>
#include <tuple>

namespace overq {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
        .count();
}

void parallel_each(std::size_t count, int jobs,
                   const std::function<void(std::size_t)>& fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const int workers = std::min<std::size_t>(jobs, count);
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

long long pow_ll(long long base, long long exp) {
    long long r = 1;
    for (long long i = 0; i < exp; ++i) r *= base;
    return r;
}

// ---------------------------------------------------------------------------
// Shared series builds for claim batches.
// ---------------------------------------------------------------------------

using GroupKey = std::tuple<long long, long long, int>;  // r, s, GfKind

struct GroupPlan {
    std::uint64_t modulus = 1;
    std::size_t order = 0;
};

struct BuiltSeries {
    std::uint64_t modulus = 0;
    std::vector<std::uint64_t> coeffs;
};

std::size_t claim_order(const CongruenceClaim& c, long long n_max) {
    return static_cast<std::size_t>(c.step * n_max + c.residue + 1);
}

std::map<GroupKey, BuiltSeries> build_claim_series(
    const std::vector<CongruenceClaim>& claims, long long n_max, int jobs,
    BuildRoute route) {
    std::map<GroupKey, GroupPlan> plans;
    for (const auto& c : claims) {
        GroupPlan& plan = plans[{c.family.r, c.family.s, static_cast<int>(c.series)}];
        plan.modulus = std::lcm(plan.modulus, c.modulus);
        plan.order = std::max(plan.order, claim_order(c, n_max));
    }
    std::vector<std::pair<GroupKey, GroupPlan>> order(plans.begin(), plans.end());
    std::map<GroupKey, BuiltSeries> built;
    for (const auto& [key, plan] : order) built[key] = BuiltSeries{};
    parallel_each(order.size(), jobs, [&](std::size_t idx) {
        const auto& [key, plan] = order[idx];
        const auto& [r, s, kind] = key;
        const ColorParams params(r, s);
        BuiltSeries out;
        out.modulus = plan.modulus;
        if (route == BuildRoute::Modular) {
            const CoefficientRing ring = CoefficientRing::residue(plan.modulus);
            TruncatedSeries series =
                (kind == static_cast<int>(GfKind::Overcolored))
                    ? gf_overcolored(params, plan.order, ring)
                    : gf_colored(params, plan.order, ring);
            out.coeffs = series.words();
        } else {
            const CoefficientRing Z = CoefficientRing::exact();
            TruncatedSeries series =
                (kind == static_cast<int>(GfKind::Overcolored))
                    ? gf_overcolored(params, plan.order, Z)
                    : gf_colored(params, plan.order, Z);
            out.coeffs = reduce_mod(series, plan.modulus).words();
        }
        built[key] = std::move(out);
    });
    return built;
}

VerificationReport evaluate_claim(const CongruenceClaim& c, long long n_max,
                                  const BuiltSeries& built) {
    const auto t0 = Clock::now();
    VerificationReport report;
    report.label = c.label;
    report.description = c.describe();
    report.params = c.family.indices;
    report.params["r"] = c.family.r;
    report.params["s"] = c.family.s;
    if (c.step > 1) report.params["residue"] = c.residue;
    report.step = c.step;
    report.residue = c.residue;
    report.modulus = c.modulus;
    report.informational = c.informational;
    report.expect_violation = c.expect_violation;
    long long checked = 0;
    for (long long n = c.n_start; n <= n_max; ++n) {
        const long long idx = c.step * n + c.residue;
        if (idx < 1) continue;
        const std::uint64_t v =
            built.coeffs[static_cast<std::size_t>(idx)] % c.modulus;
        ++checked;
        if (v != 0) report.counterexamples.push_back({idx, std::to_string(v)});
    }
    report.n_checked = checked;
    report.wall_ms = ms_since(t0);
    return report;
}

// ---------------------------------------------------------------------------
// Quadratic-class sieves for the profile checks.
// ---------------------------------------------------------------------------

struct QuadClasses {
    std::vector<std::uint8_t> sq, twice_even, twice_odd, four_sq;
    std::vector<std::uint32_t> rep;
};

QuadClasses build_quad_classes(std::size_t size) {
    QuadClasses q;
    q.sq.assign(size, 0);
    q.twice_even.assign(size, 0);
    q.twice_odd.assign(size, 0);
    q.four_sq.assign(size, 0);
    q.rep.assign(size, 0);
    for (unsigned long long k = 1; k * k < size; ++k) q.sq[k * k] = 1;
    for (unsigned long long k = 1; 2 * k * k < size; ++k) {
        if (k % 2 == 0)
            q.twice_even[2 * k * k] = 1;
        else
            q.twice_odd[2 * k * k] = 1;
    }
    for (unsigned long long k = 1; 4 * k * k < size; ++k) q.four_sq[4 * k * k] = 1;
    for (unsigned long long k = 1; k * k + 2 < size; ++k)
        for (unsigned long long l = 1; k * k + 2 * l * l < size; ++l)
            ++q.rep[k * k + 2 * l * l];
    return q;
}

std::uint64_t umod(long long v, std::uint64_t m) {
    long long r = v % static_cast<long long>(m);
    if (r < 0) r += static_cast<long long>(m);
    return static_cast<std::uint64_t>(r);
}

/* Additive congruence shape shared by the mod-4, mod-8, and specialized
 * tables: constant 1 plus class-indicator sums, the last weighted by the
 * representation count. */
struct ProfileWeights {
    std::uint64_t modulus;
    std::uint64_t w_sq, w_twice_even, w_twice_odd, w_four, w_rep;
    bool two_case_table = false;  // square / twice-square / otherwise
};

VerificationReport run_profile(const std::string& label, const ColorParams& p,
                               long long n_limit, const ProfileWeights& w,
                               bool table_check) {
    const auto t0 = Clock::now();
    const std::size_t size = static_cast<std::size_t>(n_limit) + 1;
    const CoefficientRing ring = CoefficientRing::residue(w.modulus);
    const std::vector<std::uint64_t> actual =
        gf_overcolored(p, size, ring).words();
    const QuadClasses q = build_quad_classes(size);

    VerificationReport report;
    report.label = label;
    report.description = "additive quadratic-class series vs series build mod " +
                         std::to_string(w.modulus);
    report.params["r"] = p.r;
    report.params["s"] = p.s;
    report.modulus = w.modulus;

    auto note = [&](long long n, std::uint64_t got) {
        report.counterexamples.push_back({n, std::to_string(got)});
    };

    if (!actual.empty() && actual[0] != 1 % w.modulus) note(0, actual[0]);
    for (std::size_t n = 1; n < size; ++n) {
        const bool twice = q.twice_even[n] || q.twice_odd[n];
        const std::uint64_t predicted =
            (w.w_sq * q.sq[n] + w.w_twice_even * q.twice_even[n] +
             w.w_twice_odd * q.twice_odd[n] + w.w_four * q.four_sq[n] +
             w.w_rep * q.rep[n]) %
            w.modulus;
        if (actual[n] != predicted) {
            note(static_cast<long long>(n), actual[n]);
            continue;
        }
        if (!table_check) continue;
        if (w.two_case_table) {
            // Square and twice-square are disjoint for n >= 1, so this table
            // is unambiguous on every n.
            const std::uint64_t table =
                q.sq[n] ? w.w_sq % w.modulus
                        : (twice ? w.w_twice_even % w.modulus : 0);
            if (actual[n] != table) note(static_cast<long long>(n), actual[n]);
            continue;
        }
        // The five-class table is shorthand for the additive series; compare
        // it only where a single class applies, and where that class is the
        // k^2 + 2l^2 one, only with representation count 1.
        const int applies = q.sq[n] + q.twice_even[n] + q.twice_odd[n] +
                            q.four_sq[n] + (q.rep[n] > 0 ? 1 : 0);
        if (applies > 1 || q.rep[n] > 1) continue;
        std::uint64_t table = 0;
        if (q.sq[n])
            table = w.w_sq % w.modulus;
        else if (q.twice_even[n])
            table = w.w_twice_even % w.modulus;
        else if (q.twice_odd[n])
            table = w.w_twice_odd % w.modulus;
        else if (q.four_sq[n])
            table = w.w_four % w.modulus;
        else if (q.rep[n] == 1)
            table = w.w_rep % w.modulus;
        if (actual[n] != table) note(static_cast<long long>(n), actual[n]);
    }
    report.n_checked = n_limit;
    report.wall_ms = ms_since(t0);
    return report;
}

}  // namespace

std::size_t required_order(const std::vector<CongruenceClaim>& claims,
                           long long n_max) {
    std::size_t order = 0;
    for (const auto& c : claims) order = std::max(order, claim_order(c, n_max));
    return order;
}

VerificationReport verify_claim(const CongruenceClaim& claim, long long n_max,
                                BuildRoute route) {
    const auto t0 = Clock::now();
    auto built = build_claim_series({claim}, n_max, 1, route);
    VerificationReport report = evaluate_claim(
        claim, n_max,
        built.at({claim.family.r, claim.family.s, static_cast<int>(claim.series)}));
    report.wall_ms = ms_since(t0);
    return report;
}

std::vector<VerificationReport> verify_claims(
    const std::vector<CongruenceClaim>& claims, long long n_max, int jobs,
    BuildRoute route) {
    auto built = build_claim_series(claims, n_max, jobs, route);
    std::vector<VerificationReport> reports;
    reports.reserve(claims.size());
    for (const auto& c : claims)
        reports.push_back(evaluate_claim(
            c, n_max,
            built.at({c.family.r, c.family.s, static_cast<int>(c.series)})));
    sort_reports(reports);
    return reports;
}

VerificationReport mod4_profile(const ColorParams& p, long long n_limit) {
    ProfileWeights w;
    w.modulus = 4;
    w.w_sq = umod(2 * p.s, 4);
    w.w_twice_even = umod(2 * (p.r + p.s), 4);  // both twice-square classes
    w.w_twice_odd = w.w_twice_even;
    w.w_four = 0;
    w.w_rep = 0;
    w.two_case_table = true;
    return run_profile("1.3", p, n_limit, w, true);
}

VerificationReport mod8_profile(const ColorParams& p, long long n_limit) {
    const long long r = p.r % 8, s = p.s % 8;
    ProfileWeights w;
    w.modulus = 8;
    w.w_sq = umod(2 * s, 8);
    w.w_twice_even = umod(2 * (3 * r + 2 * s + s * s), 8);
    w.w_twice_odd = umod(2 * (r + s * s), 8);
    w.w_four = umod(2 * (r + s) * (r + s + 1), 8);
    w.w_rep = umod(4 * s * (r + s), 8);
    return run_profile("1.4", p, n_limit, w, true);
}

// ---------------------------------------------------------------------------
// Claim families.
// ---------------------------------------------------------------------------

std::vector<CongruenceClaim> thm5_claims(long long r_max, long long s_max,
                                         long long i_max, long long j_max,
                                         bool negative_controls) {
    std::vector<CongruenceClaim> out;
    auto push = [&](std::string label, FamilyParams fam, long long step,
                    long long res, std::uint64_t mod, long long start = 0) {
        CongruenceClaim c;
        c.label = std::move(label);
        c.family = std::move(fam);
        c.step = step;
        c.residue = res;
        c.modulus = mod;
        c.n_start = start;
        out.push_back(std::move(c));
    };
    for (long long r = 1; r <= r_max; ++r)
        for (long long s = 1; s <= s_max; ++s) {
            push("1.15", family_direct(r, s), 1, 0, 2, 1);
            if ((r + s) % 2 == 0) {
                push("1.52", family_direct(r, s), 4, 2, 4);
                push("3n2.m4", family_direct(r, s), 3, 2, 4);
            }
            push("9n3.m4", family_direct(r, s), 9, 3, 4);
            push("9n6.m4", family_direct(r, s), 9, 6, 4);
        }
    for (long long i = 1; i <= i_max; ++i)
        for (long long j = 1; j <= j_max; ++j)
            push("1.53",
                 family_indexed("thm5", {{"i", i}, {"j", j}}, 2 * j, 2 * i + 1),
                 4, 3, 4);
    for (long long r = 1; r <= r_max; ++r)
        for (long long i = 1; i <= i_max; ++i)
            push("3n1.m4", family_indexed("thm5", {{"i", i}}, r, 2 * i), 3, 1, 4);
    for (long long j = 1; j <= j_max; ++j)
        for (long long s = 1; s <= s_max; ++s) {
            push("9n3.m8", family_indexed("thm5", {{"j", j}}, 2 * j + 1, s), 9, 3, 8);
            push("9n6.m8", family_indexed("thm5", {{"j", j}}, 2 * j + 1, s), 9, 6, 8);
        }
    if (negative_controls) {
        CongruenceClaim c;
        c.label = "neg.1.52";
        c.family = family_direct(1, 2);  // r+s odd: the 4n+2 congruence must fail
        c.step = 4;
        c.residue = 2;
        c.modulus = 4;
        c.expect_violation = true;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<CongruenceClaim> thm6_claims(long long k_max, long long i_max,
                                         long long j_max, long long r_max) {
    std::vector<CongruenceClaim> out;
    auto push = [&](std::string label, FamilyParams fam, long long step,
                    long long res, std::uint64_t mod) {
        CongruenceClaim c;
        c.label = std::move(label);
        c.family = std::move(fam);
        c.step = step;
        c.residue = res;
        c.modulus = mod;
        out.push_back(std::move(c));
    };
    for (long long k = 1; k <= k_max; ++k) {
        const long long pk = pow_ll(2, k);
        const std::uint64_t m1 = static_cast<std::uint64_t>(2 * pk);      // 2^(k+1)
        const std::uint64_t m2 = static_cast<std::uint64_t>(4 * pk);      // 2^(k+2)
        for (long long r = 1; r <= r_max; ++r)
            push("1.61", family_indexed("thm6", {{"k", k}}, r, pk), 2, 1, m1);
        for (long long r = 1; r <= r_max; ++r)
            for (long long i = 1; i <= i_max; ++i)
                push("1.62",
                     family_indexed("thm6", {{"k", k}, {"i", i}}, r,
                                    pk * i + pk / 2),
                     2, 1, static_cast<std::uint64_t>(pk));
        for (long long i = 1; i <= i_max; ++i)
            for (long long j = 1; j <= j_max; ++j) {
                const long long ra = 2 * pk * j + pk - 1, sa = pk * i + 1;
                const long long rb = 2 * pk * j + pk, sb = pk * i;
                const std::map<std::string, long long> idx{
                    {"k", k}, {"i", i}, {"j", j}};
                push("1.63", family_indexed("thm6", idx, ra, sa), 4, 2, m1);
                push("1.64", family_indexed("thm6", idx, rb, sb), 4, 2, m1);
                push("1.65", family_indexed("thm6", idx, ra, sa), 4, 3, m2);
                push("1.66", family_indexed("thm6", idx, rb, sb), 4, 3, m2);
                push("1.68", family_indexed("thm6", idx, rb, sb), 8, 4, m1);
                push("1.69", family_indexed("thm6", idx, ra, sa), 8, 5, m2);
            }
    }
    return out;
}

std::vector<CongruenceClaim> thm7_claims(long long k_max) {
    std::vector<CongruenceClaim> out;
    for (long long k = 0; k <= k_max; ++k)
        for (long long j = 0; j <= k; ++j) {
            const std::map<std::string, long long> idx{{"k", k}, {"j", j}};
            CongruenceClaim a;
            a.label = "1.20";
            a.family = family_indexed("thm7", idx, 3 * (k - j) + 3, 3 * k + 6);
            a.step = 3;
            a.residue = 1;
            a.modulus = 3;
            out.push_back(a);
            a.label = "1.21";
            a.residue = 2;
            out.push_back(a);
            CongruenceClaim b;
            b.label = "1.22";
            b.family = family_indexed("thm7", idx, 3 * (k - j) + 5, 3 * k + 1);
            b.step = 3;
            b.residue = 2;  // the proof derives vanishing on 3n+2 for this family
            b.modulus = 3;
            out.push_back(b);
        }
    return out;
}

std::vector<CongruenceClaim> thm8_claims(const std::vector<long long>& primes,
                                         long long k_max,
                                         bool include_informational) {
    std::vector<CongruenceClaim> out;
    for (long long p : primes) {
        if (p < 3 || !is_prime_small(p))
            throw std::invalid_argument("thm8_claims: primes must be odd primes");
        const long long inv2 = mod_inverse(2, p);
        for (long long k = 0; k <= k_max; ++k)
            for (long long j = 0; j <= k; ++j) {
                const std::map<std::string, long long> idx{
                    {"p", p}, {"k", k}, {"j", j}};
                for (long long rr = 1; rr <= p - 1; ++rr) {
                    if (legendre(rr, p) == -1) {
                        CongruenceClaim c;
                        c.label = "1.23";
                        c.family = family_indexed("thm8", idx, p * (k - j) + p - 1,
                                                  p * k + p + 1);
                        c.step = p;
                        c.residue = rr;
                        c.modulus = static_cast<std::uint64_t>(p);
                        out.push_back(std::move(c));
                    }
                    if (legendre((inv2 * rr) % p, p) == -1) {
                        CongruenceClaim c;
                        c.label = "1.24";
                        c.family = family_indexed("thm8", idx, p * (k - j) + p - 1,
                                                  p * k + p);
                        c.step = p;
                        c.residue = rr;
                        c.modulus = static_cast<std::uint64_t>(p);
                        out.push_back(c);
                        if (include_informational) {
                            c.label = "1.24.colored";
                            c.series = GfKind::Colored;
                            c.informational = true;
                            out.push_back(std::move(c));
                        }
                    }
                }
            }
    }
    return out;
}

std::vector<CongruenceClaim> conjecture_claims(long long k_max, long long i_max,
                                               long long j_max) {
    std::vector<CongruenceClaim> out;
    for (long long k = 1; k <= k_max; ++k)
        for (long long i = 0; i <= i_max; ++i)
            for (long long j = 0; j <= j_max; ++j) {
                const long long pk = pow_ll(2, k);
                const long long r = 2 * pk * j + pk - 1, s = pk * i + 1;
                const std::map<std::string, long long> idx{
                    {"k", k}, {"i", i}, {"j", j}};
                CongruenceClaim c;
                c.family = family_indexed("conjecture", idx, r, s);
                c.label = "6.1a";
                c.step = 3;
                c.residue = 2;
                c.modulus = static_cast<std::uint64_t>(2 * pk);
                out.push_back(c);
                c.label = "6.1b";
                c.step = 9;
                c.residue = 3;
                c.modulus = static_cast<std::uint64_t>(4 * pk);
                out.push_back(c);
                c.label = "6.1c";
                c.residue = 6;
                out.push_back(c);
            }
    return out;
}

// ---------------------------------------------------------------------------
// Suites.
// ---------------------------------------------------------------------------

std::vector<VerificationReport> suite_thm3(long long r_max, long long s_max,
                                           long long n_limit, int jobs) {
    std::vector<ColorParams> grid;
    for (long long r = 1; r <= r_max; ++r)
        for (long long s = 1; s <= s_max; ++s) grid.emplace_back(r, s);
    std::vector<VerificationReport> reports(grid.size());
    parallel_each(grid.size(), jobs, [&](std::size_t i) {
        reports[i] = mod4_profile(grid[i], n_limit);
    });
    sort_reports(reports);
    return reports;
}

std::vector<VerificationReport> suite_thm4(long long r_max, long long s_max,
                                           long long n_limit, int jobs) {
    std::vector<ColorParams> grid;
    for (long long r = 1; r <= r_max; ++r)
        for (long long s = 1; s <= s_max; ++s) grid.emplace_back(r, s);
    std::vector<VerificationReport> reports(grid.size());
    parallel_each(grid.size(), jobs, [&](std::size_t i) {
        reports[i] = mod8_profile(grid[i], n_limit);
    });
    sort_reports(reports);
    return reports;
}

std::vector<VerificationReport> suite_thm5(long long r_max, long long s_max,
                                           long long i_max, long long j_max,
                                           long long n_max, int jobs,
                                           bool negative_controls) {
    return verify_claims(thm5_claims(r_max, s_max, i_max, j_max, negative_controls),
                         n_max, jobs);
}

std::vector<VerificationReport> suite_thm6(long long k_max, long long i_max,
                                           long long j_max, long long r_max,
                                           long long n_max, int jobs) {
    return verify_claims(thm6_claims(k_max, i_max, j_max, r_max), n_max, jobs);
}

std::vector<VerificationReport> suite_thm7(long long k_max, long long n_max,
                                           int jobs) {
    return verify_claims(thm7_claims(k_max), n_max, jobs);
}

std::vector<VerificationReport> suite_thm8(const std::vector<long long>& primes,
                                           long long k_max, long long n_max,
                                           int jobs) {
    return verify_claims(thm8_claims(primes, k_max, true), n_max, jobs);
}

std::vector<VerificationReport> suite_das(long long r_max, long long n_max,
                                          std::size_t spec_order, int jobs) {
    std::vector<std::function<VerificationReport()>> tasks;
    for (long long r = 1; r <= r_max; ++r) {
        tasks.push_back([r, n_max] {
            ProfileWeights w;
            w.modulus = 4;
            w.w_sq = 2;
            w.w_twice_even = umod(2 * (r + 1), 4);
            w.w_twice_odd = w.w_twice_even;
            w.w_four = 0;
            w.w_rep = 0;
            w.two_case_table = true;
            return run_profile("das.m4", ColorParams(r, 1), n_max, w, true);
        });
        tasks.push_back([r, n_max] {
            const long long rm = r % 8;
            ProfileWeights w;
            w.modulus = 8;
            w.w_sq = 2;
            w.w_twice_even = umod(6 * (rm + 1), 8);
            w.w_twice_odd = umod(2 * (rm + 1), 8);
            w.w_four = umod(2 * (rm + 1) * (rm + 2), 8);
            w.w_rep = umod(4 * (rm + 1), 8);
            return run_profile("das.m8", ColorParams(r, 1), n_max, w, true);
        });
        tasks.push_back([r, spec_order] {
            const auto t0 = Clock::now();
            const CoefficientRing Z = CoefficientRing::exact();
            VerificationReport rep;
            rep.label = "gf.even.spec";
            rep.description = "even-colored overlined series vs s=1 slice";
            rep.params["r"] = r;
            const SeriesComparison cmp =
                compare(gf_even_over(r, spec_order, Z),
                        gf_overcolored(ColorParams(r, 1), spec_order, Z));
            rep.n_checked = static_cast<long long>(cmp.order_compared);
            for (const auto& mm : cmp.mismatches)
                rep.counterexamples.push_back(
                    {static_cast<long long>(mm.index), mm.lhs.get_str()});
            rep.wall_ms = ms_since(t0);
            return rep;
        });
        tasks.push_back([r, spec_order] {
            const auto t0 = Clock::now();
            const CoefficientRing Z = CoefficientRing::exact();
            VerificationReport rep;
            rep.label = "gf.odd.spec";
            rep.description = "odd-colored overlined series vs r=1 slice";
            rep.params["s"] = r;
            const SeriesComparison cmp =
                compare(gf_odd_over(r, spec_order, Z),
                        gf_overcolored(ColorParams(1, r), spec_order, Z));
            rep.n_checked = static_cast<long long>(cmp.order_compared);
            for (const auto& mm : cmp.mismatches)
                rep.counterexamples.push_back(
                    {static_cast<long long>(mm.index), mm.lhs.get_str()});
            rep.wall_ms = ms_since(t0);
            return rep;
        });
    }
    std::vector<VerificationReport> reports(tasks.size());
    parallel_each(tasks.size(), jobs,
                  [&](std::size_t i) { reports[i] = tasks[i](); });
    sort_reports(reports);
    return reports;
}

VerificationReport verify_transfer_principle(
    const EtaQuotientSpec& base,
    const std::vector<std::pair<long long, long long>>& perturbation,
    long long p, long long lambda, long long C, long long n_max) {
    if (!is_prime_small(p))
        throw std::invalid_argument("transfer: p must be prime");
    if (lambda < 1)
        throw std::invalid_argument("transfer: lambda must be >= 1");
    const long long plam = pow_ll(p, lambda);
    if (C < 1 || C > plam - 1)
        throw std::invalid_argument("transfer: need 1 <= C <= p^lambda - 1");
    const auto t0 = Clock::now();
    const std::size_t order = static_cast<std::size_t>(plam * n_max + C + 1);
    const CoefficientRing ring =
        CoefficientRing::residue(static_cast<std::uint64_t>(p));

    EtaQuotientSpec perturbed = base;
    for (const auto& [scale, delta] : perturbation)
        perturbed.push(scale, delta * plam);

    const auto a = eta_quotient(base, order, ring).words();
    const auto b = eta_quotient(perturbed, order, ring).words();

    VerificationReport report;
    report.label = "L2.2";
    report.description = "exponent transfer from " + base.describe() + " to " +
                         perturbed.describe();
    report.params["p"] = p;
    report.params["lambda"] = lambda;
    report.params["C"] = C;
    report.step = plam;
    report.residue = C;
    report.modulus = static_cast<std::uint64_t>(p);
    report.n_checked = n_max + 1;

    bool hypothesis = true;
    for (long long n = 0; n <= n_max && hypothesis; ++n)
        if (a[static_cast<std::size_t>(plam * n + C)] % p != 0) hypothesis = false;
    if (!hypothesis) {
        report.description += " (base series does not vanish; transfer vacuous)";
        report.params["hypothesis"] = 0;
    } else {
        report.params["hypothesis"] = 1;
        for (long long n = 0; n <= n_max; ++n) {
            const std::size_t idx = static_cast<std::size_t>(plam * n + C);
            const std::uint64_t v = b[idx] % p;
            if (v != 0)
                report.counterexamples.push_back(
                    {static_cast<long long>(idx), std::to_string(v)});
        }
    }
    report.wall_ms = ms_since(t0);
    return report;
}

std::vector<VerificationReport> suite_lemma22(long long n_max, unsigned seed) {
    struct Instance {
        EtaQuotientSpec base;
        long long p, lambda, C;
        bool zero_perturbation;
    };
    // Bases are the eta quotients whose prime-progression vanishing the
    // congruence families establish; the perturbations step within a family.
    std::vector<Instance> instances = {
        {overcolored_spec(ColorParams(3, 6)), 3, 1, 1, false},
        {overcolored_spec(ColorParams(3, 6)), 3, 1, 2, false},
        {overcolored_spec(ColorParams(5, 1)), 3, 1, 2, false},
        {overcolored_spec(ColorParams(2, 4)), 3, 1, 2, false},
        {overcolored_spec(ColorParams(4, 6)), 5, 1, 2, false},
        {overcolored_spec(ColorParams(4, 6)), 5, 1, 3, false},
        {overcolored_spec(ColorParams(4, 5)), 5, 1, 4, false},
        {overcolored_spec(ColorParams(6, 8)), 7, 1, 3, false},
        {overcolored_spec(ColorParams(6, 7)), 7, 1, 6, false},
        {overcolored_spec(ColorParams(3, 6)), 3, 1, 1, true},
    };
    std::mt19937 rng(seed);
    std::vector<VerificationReport> reports;
    long long idx = 0;
    for (const auto& inst : instances) {
        std::vector<std::pair<long long, long long>> pert;
        if (!inst.zero_perturbation) {
            const int entries = 1 + static_cast<int>(rng() % 2);
            for (int e = 0; e < entries; ++e) {
                const long long scales[] = {1, 2, 4, 8};
                const long long scale = scales[rng() % 4];
                const long long magnitude = 1 + static_cast<long long>(rng() % 2);
                const long long sign_base = inst.base.exponent_of(scale);
                const long long delta =
                    (sign_base < 0) ? -magnitude : magnitude;
                pert.emplace_back(scale, delta);
            }
        }
        VerificationReport rep = verify_transfer_principle(
            inst.base, pert, inst.p, inst.lambda, inst.C, n_max);
        rep.params["instance"] = idx++;
        reports.push_back(std::move(rep));
    }
    sort_reports(reports);
    return reports;
}

std::vector<VerificationReport> conjecture_scan(long long k_max, long long i_max,
                                                long long j_max, long long n_max,
                                                int jobs) {
    return verify_claims(conjecture_claims(k_max, i_max, j_max), n_max, jobs);
}

std::vector<VerificationReport> suite_identities(std::size_t order, int jobs) {
    std::vector<std::function<VerificationReport()>> tasks;
    tasks.push_back([order] { return verify_hirschhorn_dissection(order); });
    for (long long t = 1; t <= 8; ++t) {
        tasks.push_back([t, order] { return verify_phi_dual(t, order); });
        tasks.push_back([t, order] { return verify_phi_neg_dual(t, order); });
    }
    const std::pair<long long, long long> split_pairs[] = {{1, 1}, {2, 3}, {3, 2}};
    for (const auto& [r, s] : split_pairs)
        tasks.push_back([r = r, s = s, order] {
            return verify_parity_split(ColorParams(r, s), order);
        });
    const std::size_t binom_order = std::min<std::size_t>(order, 1000);
    for (long long m : {1, 2, 4})
        for (long long p : {2, 3, 5})
            for (long long k : {1, 2})
                tasks.push_back([m, p, k, binom_order] {
                    return verify_binomial_congruence(m, p, k, binom_order);
                });
    const std::size_t product_order = std::min<std::size_t>(order, 512);
    for (long long r = 1; r <= 6; ++r)
        for (long long s = 1; s <= 6; ++s)
            tasks.push_back([r, s, product_order] {
                return verify_phi_product_identity(ColorParams(r, s),
                                                   product_order);
            });
    std::vector<VerificationReport> reports(tasks.size());
    parallel_each(tasks.size(), jobs,
                  [&](std::size_t i) { reports[i] = tasks[i](); });
    sort_reports(reports);
    return reports;
}

}  // namespace overq
