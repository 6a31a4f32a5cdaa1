#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace overq {

/// How a congruence family's colors are derived: either given directly or
/// resolved from the family indices i, j, k, p recorded in `indices`.
struct FamilyParams {
    std::string scheme = "direct";
    std::map<std::string, long long> indices;
    long long r = 1;
    long long s = 1;
};

FamilyParams family_direct(long long r, long long s);
/// indices may carry i, j, k, p; resolved colors are validated to be >= 1.
FamilyParams family_indexed(std::string scheme,
                            std::map<std::string, long long> indices,
                            long long r, long long s);

enum class GfKind { Overcolored, Colored };

/// One assertion of the form: the counting function vanishes modulo
/// `modulus` on the progression step*n + residue for n_start <= n <= n_max.
struct CongruenceClaim {
    std::string label;
    FamilyParams family;
    long long step = 1;
    long long residue = 0;
    std::uint64_t modulus = 2;
    long long n_start = 0;
    GfKind series = GfKind::Overcolored;
    bool informational = false;   // reported, never gates an exit code
    bool expect_violation = false;  // negative control

    std::string describe() const;
};

struct Counterexample {
    long long n = 0;        // coefficient index, i.e. the argument of the counting function
    std::string value;      // offending value, decimal
    bool operator==(const Counterexample&) const = default;
};

/// Outcome of one machine check. `counterexamples` empty means verified;
/// the two flags carry claim metadata through to reports and exit codes.
struct VerificationReport {
    std::string label;
    std::string description;
    std::map<std::string, long long> params;
    long long step = 1;
    long long residue = 0;
    std::uint64_t modulus = 0;  // 0 marks an exact-equality check
    long long n_checked = 0;
    bool informational = false;
    bool expect_violation = false;
    std::vector<Counterexample> counterexamples;
    std::int64_t wall_ms = 0;

    bool verified() const { return counterexamples.empty(); }
    /// Verified, or violated when a violation was the expected outcome.
    bool as_expected() const { return verified() != expect_violation; }
    bool operator==(const VerificationReport&) const = default;
};

struct SuiteReport {
    int schema_version = 1;
    std::string suite;
    std::string timestamp;  // ISO 8601, UTC
    std::size_t order = 0;  // largest truncation order used
    std::map<std::string, long long> grid;
    std::vector<VerificationReport> claims;

    /// True when every non-informational claim matched its expectation.
    bool all_passed() const;
    bool operator==(const SuiteReport&) const = default;
};

/// Stable ordering regardless of execution schedule: label, then params.
void sort_reports(std::vector<VerificationReport>& reports);

std::string iso8601_utc_now();

std::string to_json_string(const SuiteReport& report);
SuiteReport suite_report_from_json_string(const std::string& text);
std::string to_csv_string(const SuiteReport& report);
std::string to_plain_string(const SuiteReport& report);

}  // namespace overq
