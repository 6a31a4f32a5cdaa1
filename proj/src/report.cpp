#include "overq/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <ctime>
#include <sstream>
#include <stdexcept>

namespace overq {

using nlohmann::json;

FamilyParams family_direct(long long r, long long s) {
    if (r < 1 || s < 1)
        throw std::invalid_argument("FamilyParams: colors must be >= 1");
    FamilyParams f;
    f.r = r;
    f.s = s;
    return f;
}

FamilyParams family_indexed(std::string scheme,
                            std::map<std::string, long long> indices,
                            long long r, long long s) {
    if (r < 1 || s < 1)
        throw std::invalid_argument("FamilyParams: resolved colors must be >= 1");
    FamilyParams f;
    f.scheme = std::move(scheme);
    f.indices = std::move(indices);
    f.r = r;
    f.s = s;
    return f;
}

std::string CongruenceClaim::describe() const {
    std::ostringstream os;
    os << (series == GfKind::Overcolored ? "abar" : "a") << "(" << family.r << ","
       << family.s << ")";
    os << " at " << step << "n+" << residue << " == 0 mod " << modulus;
    if (n_start != 0) os << " from n=" << n_start;
    return os.str();
}

bool SuiteReport::all_passed() const {
    return std::all_of(claims.begin(), claims.end(),
                       [](const VerificationReport& r) {
                           return r.informational || r.as_expected();
                       });
}

void sort_reports(std::vector<VerificationReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const VerificationReport& a, const VerificationReport& b) {
                         if (a.label != b.label) return a.label < b.label;
                         return a.params < b.params;
                     });
}

std::string iso8601_utc_now() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

namespace {

json claim_to_json(const VerificationReport& r) {
    json ces = json::array();
    for (const auto& ce : r.counterexamples)
        ces.push_back({{"n", ce.n}, {"value", ce.value}});
    return json{{"label", r.label},
                {"description", r.description},
                {"params", r.params},
                {"progression", {{"step", r.step}, {"residue", r.residue}}},
                {"modulus", r.modulus},
                {"n_checked", r.n_checked},
                {"status", r.verified() ? "verified" : "violated"},
                {"informational", r.informational},
                {"expect_violation", r.expect_violation},
                {"counterexamples", ces},
                {"wall_ms", r.wall_ms}};
}

VerificationReport claim_from_json(const json& j) {
    VerificationReport r;
    r.label = j.at("label").get<std::string>();
    r.description = j.at("description").get<std::string>();
    r.params = j.at("params").get<std::map<std::string, long long>>();
    r.step = j.at("progression").at("step").get<long long>();
    r.residue = j.at("progression").at("residue").get<long long>();
    r.modulus = j.at("modulus").get<std::uint64_t>();
    r.n_checked = j.at("n_checked").get<long long>();
    r.informational = j.at("informational").get<bool>();
    r.expect_violation = j.at("expect_violation").get<bool>();
    for (const auto& ce : j.at("counterexamples"))
        r.counterexamples.push_back(
            {ce.at("n").get<long long>(), ce.at("value").get<std::string>()});
    r.wall_ms = j.at("wall_ms").get<std::int64_t>();
    const std::string status = j.at("status").get<std::string>();
    if ((status == "verified") != r.verified())
        throw std::invalid_argument("report: status inconsistent with counterexamples");
    return r;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string to_json_string(const SuiteReport& report) {
    json claims = json::array();
    for (const auto& c : report.claims) claims.push_back(claim_to_json(c));
    json j{{"schema_version", report.schema_version},
           {"suite", report.suite},
           {"timestamp", report.timestamp},
           {"order", report.order},
           {"grid", report.grid},
           {"claims", claims}};
    return j.dump(2) + "\n";
}

SuiteReport suite_report_from_json_string(const std::string& text) {
    json j = json::parse(text);
    SuiteReport r;
    r.schema_version = j.at("schema_version").get<int>();
    r.suite = j.at("suite").get<std::string>();
    r.timestamp = j.at("timestamp").get<std::string>();
    r.order = j.at("order").get<std::size_t>();
    r.grid = j.at("grid").get<std::map<std::string, long long>>();
    for (const auto& c : j.at("claims")) r.claims.push_back(claim_from_json(c));
    return r;
}

std::string to_csv_string(const SuiteReport& report) {
    std::ostringstream os;
    os << "label,description,params,step,residue,modulus,n_checked,status,"
          "informational,expect_violation,counterexamples,wall_ms\n";
    for (const auto& c : report.claims) {
        std::ostringstream params, ces;
        bool first = true;
        for (const auto& [k, v] : c.params) {
            if (!first) params << ";";
            params << k << "=" << v;
            first = false;
        }
        first = true;
        for (const auto& ce : c.counterexamples) {
            if (!first) ces << ";";
            ces << ce.n << ":" << ce.value;
            first = false;
        }
        os << csv_escape(c.label) << "," << csv_escape(c.description) << ","
           << csv_escape(params.str()) << "," << c.step << "," << c.residue << ","
           << c.modulus << "," << c.n_checked << ","
           << (c.verified() ? "verified" : "violated") << ","
           << (c.informational ? 1 : 0) << "," << (c.expect_violation ? 1 : 0)
           << "," << csv_escape(ces.str()) << "," << c.wall_ms << "\n";
    }
    return os.str();
}

std::string to_plain_string(const SuiteReport& report) {
    std::ostringstream os;
    os << "suite " << report.suite << " @ " << report.timestamp << " (order "
       << report.order << ")\n";
    for (const auto& c : report.claims) {
        const char* mark = c.as_expected() ? "PASS" : "FAIL";
        if (c.informational) mark = "INFO";
        os << "[" << mark << "] " << c.label << " "
           << (c.verified() ? "verified" : "violated");
        if (c.expect_violation) os << " (violation expected)";
        std::ostringstream params;
        for (const auto& [k, v] : c.params) params << " " << k << "=" << v;
        os << params.str() << " n_checked=" << c.n_checked;
        if (!c.description.empty()) os << " :: " << c.description;
        if (!c.counterexamples.empty()) {
            os << " first_counterexamples:";
            std::size_t shown = 0;
            for (const auto& ce : c.counterexamples) {
                if (shown++ == 4) {
                    os << " ...";
                    break;
                }
                os << " (n=" << ce.n << ", " << ce.value << ")";
            }
        }
        os << "\n";
    }
    os << (report.all_passed() ? "ALL PASSED" : "FAILURES PRESENT") << " ("
       << report.claims.size() << " claims)\n";
    return os.str();
}

}  // namespace overq
