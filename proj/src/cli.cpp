#include "overq/cli.hpp"

#include "overq/congruence.hpp"
#include "overq/oracle.hpp"
#include "overq/qseries.hpp"
#include "overq/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace overq {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCrossCheck = 2;
constexpr int kExitViolation = 3;
constexpr int kExitCounterexample = 4;

struct RunConfig {
    std::string command;
    long long r = 1, s = 1;
    long long n = 0, from = -1;
    std::string function = "overcolored";
    std::uint64_t mod = 0;  // 0 = exact
    bool cross_check = false;
    std::string suite;
    long long n_max = -1;
    long long order = 0;  // 0 = auto-derived
    long long r_max = 6, s_max = 6, i_max = 2, j_max = 2, k_max = -1;
    std::vector<long long> primes{3, 5, 7, 11};
    bool negative_controls = false;
    long long cap = 12;
    std::string format = "plain";
    std::string out_path;
    int jobs = 1;
    unsigned seed = 20250809;
};

/// Writes to --out when given, the live stream otherwise.
class OutputTarget {
public:
    OutputTarget(const std::string& path, std::ostream& fallback)
        : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

TruncatedSeries build_function(const RunConfig& cfg, std::size_t order,
                               const CoefficientRing& ring) {
    if (cfg.function == "overcolored")
        return gf_overcolored(ColorParams(cfg.r, cfg.s), order, ring);
    if (cfg.function == "colored")
        return gf_colored(ColorParams(cfg.r, cfg.s), order, ring);
    if (cfg.function == "even-over") return gf_even_over(cfg.r, order, ring);
    if (cfg.function == "odd-over") return gf_odd_over(cfg.s, order, ring);
    throw CLI::ValidationError("--function",
                               "unknown function: " + cfg.function);
}

std::vector<Integer> oracle_values(const RunConfig& cfg, std::size_t count) {
    if (cfg.function == "overcolored")
        return count_overcolored(ColorParams(cfg.r, cfg.s), count);
    if (cfg.function == "colored")
        return count_colored(ColorParams(cfg.r, cfg.s), count);
    if (cfg.function == "even-over")
        return count_overcolored(ColorParams(cfg.r, 1), count);
    return count_overcolored(ColorParams(1, cfg.s), count);
}

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const long long lo = cfg.from < 0 ? cfg.n : cfg.from;
    if (lo > cfg.n) throw CLI::ValidationError("--from", "range start past --n");
    const std::size_t needed = static_cast<std::size_t>(cfg.n) + 1;
    if (cfg.order > 0 && static_cast<std::size_t>(cfg.order) < needed)
        throw CLI::ValidationError("--order", "order too small for requested n");
    const std::size_t order =
        std::max<std::size_t>(needed, static_cast<std::size_t>(cfg.order));
    const CoefficientRing ring = cfg.mod == 0
                                     ? CoefficientRing::exact()
                                     : CoefficientRing::residue(cfg.mod);
    const TruncatedSeries series = build_function(cfg, order, ring);

    std::vector<std::pair<long long, std::string>> values;
    for (long long n = lo; n <= cfg.n; ++n)
        values.emplace_back(n, series.coeff(static_cast<std::size_t>(n)).get_str());

    if (cfg.cross_check) {
        const std::vector<Integer> expected = oracle_values(cfg, needed);
        for (long long n = lo; n <= cfg.n; ++n) {
            Integer want = expected[static_cast<std::size_t>(n)];
            if (cfg.mod != 0) want = Integer((unsigned long)mod_u64(want, cfg.mod));
            if (want.get_str() != values[static_cast<std::size_t>(n - lo)].second) {
                err << "cross-check mismatch at n=" << n
                    << ": series=" << values[static_cast<std::size_t>(n - lo)].second
                    << " oracle=" << want.get_str() << "\n";
                return kExitCrossCheck;
            }
        }
    }

    OutputTarget target(cfg.out_path, out);
    std::ostream& os = target.stream();
    if (cfg.format == "json") {
        std::ostringstream body;
        body << "{\"function\":\"" << cfg.function << "\",\"r\":" << cfg.r
             << ",\"s\":" << cfg.s << ",\"values\":[";
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) body << ",";
            body << "{\"n\":" << values[i].first << ",\"value\":\""
                 << values[i].second << "\"}";
        }
        body << "]}";
        os << body.str() << "\n";
    } else if (cfg.format == "csv") {
        os << "n,value\n";
        for (const auto& [n, v] : values) os << n << "," << v << "\n";
    } else if (values.size() == 1) {
        os << values[0].second << "\n";
    } else {
        for (const auto& [n, v] : values) os << n << "\t" << v << "\n";
    }
    return kExitOk;
}

struct SuiteRun {
    SuiteReport report;
    int failure_exit = kExitViolation;
};

SuiteRun run_suite(const RunConfig& cfg) {
    SuiteRun run;
    SuiteReport& rep = run.report;
    rep.suite = cfg.suite;
    rep.timestamp = iso8601_utc_now();
    auto nmax_or = [&](long long dflt) { return cfg.n_max < 0 ? dflt : cfg.n_max; };

    if (cfg.suite == "thm3" || cfg.suite == "thm4") {
        const long long n_limit = nmax_or(2000);
        rep.grid = {{"r_max", cfg.r_max}, {"s_max", cfg.s_max}, {"n_max", n_limit}};
        rep.order = static_cast<std::size_t>(n_limit) + 1;
        rep.claims = (cfg.suite == "thm3")
                         ? suite_thm3(cfg.r_max, cfg.s_max, n_limit, cfg.jobs)
                         : suite_thm4(cfg.r_max, cfg.s_max, n_limit, cfg.jobs);
    } else if (cfg.suite == "thm5") {
        const long long n_max = nmax_or(1000);
        rep.grid = {{"r_max", cfg.r_max}, {"s_max", cfg.s_max},
                    {"i_max", cfg.i_max}, {"j_max", cfg.j_max},
                    {"n_max", n_max}};
        auto claims = thm5_claims(cfg.r_max, cfg.s_max, cfg.i_max, cfg.j_max,
                                  cfg.negative_controls);
        rep.order = required_order(claims, n_max);
        rep.claims = verify_claims(claims, n_max, cfg.jobs);
    } else if (cfg.suite == "thm6") {
        const long long k_max = cfg.k_max < 0 ? 3 : cfg.k_max;
        const long long n_max = nmax_or(500);
        rep.grid = {{"k_max", k_max}, {"i_max", cfg.i_max}, {"j_max", cfg.j_max},
                    {"r_max", cfg.r_max}, {"n_max", n_max}};
        auto claims = thm6_claims(k_max, cfg.i_max, cfg.j_max, cfg.r_max);
        rep.order = required_order(claims, n_max);
        rep.claims = verify_claims(claims, n_max, cfg.jobs);
    } else if (cfg.suite == "thm7") {
        const long long k_max = cfg.k_max < 0 ? 2 : cfg.k_max;
        const long long n_max = nmax_or(500);
        rep.grid = {{"k_max", k_max}, {"n_max", n_max}};
        auto claims = thm7_claims(k_max);
        rep.order = required_order(claims, n_max);
        rep.claims = verify_claims(claims, n_max, cfg.jobs);
    } else if (cfg.suite == "thm8") {
        const long long k_max = cfg.k_max < 0 ? 2 : cfg.k_max;
        const long long n_max = nmax_or(500);
        rep.grid = {{"k_max", k_max}, {"n_max", n_max}};
        auto claims = thm8_claims(cfg.primes, k_max, true);
        rep.order = required_order(claims, n_max);
        rep.claims = verify_claims(claims, n_max, cfg.jobs);
    } else if (cfg.suite == "das") {
        const long long n_max = nmax_or(500);
        const std::size_t spec_order =
            cfg.order > 0 ? static_cast<std::size_t>(cfg.order) : 500;
        rep.grid = {{"r_max", cfg.r_max}, {"n_max", n_max}};
        rep.order = std::max<std::size_t>(spec_order,
                                          static_cast<std::size_t>(n_max) + 1);
        rep.claims = suite_das(cfg.r_max, n_max, spec_order, cfg.jobs);
    } else if (cfg.suite == "identities") {
        const std::size_t order =
            cfg.order > 0 ? static_cast<std::size_t>(cfg.order) : 2048;
        rep.grid = {{"order", static_cast<long long>(order)}};
        rep.order = order;
        rep.claims = suite_identities(order, cfg.jobs);
    } else if (cfg.suite == "lemma22") {
        const long long n_max = nmax_or(200);
        rep.grid = {{"n_max", n_max}, {"seed", cfg.seed}};
        rep.claims = suite_lemma22(n_max, cfg.seed);
        for (const auto& c : rep.claims)
            rep.order = std::max(rep.order,
                                 static_cast<std::size_t>(c.step * n_max +
                                                          c.residue + 1));
    } else {
        throw CLI::ValidationError("--suite", "unknown suite: " + cfg.suite);
    }
    return run;
}

int emit_suite_report(const SuiteReport& rep, const RunConfig& cfg,
                      std::ostream& out, int failure_exit) {
    OutputTarget target(cfg.out_path, out);
    std::ostream& os = target.stream();
    if (cfg.format == "json")
        os << to_json_string(rep);
    else if (cfg.format == "csv")
        os << to_csv_string(rep);
    else
        os << to_plain_string(rep);
    return rep.all_passed() ? kExitOk : failure_exit;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    SuiteRun run = run_suite(cfg);
    return emit_suite_report(run.report, cfg, out, run.failure_exit);
}

int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    SuiteReport rep;
    rep.suite = "conjecture";
    rep.timestamp = iso8601_utc_now();
    const long long k_max = cfg.k_max < 0 ? 3 : cfg.k_max;
    const long long n_max = cfg.n_max < 0 ? 1000 : cfg.n_max;
    rep.grid = {{"k_max", k_max}, {"i_max", cfg.i_max}, {"j_max", cfg.j_max},
                {"n_max", n_max}};
    auto claims = conjecture_claims(k_max, cfg.i_max, cfg.j_max);
    rep.order = required_order(claims, n_max);
    rep.claims = verify_claims(claims, n_max, cfg.jobs);

    OutputTarget target(cfg.out_path, out);
    std::ostream& os = target.stream();
    if (cfg.format == "json")
        os << to_json_string(rep);
    else if (cfg.format == "csv")
        os << to_csv_string(rep);
    else {
        os << to_plain_string(rep);
        os << (rep.all_passed()
                   ? "conjecture consistent at depth n_max=" + std::to_string(n_max)
                   : "COUNTEREXAMPLES FOUND")
           << " over " << rep.claims.size() << " family instances\n";
    }
    return rep.all_passed() ? kExitOk : kExitCounterexample;
}

int cmd_list(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const auto objects =
        enumerate_small(ColorParams(cfg.r, cfg.s), cfg.n, cfg.cap);
    OutputTarget target(cfg.out_path, out);
    std::ostream& os = target.stream();
    if (cfg.format == "json") {
        std::ostringstream body;
        body << "{\"r\":" << cfg.r << ",\"s\":" << cfg.s << ",\"n\":" << cfg.n
             << ",\"count\":" << objects.size() << ",\"objects\":[";
        for (std::size_t i = 0; i < objects.size(); ++i) {
            if (i) body << ",";
            body << "\"" << objects[i].render() << "\"";
        }
        body << "]}";
        os << body.str() << "\n";
    } else {
        for (const auto& obj : objects) os << obj.render() << "\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"overcolored overpartition series and congruence verifier"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "plain, json, or csv")
            ->check(CLI::IsMember({"plain", "json", "csv"}));
        sub->add_option("--out", cfg.out_path, "write output to this file");
        sub->add_option("--jobs", cfg.jobs, "worker threads")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "seed for sampled checks");
    };

    CLI::App* compute = app.add_subcommand(
        "compute", "evaluate a counting function from its series");
    compute->add_option("--r", cfg.r, "colors for even parts")->check(CLI::PositiveNumber);
    compute->add_option("--s", cfg.s, "colors for odd parts")->check(CLI::PositiveNumber);
    compute->add_option("--n", cfg.n, "largest argument")->required()
        ->check(CLI::NonNegativeNumber);
    compute->add_option("--from", cfg.from, "range start (default: just --n)");
    compute->add_option("--function", cfg.function,
                        "overcolored, colored, even-over, odd-over");
    compute->add_option("--mod", cfg.mod, "report values modulo this");
    compute->add_flag("--cross-check", cfg.cross_check,
                      "also run the combinatorial count and compare");
    compute->add_option("--order", cfg.order, "series truncation override");
    add_common(compute);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", cfg.suite,
                       "thm3|thm4|thm5|thm6|thm7|thm8|das|identities|lemma22")
        ->required();
    verify->add_option("--nmax", cfg.n_max, "progression index bound");
    verify->add_option("--order", cfg.order, "truncation order (identity suite)");
    verify->add_option("--rmax", cfg.r_max, "even-color bound");
    verify->add_option("--smax", cfg.s_max, "odd-color bound");
    verify->add_option("--imax", cfg.i_max, "family index i bound");
    verify->add_option("--jmax", cfg.j_max, "family index j bound");
    verify->add_option("--kmax", cfg.k_max, "family index k bound");
    verify->add_option("--primes", cfg.primes, "primes for the mod-p families");
    verify->add_flag("--negative-controls", cfg.negative_controls,
                     "include claims that must report violated");
    add_common(verify);

    CLI::App* scan = app.add_subcommand(
        "scan", "scan the conjectured congruence families for counterexamples");
    scan->add_option("--kmax", cfg.k_max, "family index k bound");
    scan->add_option("--imax", cfg.i_max, "family index i bound");
    scan->add_option("--jmax", cfg.j_max, "family index j bound");
    scan->add_option("--nmax", cfg.n_max, "progression index bound");
    add_common(scan);

    CLI::App* list = app.add_subcommand(
        "list", "enumerate the counted objects for one argument");
    list->add_option("--r", cfg.r, "colors for even parts")->check(CLI::PositiveNumber);
    list->add_option("--s", cfg.s, "colors for odd parts")->check(CLI::PositiveNumber);
    list->add_option("--n", cfg.n, "argument to enumerate")->required()
        ->check(CLI::NonNegativeNumber);
    list->add_option("--cap", cfg.cap, "largest n allowed");
    add_common(list);

    std::vector<std::string> argv_storage;
    argv_storage.push_back("overq");
    for (const auto& a : args) argv_storage.push_back(a);
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(compute)) return cmd_compute(cfg, out, err);
        if (app.got_subcommand(verify)) return cmd_verify(cfg, out, err);
        if (app.got_subcommand(scan)) return cmd_scan(cfg, out, err);
        if (app.got_subcommand(list)) return cmd_list(cfg, out, err);
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace overq
