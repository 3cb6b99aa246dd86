// One line per acceptance criterion: "[PASS|FAIL] <n> <title>: <detail>".
// Budgets and tolerances are fixed below; nothing is tuned at run time.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>
#include <sys/wait.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "apollo/area.hpp"
#include "apollo/arrangement.hpp"
#include "apollo/chart.hpp"
#include "apollo/conic.hpp"
#include "apollo/depth.hpp"
#include "apollo/registry.hpp"
#include "apollo/verify.hpp"

using namespace apollo;

namespace {

namespace limits {
constexpr double kWorkedExampleMs = 10.0;
constexpr double kTableSeconds = 5.0;
constexpr int kTableCap = 2000;
constexpr int kTableMaxDeviation = 1;
constexpr int kGoldenCap = 100;
constexpr int kCoronaRows = 6;
constexpr int kCoronaSamples = 1000;
constexpr double kCoronaSeconds = 30.0;
constexpr int kSequenceMaxN = 6;
constexpr std::int64_t kAreaSamples = 1'000'000;
constexpr std::uint64_t kAreaSeed = 42;
constexpr double kAreaTarget = 0.750;
constexpr double kAreaTolerance = 0.005;
constexpr int kChartSize = 1000;
constexpr double kChartSingleSeconds = 10.0;
constexpr double kChartEightSeconds = 3.0;
constexpr int kProbeRows = 5;
constexpr long kProbeEpsilonDenominator = 10'000'000;
constexpr int kBarycentricMaxN = 6;
}  // namespace limits

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    std::function<Outcome()> run;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, int digits = 3) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << v;
    return os.str();
}

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string(APOLLO_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    const int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string first_failure(const Report& r) {
    for (const auto& c : r.checks)
        if (!c.pass) return c.name + " (expected " + c.expected + ", got " + c.actual + ")";
    return "";
}

// budget <= 0 means the criterion has no time limit.
Outcome suite_outcome(const Report& r, double elapsed, double budget = 0) {
    const bool ok = r.passed() && (budget <= 0 || elapsed < budget);
    std::string d = std::to_string(r.checks.size() - r.failures()) + "/" + std::to_string(r.checks.size()) +
                    " checks in " + fmt(elapsed) + " s";
    if (budget > 0) d += " (budget " + fmt(budget, 0) + " s)";
    if (!r.passed()) d += "; first failure: " + first_failure(r);
    return {ok, d};
}

Outcome worked_example() {
    const Tricycle<Rational> seed{15, 35, 102};
    const std::array<Tricycle<Rational>, 4> expected{{{15, 35, 2}, {15, 2, 2}, {3, 2, 2}, {-1, 2, 2}}};
    const auto t0 = Clock::now();
    const auto r = depth(seed, {.cap = kDefaultCap, .trace = true});
    const double lib_ms = seconds_since(t0) * 1e3;
    bool ok = r.finite() && r.steps == 4 && r.trace.size() == 4;
    for (std::size_t i = 0; ok && i < 4; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            ok = ok && r.trace[i][j].is_rational() && r.trace[i][j].rational_part() == expected[i][j];

    // The command itself, best of three to keep process start-up noise out.
    double cli_ms = 1e9;
    bool cli_ok = false;
    for (int i = 0; i < 3; ++i) {
        const auto c0 = Clock::now();
        const CliRun c = run_cli("depth 15 35 102 --exact --trace");
        cli_ms = std::min(cli_ms, seconds_since(c0) * 1e3);
        try {
            const auto j = nlohmann::json::parse(c.out);
            cli_ok = c.code == 0 && j["result"]["depth"] == 4 &&
                     j["result"]["trace"] == nlohmann::json::parse(R"([["15","35","2"],["15","2","2"],["3","2","2"],["-1","2","2"]])");
        } catch (const std::exception&) {
            cli_ok = false;
        }
    }
    const bool pass = ok && cli_ok && lib_ms < limits::kWorkedExampleMs && cli_ms < limits::kWorkedExampleMs;
    return {pass, "depth " + std::to_string(r.steps) + ", trace " + (ok ? "exact" : "MISMATCH") + ", CLI " +
                      (cli_ok ? "agrees" : "DISAGREES") + "; library " + fmt(lib_ms) + " ms, CLI " + fmt(cli_ms) +
                      " ms (budget " + fmt(limits::kWorkedExampleMs, 0) + " ms)"};
}

Outcome discontinuity_table() {
    const std::array<Rational, 5> eps{Rational(0), Rational(1, 10), Rational(1, 100), Rational(1, 1000),
                                      Rational(1, 10000)};
    const std::array<int, 5> published{2, 1, 11, 86, 836};
    const auto t0 = Clock::now();
    bool ok = true;
    std::string got, flags;
    for (std::size_t i = 0; i < eps.size(); ++i) {
        const auto r = depth_scaled(Rational(1, 3), Rational(1, 12) + eps[i], {.cap = limits::kTableCap});
        const int v = r.finite() ? r.steps : -1;
        got += (i ? "," : "") + (r.finite() ? std::to_string(v) : std::string("cap"));
        const int dev = r.finite() ? std::abs(v - published[i]) : limits::kTableCap;
        if (dev > limits::kTableMaxDeviation) ok = false;
        if (dev != 0) flags += " [flag eps=" + eps[i].to_string() + ": " + std::to_string(v) + " vs " +
                               std::to_string(published[i]) + "]";
    }
    const double s = seconds_since(t0);
    ok = ok && s < limits::kTableSeconds;
    return {ok, "{" + got + "} vs {2,1,11,86,836}" + (flags.empty() ? " exact" : flags) + " in " + fmt(s) +
                    " s (budget " + fmt(limits::kTableSeconds, 0) + " s)"};
}

Outcome golden_divergence() {
    const mpfr_prec_t bits = golden_precision_bits(limits::kGoldenCap);
    const auto r = depth_float(golden_seed(bits), {.cap = limits::kGoldenCap, .trace = true});
    bool positive = true;
    BigFloat smallest(1.0, bits);
    for (const auto& t : r.trace)
        for (const auto& v : t) {
            positive = positive && BigFloat(0.0, bits) < v;
            if (v < smallest) smallest = v;
        }
    const bool ok = r.reached_cap() && positive && static_cast<int>(r.trace.size()) == limits::kGoldenCap;
    return {ok, std::string(r.reached_cap() ? "reached cap " : "terminated at ") +
                    std::to_string(r.reached_cap() ? r.cap : r.steps) + " at " + std::to_string(bits) +
                    " bits; smallest curvature " + smallest.to_string(6) + (positive ? ", all positive" : "")};
}

Outcome corona_structure() {
    const auto t0 = Clock::now();
    const Report r = verify_corona(limits::kCoronaRows, limits::kCoronaSamples, 1);
    return suite_outcome(r, seconds_since(t0), limits::kCoronaSeconds);
}

Outcome registry_and_derivations() {
    const auto t0 = Clock::now();
    Report r = verify_registry();
    // Direct coefficient comparisons on top of the suite.
    for (int n = 1; n <= 5; ++n) {
        const std::string label = std::to_string(n) + "L_{1,1}";
        r.add(label, registry_lookup(label).conic.to_string(), corona_conic(1, n).to_string());
    }
    const std::array<std::pair<const char*, std::array<int, 2>>, 4> chain{
        {{"2L_{1,1}", {1, 2}}, {"3L_{2,1}", {2, 3}}, {"4L_{4,1}", {3, 4}}, {"5L_{8,1}", {4, 5}}}};
    for (const auto& [label, pm] : chain)
        r.add(label, registry_lookup(label).conic.to_string(), corona_conic(pm[0], pm[1]).to_string());
    const Conic c1 = derive_conic(case1_spec());
    r.add("case1", Conic(16, 28, 16, -2, -2, Rational(1, 16)).to_string(), c1.to_string());
    r.add("case1.5 anchor", c1.to_string(), derive_conic(case1_5_spec()).to_string());
    const Conic c2 = derive_conic(case2_spec());
    r.add("case2", registry_lookup("4L_{3,1}").conic.to_string(), c2.to_string());
    const Conic printed_expansion(Rational(25, 9), Rational(22, 3), Rational(121, 25), -2, Rational(-34, 25),
                                  Rational(9, 25));
    Outcome o = suite_outcome(r, seconds_since(t0));
    if (c2 != printed_expansion)
        o.detail += "; flagged: case2 expanded print carries xy 22/3, the tabulated 4L_{3,1} and the solved chain give 10/3";
    return o;
}

Outcome sequences() {
    const auto t0 = Clock::now();
    const Report r = verify_sequences(limits::kSequenceMaxN);
    return suite_outcome(r, seconds_since(t0));
}

Outcome parabolic_area() {
    const Rational exact = parabolic_region_area();
    const double mc = area_estimate(1, limits::kAreaSamples, limits::kAreaSeed);
    const bool exact_ok = exact == Rational(3, 4);
    const bool mc_ok = std::abs(mc - limits::kAreaTarget) <= limits::kAreaTolerance;
    return {exact_ok && mc_ok, "exact area " + exact.to_string() + " (target 3/4), Monte-Carlo " + fmt(mc, 4) +
                                   " with " + std::to_string(limits::kAreaSamples) + " samples (target " +
                                   fmt(limits::kAreaTarget) + " +/- " + fmt(limits::kAreaTolerance) + ")"};
}

Outcome chart() {
    ChartSpec spec;
    spec.width = spec.height = limits::kChartSize;
    spec.bit_exact = true;
    spec.workers = 1;
    auto t0 = Clock::now();
    const Image single = render_chart(spec);
    const double t1 = seconds_since(t0);
    spec.workers = 8;
    t0 = Clock::now();
    const Image eight = render_chart(spec);
    const double t8 = seconds_since(t0);
    const bool same = single.bytes() == eight.bytes();
    const int g600 = single.at(600, 600).r;
    const int g200 = single.at(200, 200).r;
    const bool ok = same && t1 < limits::kChartSingleSeconds && t8 < limits::kChartEightSeconds && g600 == 30 &&
                    g200 == 60;
    return {ok, "1 worker " + fmt(t1) + " s, 8 workers " + fmt(t8) + " s, " + (same ? "byte-identical" : "DIFFER") +
                    ", (600,600)=" + std::to_string(g600) + ", (200,200)=" + std::to_string(g200)};
}

Outcome probes() {
    const auto t0 = Clock::now();
    const Report r = verify_probes(limits::kProbeRows, Rational(1, limits::kProbeEpsilonDenominator));
    return suite_outcome(r, seconds_since(t0));
}

Outcome barycentric_identities() {
    const auto t0 = Clock::now();
    const Report r = verify_barycentric(limits::kBarycentricMaxN);
    return suite_outcome(r, seconds_since(t0));
}

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, "worked depth example", worked_example},
        {2, "discontinuity table", discontinuity_table},
        {3, "golden divergence", golden_divergence},
        {4, "corona structure, rows <= 6", corona_structure},
        {5, "equation registry and derivations", registry_and_derivations},
        {6, "sequence identities", sequences},
        {7, "parabolic area", parabolic_area},
        {8, "bit-exact chart", chart},
        {9, "tangency probes", probes},
        {10, "barycentric identities", barycentric_identities},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    int only = 0;
    app.add_option("--criterion", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);

    int failed = 0;
    for (const auto& c : criteria()) {
        if (only != 0 && c.id != only) continue;
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << ": " << o.detail << std::endl;
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
