// apollo: command-line workbench for the Apollonian depth function.
//
// Exit codes: 0 success, 1 verification failure, 2 cap reached,
// 64 usage error, 74 I/O error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "apollo/area.hpp"
#include "apollo/arrangement.hpp"
#include "apollo/chart.hpp"
#include "apollo/conic.hpp"
#include "apollo/corona.hpp"
#include "apollo/depth.hpp"
#include "apollo/descartes.hpp"
#include "apollo/dust.hpp"
#include "apollo/errors.hpp"
#include "apollo/registry.hpp"
#include "apollo/serialize.hpp"
#include "apollo/verify.hpp"

namespace {

using namespace apollo;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kCapReached = 2;
constexpr int kUsage = 64;
constexpr int kIo = 74;

void emit(const json& j, const std::string& out_path) {
    const std::string text = j.dump(2) + "\n";
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw IoError(out_path, "cannot open for writing");
    f << text;
}

void emit_csv(const CsvRow& header, const std::vector<CsvRow>& rows, const std::string& out_path) {
    if (out_path.empty() || out_path == "-")
        std::cout << encode_csv(header, rows);
    else
        write_csv(header, rows, out_path);
}

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError(path, "cannot open for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string extension_format(const std::string& path, const std::string& fallback) {
    const auto dot = path.rfind('.');
    if (dot == std::string::npos) return fallback;
    return path.substr(dot + 1);
}

struct DepthArgs {
    std::vector<std::string> values;
    bool exact = false;
    bool use_float = false;
    bool golden = false;
    int bits = 0;  // 0: binary64, or the golden-seed precision for --golden
    int cap = kDefaultCap;
    bool trace = false;
};

template <class T>
json depth_report(const DepthResult<T>& r, const std::string& mode, const json& input) {
    return {{"input", input}, {"mode", mode}, {"result", to_json(r)}};
}

int run_depth(const DepthArgs& a) {
    if (a.golden) {
        const DepthOptions opt{a.cap, a.trace};
        json input = "golden";
        const int bits = a.bits > 0 ? a.bits : static_cast<int>(golden_precision_bits(a.cap));
        if (bits == 53) {
            const auto r = depth_float(golden_seed(), opt);
            std::cout << depth_report(r, "float", input).dump(2) << "\n";
            return r.finite() ? kOk : kCapReached;
        }
        const auto r = depth_float(golden_seed(bits), opt);
        std::cout << depth_report(r, "float-" + std::to_string(bits), input).dump(2) << "\n";
        return r.finite() ? kOk : kCapReached;
    }
    if (a.values.size() != 2 && a.values.size() != 3) throw UsageError("depth takes a b c, or x y");
    std::vector<Rational> q;
    for (const auto& v : a.values) q.push_back(Rational::parse(v));
    Tricycle<Rational> t = q.size() == 3 ? Tricycle<Rational>{q[0], q[1], q[2]} : Tricycle<Rational>{Rational(1), q[0], q[1]};
    json input = json::array();
    for (const auto& v : t) input.push_back(v.to_string());
    const DepthOptions opt{a.cap, a.trace};
    if (!a.use_float) {
        const auto r = depth(t, opt);
        std::cout << depth_report(r, "exact", input).dump(2) << "\n";
        return r.finite() ? kOk : kCapReached;
    }
    if (a.bits == 0 || a.bits == 53) {
        const auto r = depth_float<double>({t[0].to_double(), t[1].to_double(), t[2].to_double()}, opt);
        std::cout << depth_report(r, "float", input).dump(2) << "\n";
        return r.finite() ? kOk : kCapReached;
    }
    const auto r = depth_float<BigFloat>({BigFloat(t[0], a.bits), BigFloat(t[1], a.bits), BigFloat(t[2], a.bits)}, opt);
    std::cout << depth_report(r, "float-" + std::to_string(a.bits), input).dump(2) << "\n";
    return r.finite() ? kOk : kCapReached;
}

struct ChartArgs {
    int size = 0;
    int width = 1000, height = 1000;
    std::string mode = "depth";
    std::string transfer = "gray30";
    std::vector<double> window;
    int cap = kDefaultCap;
    bool bit_exact = false;
    bool strict = false;
    double range = 0;
    int workers = 0;
    std::string out = "chart.ppm";
    std::string format;
};

int run_chart(const ChartArgs& a) {
    ChartSpec spec;
    spec.width = a.size > 0 ? a.size : a.width;
    spec.height = a.size > 0 ? a.size : a.height;
    spec.mode = parse_chart_mode(a.mode);
    spec.transfer = parse_transfer(a.transfer);
    if (!a.window.empty()) {
        if (a.window.size() != 4) throw UsageError("--window takes x0,y0,x1,y1");
        spec.window = {a.window[0], a.window[1], a.window[2], a.window[3]};
    }
    spec.cap = a.cap;
    spec.bit_exact = a.bit_exact;
    spec.strict_boundary = a.strict;
    spec.range = a.range;
    spec.workers = a.workers > 0 ? a.workers : workers_from_env();
    spec.validate();
    const auto t0 = std::chrono::steady_clock::now();
    const Image img = render_chart(spec);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::string fmt = a.format.empty() ? extension_format(a.out, "ppm") : a.format;
    if (fmt == "png")
        write_png(img, a.out);
    else if (fmt == "ppm")
        write_ppm(img, a.out);
    else
        throw UsageError("chart format must be ppm or png");
    std::cout << "wrote " << a.out << " (" << spec.width << "x" << spec.height << ", " << to_string(spec.mode)
              << (spec.bit_exact ? ", bit-exact" : "") << ", cap " << spec.cap << ", " << spec.workers
              << " worker(s), " << secs << " s)\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Apollonian depth workbench"};
    app.require_subcommand(1);

    // depth
    DepthArgs da;
    auto* depth_cmd = app.add_subcommand("depth", "Apollonian depth of a tricycle (a b c) or of (1, x, y)");
    depth_cmd->add_option("values", da.values, "curvatures as p/q or decimals");
    auto* exact_flag = depth_cmd->add_flag("--exact", da.exact, "exact arithmetic in Q[sqrt(ab+bc+ca)] (default)");
    auto* float_flag = depth_cmd->add_flag("--float", da.use_float, "floating point");
    exact_flag->excludes(float_flag);
    depth_cmd->add_flag("--golden", da.golden, "use the golden seed (float mode)");
    depth_cmd->add_option("--bits", da.bits, "float precision in bits (default binary64; golden seed: 64 + 2 cap)")->check(CLI::Range(2, 1 << 20));
    depth_cmd->add_option("--cap", da.cap, "step cap")->check(CLI::PositiveNumber);
    depth_cmd->add_flag("--trace", da.trace, "include the trajectory");

    // completions
    std::vector<std::string> comp_values;
    bool comp_float = false;
    auto* comp_cmd = app.add_subcommand("completions", "the two disks completing a tricycle");
    comp_cmd->add_option("values", comp_values)->expected(3)->required();
    comp_cmd->add_flag("--float", comp_float);

    // chart
    ChartArgs ca;
    auto* chart_cmd = app.add_subcommand("chart", "render a depth, size, barycentric or squared chart");
    chart_cmd->add_option("--size", ca.size, "square image size");
    chart_cmd->add_option("--width", ca.width);
    chart_cmd->add_option("--height", ca.height);
    chart_cmd->add_option("--mode", ca.mode)->check(CLI::IsMember({"depth", "size", "barycentric", "squared"}));
    chart_cmd->add_option("--transfer", ca.transfer)
        ->check(CLI::IsMember({"gray30", "gray30-wrap", "clamp-linear", "log", "sin", "cyclic-palette"}));
    chart_cmd->add_option("--window", ca.window, "x0,y0,x1,y1")->delimiter(',');
    chart_cmd->add_option("--cap", ca.cap)->check(CLI::PositiveNumber);
    chart_cmd->add_flag("--bitexact", ca.bit_exact, "reference integer-seed loop");
    chart_cmd->add_flag("--strict-boundary", ca.strict, "zero entries give depth 0");
    chart_cmd->add_option("--range", ca.range, "full-scale level for clamp-linear/log");
    chart_cmd->add_option("--workers", ca.workers, "threads (default APOLLO_WORKERS or 1)");
    chart_cmd->add_option("-o,--output", ca.out);
    chart_cmd->add_option("--format", ca.format)->check(CLI::IsMember({"ppm", "png"}));

    // section
    std::string sec_x = "1/3", sec_from = "0", sec_to, sec_out;
    int sec_samples = 1000, sec_cap = kDefaultCap;
    auto* sec_cmd = app.add_subcommand("section", "exact depth along a vertical segment, as CSV");
    sec_cmd->add_option("--x", sec_x);
    sec_cmd->add_option("--y-from", sec_from);
    sec_cmd->add_option("--y-to", sec_to, "default: the parabola edge (4 - 2 sqrt 3)/3 for x = 1/3, else 1");
    sec_cmd->add_option("--samples", sec_samples)->check(CLI::Range(2, 100000000));
    sec_cmd->add_option("--cap", sec_cap)->check(CLI::PositiveNumber);
    sec_cmd->add_option("-o,--output", sec_out);

    // corona / parabola-corona
    int cor_rows = 4;
    std::string cor_format = "json", cor_out;
    auto* cor_cmd = app.add_subcommand("corona", "x-axis corona ellipses E[p,m]");
    cor_cmd->add_option("--max-row", cor_rows)->check(CLI::PositiveNumber);
    cor_cmd->add_option("--format", cor_format)->check(CLI::IsMember({"json", "csv"}));
    cor_cmd->add_option("-o,--output", cor_out);
    int pc_rows = 3;
    std::string pc_format = "json", pc_out;
    auto* pc_cmd = app.add_subcommand("parabola-corona", "parabolic corona F[p,q] with tangency points");
    pc_cmd->add_option("--max-row", pc_rows)->check(CLI::PositiveNumber);
    pc_cmd->add_option("--format", pc_format)->check(CLI::IsMember({"json", "csv"}));
    pc_cmd->add_option("-o,--output", pc_out);

    // derive
    std::string der_file, der_case;
    bool der_print_spec = false;
    auto* der_cmd = app.add_subcommand("derive", "conic of a disk arrangement");
    auto* der_file_opt = der_cmd->add_option("spec", der_file, "arrangement JSON file");
    auto* der_case_opt = der_cmd->add_option("--case", der_case, "built-in fixture")
                             ->check(CLI::IsMember({"case1", "case1_5", "case2"}));
    der_file_opt->excludes(der_case_opt);
    der_cmd->add_flag("--print-spec", der_print_spec, "print the arrangement instead of deriving");

    // registry
    std::string reg_label, reg_out;
    auto* reg_cmd = app.add_subcommand("registry", "tabulated plateau equations");
    reg_cmd->add_option("--label", reg_label);
    reg_cmd->add_option("-o,--output", reg_out);

    // dust
    double dust_bound = 15;
    std::string dust_format = "csv", dust_out;
    auto* dust_cmd = app.add_subcommand("dust", "moduli points of the window packing's tricycles");
    dust_cmd->add_option("--bound", dust_bound, "curvature bound")->check(CLI::PositiveNumber);
    dust_cmd->add_option("--format", dust_format)->check(CLI::IsMember({"json", "csv"}));
    dust_cmd->add_option("-o,--output", dust_out);

    // area
    int area_depth = 1, area_cap = kDefaultCap;
    std::int64_t area_samples = 1000000;
    std::uint64_t area_seed = 42;
    auto* area_cmd = app.add_subcommand("area", "Monte-Carlo area of a depth level set");
    area_cmd->add_option("--depth", area_depth)->check(CLI::NonNegativeNumber);
    area_cmd->add_option("--samples", area_samples)->check(CLI::PositiveNumber);
    area_cmd->add_option("--seed", area_seed);
    area_cmd->add_option("--cap", area_cap)->check(CLI::PositiveNumber);

    // verify
    std::string ver_suite, ver_out;
    int ver_rows = 0, ver_samples = 1000;
    std::string ver_eps = "1e-7";
    std::uint64_t ver_seed = 1;
    auto* ver_cmd = app.add_subcommand("verify", "run an invariant suite");
    ver_cmd->add_option("suite", ver_suite)->required()->check(CLI::IsMember(suite_names()));
    ver_cmd->add_option("--max-row", ver_rows)->check(CLI::PositiveNumber);
    ver_cmd->add_option("--epsilon", ver_eps);
    ver_cmd->add_option("--samples", ver_samples)->check(CLI::PositiveNumber);
    ver_cmd->add_option("--seed", ver_seed);
    ver_cmd->add_option("-o,--output", ver_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*depth_cmd) return run_depth(da);

        if (*comp_cmd) {
            json j;
            if (comp_float) {
                const auto c = completions_float<double>({Rational::parse(comp_values[0]).to_double(),
                                                          Rational::parse(comp_values[1]).to_double(),
                                                          Rational::parse(comp_values[2]).to_double()});
                j = {{"minus", c.minus}, {"plus", c.plus}};
            } else {
                const auto c = completions({Rational::parse(comp_values[0]), Rational::parse(comp_values[1]),
                                            Rational::parse(comp_values[2])});
                j = {{"minus", to_json(c.minus)}, {"plus", to_json(c.plus)}};
            }
            std::cout << j.dump(2) << "\n";
            return kOk;
        }

        if (*chart_cmd) return run_chart(ca);

        if (*sec_cmd) {
            const Rational x0 = Rational::parse(sec_x);
            Rational y_to;
            if (!sec_to.empty())
                y_to = Rational::parse(sec_to);
            else if (x0 == Rational(1, 3))
                y_to = Rational::from_double((4.0 - 2.0 * std::sqrt(3.0)) / 3.0);
            else
                y_to = Rational(1);
            const auto samples = section_profile(x0, Rational::parse(sec_from), y_to, sec_samples, sec_cap);
            emit_csv(section_header(), section_rows(samples), sec_out);
            if (!sec_out.empty()) std::cout << "wrote " << sec_out << " (" << samples.size() << " samples)\n";
            return kOk;
        }

        if (*cor_cmd) {
            const auto entries = x_corona(cor_rows);
            if (cor_format == "csv")
                emit_csv(x_corona_header(), x_corona_rows(entries), cor_out);
            else
                emit(x_corona_to_json(entries), cor_out);
            return kOk;
        }

        if (*pc_cmd) {
            const auto entries = parabolic_corona(pc_rows);
            if (pc_format == "csv")
                emit_csv(parabolic_corona_header(), parabolic_corona_rows(entries), pc_out);
            else
                emit(parabolic_corona_to_json(entries), pc_out);
            return kOk;
        }

        if (*der_cmd) {
            ArrangementSpec spec;
            if (!der_case.empty())
                spec = der_case == "case1" ? case1_spec() : der_case == "case1_5" ? case1_5_spec() : case2_spec();
            else if (!der_file.empty())
                spec = arrangement_from_json(read_text(der_file));
            else
                throw UsageError("derive needs a spec file or --case");
            if (der_print_spec) {
                std::cout << arrangement_to_json(spec) << "\n";
                return kOk;
            }
            const Conic c = derive_conic(spec);
            json j = to_json(c, spec.name);
            j["equation"] = c.to_string();
            if (auto d = display_form(c)) j["display"] = to_json(*d);
            std::cout << j.dump(2) << "\n";
            return kOk;
        }

        if (*reg_cmd) {
            if (!reg_label.empty()) {
                emit(registry_to_json({registry_lookup(reg_label)}).at(0), reg_out);
            } else {
                emit(registry_to_json(appendix_b_registry()), reg_out);
            }
            return kOk;
        }

        if (*dust_cmd) {
            const auto pts = dust_points(window_seed(), dust_bound);
            if (dust_format == "json") {
                json arr = json::array();
                for (const auto& p : pts)
                    arr.push_back({{"tricycle", p.tricycle}, {"x", p.moduli.x}, {"y", p.moduli.y}});
                emit(arr, dust_out);
            } else {
                std::vector<CsvRow> rows;
                for (const auto& p : pts)
                    rows.push_back({std::to_string(p.tricycle[0]), std::to_string(p.tricycle[1]), std::to_string(p.tricycle[2]),
                                    std::to_string(p.moduli.x), std::to_string(p.moduli.y)});
                emit_csv({"a", "b", "c", "x", "y"}, rows, dust_out);
            }
            if (!dust_out.empty()) std::cout << "wrote " << dust_out << " (" << pts.size() << " points)\n";
            return kOk;
        }

        if (*area_cmd) {
            const double a = area_estimate(area_depth, area_samples, area_seed, area_cap);
            std::cout << json{{"depth", area_depth}, {"samples", area_samples}, {"seed", area_seed}, {"area", a}}.dump(2)
                      << "\n";
            return kOk;
        }

        if (*ver_cmd) {
            VerifyOptions opt;
            if (ver_rows > 0) opt.max_row = ver_rows;
            opt.epsilon = Rational::parse(ver_eps);
            opt.samples_per_ellipse = ver_samples;
            opt.seed = ver_seed;
            const Report rep = run_suite(ver_suite, opt);
            emit(rep.to_json(), ver_out);
            if (!rep.passed()) {
                for (const auto& c : rep.checks)
                    if (!c.pass) std::cerr << "FAIL " << c.name << ": expected " << c.expected << ", got " << c.actual << "\n";
                return kVerifyFailed;
            }
            return kOk;
        }
    } catch (const IoError& e) {
        std::cerr << "apollo: " << e.what() << "\n";
        return kIo;
    } catch (const std::invalid_argument& e) {  // ParseError, UsageError
        std::cerr << "apollo: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "apollo: " << e.what() << "\n";
        return kUsage;
    } catch (const ArithmeticError& e) {
        std::cerr << "apollo: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
