// Command-line surface for flat-norm computation: compute, distance,
// sweep and selftest subcommands over PGM shapes and JSON chains.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flatnorm/analysis.hpp"
#include "flatnorm/chain_json.hpp"
#include "flatnorm/errors.hpp"
#include "flatnorm/flatnorm_graphcut.hpp"
#include "flatnorm/flatnorm_lp.hpp"
#include "flatnorm/pgm.hpp"
#include "flatnorm/result_io.hpp"
#include "flatnorm/selftest.hpp"
#include "flatnorm/shape_chain.hpp"

namespace {

using namespace flatnorm;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitResource = 3;

bool g_quiet = false;

void log_info(const std::string& line) {
    if (!g_quiet) std::cerr << "[info] " << line << "\n";
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string stem_of(const std::string& path) {
    std::string p = path;
    auto slash = p.find_last_of('/');
    std::string dir = slash == std::string::npos ? "" : p.substr(0, slash + 1);
    std::string name = slash == std::string::npos ? p : p.substr(slash + 1);
    auto dot = name.find_last_of('.');
    if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
    return dir + name;
}

void emit(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    write_file_atomic(path, content);
}

/// "a:b:step" ranges (inclusive of b up to rounding) or "a,b,c" lists.
std::vector<double> parse_lambda_list(const std::string& text) {
    std::vector<double> out;
    auto parse_num = [](const std::string& s) {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("bad number in lambda list: " + s);
        return v;
    };
    if (text.find(':') != std::string::npos) {
        std::istringstream in(text);
        std::string a, b, c;
        if (!std::getline(in, a, ':') || !std::getline(in, b, ':') || !std::getline(in, c))
            throw std::invalid_argument("lambda range must be start:stop:step");
        double start = parse_num(a), stop = parse_num(b), step = parse_num(c);
        if (!(step > 0.0)) throw std::invalid_argument("lambda range step must be > 0");
        for (int i = 0;; ++i) {
            double v = start + i * step;
            if (v > stop + 1e-12 * std::max(1.0, std::abs(stop))) break;
            out.push_back(v);
        }
    } else {
        std::istringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) out.push_back(parse_num(item));
    }
    return out;
}

struct LoadedInput {
    std::optional<BinaryShape> shape;  // PGM inputs
    std::optional<Chain> chain;        // JSON chain inputs
};

LoadedInput load_input(const std::string& path, int threshold, double spacing) {
    LoadedInput in;
    if (ends_with(path, ".json")) {
        Chain c = load_chain_json(path);
        if (c.dim() != 1)
            throw std::invalid_argument("chain input must be a 1-chain, got dim " +
                                        std::to_string(c.dim()));
        in.chain = std::move(c);
    } else {
        in.shape = load_pgm(path, threshold, spacing);
    }
    return in;
}

struct CommonOpts {
    std::string method = "auto"; // lp | graphcut | both | auto
    std::string stencil = "N4";
    int threshold = 128;
    double spacing = 1.0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool allow_both) {
    cmd->add_option("--method", o.method,
                    allow_both ? "solver: lp|graphcut|both (default: by input type)"
                               : "solver: lp|graphcut (default: by input type)");
    cmd->add_option("--stencil", o.stencil, "graph-cut neighborhood: N4|N8|N16");
    cmd->add_option("--threshold", o.threshold, "PGM foreground threshold (default 128)")
        ->check(CLI::Range(0, 255));
    cmd->add_option("--spacing", o.spacing, "physical pixel spacing for PGM inputs");
}

void validate_common(const CommonOpts& o, bool allow_both,
                     std::vector<std::string>& problems) {
    if (o.method != "auto" && o.method != "lp" && o.method != "graphcut" &&
        !(allow_both && o.method == "both"))
        problems.push_back("unknown --method " + o.method);
    if (o.stencil != "N4" && o.stencil != "N8" && o.stencil != "N16")
        problems.push_back("unknown --stencil " + o.stencil);
    if (!(o.spacing > 0.0)) problems.push_back("--spacing must be > 0");
}

void reject_problems(const std::vector<std::string>& problems) {
    if (problems.empty()) return;
    std::string msg = "invalid options:";
    for (const auto& p : problems) msg += "\n  - " + p;
    throw std::invalid_argument(msg);
}

int cmd_compute(const std::string& input, double lambda, CommonOpts opts,
                std::string out_path, std::string svg_path) {
    std::vector<std::string> problems;
    validate_common(opts, true, problems);
    if (!(lambda > 0.0)) problems.push_back("--lambda must be > 0");
    reject_problems(problems);

    LoadedInput in = load_input(input, opts.threshold, opts.spacing);
    std::string method = opts.method;
    if (method == "auto") method = in.chain ? "lp" : "graphcut";
    if (in.chain && method != "lp")
        throw std::invalid_argument("chain JSON inputs support --method lp only");

    if (out_path.empty()) out_path = stem_of(input) + ".flatnorm.json";

    std::optional<FlatNormResult> lp_result, gc_result;
    if (method == "lp" || method == "both") {
        if (in.chain) {
            lp_result = flatnorm_lp(in.chain->complex(), *in.chain, lambda);
        } else {
            ComplexPtr k = complex_for(*in.shape);
            lp_result = flatnorm_lp(k, boundary_chain(*in.shape, k), lambda);
        }
        log_info("lp value=" + fmt_g12(lp_result->value) +
                 " pivots=" + std::to_string(lp_result->iterations));
    }
    if (method == "graphcut" || method == "both") {
        NeighborhoodStencil st =
            make_stencil(stencil_from_name(opts.stencil), in.shape->spacing);
        gc_result = flatnorm_graphcut(*in.shape, lambda, st);
        log_info("graphcut stencil=" + opts.stencil +
                 " value=" + fmt_g12(gc_result->value));
    }

    const FlatNormResult& primary = lp_result ? *lp_result : *gc_result;
    std::optional<AgreementReport> agreement;
    if (lp_result && gc_result) {
        agreement = AgreementReport{lp_result->value, gc_result->value,
                                    std::abs(lp_result->value - gc_result->value)};
        log_info("agreement delta=" + fmt_g12(agreement->delta));
    }
    emit(out_path, result_to_json(primary, agreement ? &*agreement : nullptr));
    if (!svg_path.empty()) emit(svg_path, result_to_svg(primary));
    return kExitOk;
}

int cmd_distance(const std::string& input_a, const std::string& input_b,
                 double lambda, CommonOpts opts, std::string out_path,
                 std::string svg_path) {
    std::vector<std::string> problems;
    validate_common(opts, false, problems);
    if (!(lambda > 0.0)) problems.push_back("--lambda must be > 0");
    reject_problems(problems);

    BinaryShape a = load_pgm(input_a, opts.threshold, opts.spacing);
    BinaryShape b = load_pgm(input_b, opts.threshold, opts.spacing);
    Method method = opts.method == "lp" ? Method::Lp : Method::Graphcut;
    FlatNormResult r =
        flat_distance(a, b, lambda, method, stencil_from_name(opts.stencil));
    log_info("distance value=" + fmt_g12(r.value));

    if (out_path.empty()) out_path = stem_of(input_a) + ".distance.json";
    emit(out_path, result_to_json(r));
    if (!svg_path.empty()) emit(svg_path, result_to_svg(r));
    return kExitOk;
}

int cmd_sweep(const std::string& input, const std::string& lambdas_text,
              CommonOpts opts, std::string out_path, std::string json_path) {
    std::vector<std::string> problems;
    validate_common(opts, false, problems);
    std::vector<double> lambdas;
    try {
        lambdas = parse_lambda_list(lambdas_text);
    } catch (const std::invalid_argument& e) {
        problems.push_back(e.what());
    }
    reject_problems(problems);

    LoadedInput in = load_input(input, opts.threshold, opts.spacing);
    std::string method = opts.method;
    if (method == "auto") method = in.chain ? "lp" : "graphcut";
    if (in.chain && method != "lp")
        throw std::invalid_argument("chain JSON inputs support --method lp only");

    SweepCurve curve =
        in.chain ? lambda_sweep(*in.chain, lambdas, Method::Lp)
                 : lambda_sweep(*in.shape, lambdas, method_from_name(method),
                                stencil_from_name(opts.stencil));
    log_info("sweep points=" + std::to_string(curve.points.size()));

    if (out_path.empty()) out_path = stem_of(input) + ".sweep.csv";
    emit(out_path, sweep_to_csv(curve));
    if (!json_path.empty()) emit(json_path, sweep_to_json(curve));
    return kExitOk;
}

int cmd_selftest(std::uint64_t seed, std::string out_path) {
    SelftestReport report = run_selftest(seed);
    std::string table = report.table();
    if (out_path.empty()) {
        std::cout << table;
    } else {
        emit(out_path, table);
    }
    return report.all_ok() ? kExitOk : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"flat-norm decompositions, distances and scale sweeps on planar shapes"};
    app.require_subcommand(1);
    app.add_flag("--quiet", g_quiet, "suppress informational stderr logging");

    std::string input, input_b, out_path, svg_path, json_path, lambdas_text;
    double lambda = 1.0;
    std::uint64_t seed = 42;
    CommonOpts opts;

    auto* compute = app.add_subcommand(
        "compute", "flat norm of one shape (PGM) or 1-chain (JSON)");
    compute->add_option("--input", input, "input .pgm or chain .json")->required();
    compute->add_option("--lambda", lambda, "scale parameter (> 0)")->required();
    compute->add_option("--out", out_path, "result JSON path, '-' for stdout");
    compute->add_option("--svg", svg_path, "also render the decomposition as SVG");
    add_common(compute, opts, true);

    auto* distance = app.add_subcommand("distance", "flat-norm distance between two PGM shapes");
    distance->add_option("a", input, "first shape (PGM)")->required();
    distance->add_option("b", input_b, "second shape (PGM)")->required();
    distance->add_option("--lambda", lambda, "scale parameter (> 0)")->required();
    distance->add_option("--out", out_path, "result JSON path, '-' for stdout");
    distance->add_option("--svg", svg_path, "also render the decomposition as SVG");
    add_common(distance, opts, false);

    auto* sweep = app.add_subcommand("sweep", "flat norm over a list of lambdas");
    sweep->add_option("--input", input, "input .pgm or chain .json")->required();
    sweep->add_option("--lambdas", lambdas_text,
                      "start:stop:step range or comma list, strictly increasing")
        ->required();
    sweep->add_option("--out", out_path, "CSV path, '-' for stdout");
    sweep->add_option("--json", json_path, "also write the curve as JSON");
    add_common(sweep, opts, false);

    auto* selftest = app.add_subcommand("selftest", "run the built-in invariant suites");
    selftest->add_option("--seed", seed, "RNG seed for the randomized suites");
    selftest->add_option("--out", out_path, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (compute->parsed())
            return cmd_compute(input, lambda, opts, out_path, svg_path);
        if (distance->parsed())
            return cmd_distance(input, input_b, lambda, opts, out_path, svg_path);
        if (sweep->parsed())
            return cmd_sweep(input, lambdas_text, opts, out_path, json_path);
        if (selftest->parsed()) return cmd_selftest(seed, out_path);
    } catch (const ResourceError& e) {
        std::cerr << "[error] " << e.what() << "\n";
        return kExitResource;
    } catch (const ParseError& e) {
        std::cerr << "[error] " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "[error] " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "[error] " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
