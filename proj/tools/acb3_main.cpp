// Command-line front end: classify / curvature / construct / verify.
//
// Exit codes: 0 success, 1 input or parameter error, 2 input is not a Lie
// algebra, 3 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "acb3/classes.hpp"
#include "acb3/errors.hpp"
#include "acb3/families.hpp"
#include "acb3/io.hpp"
#include "acb3/rational.hpp"
#include "acb3/structure_constants.hpp"
#include "acb3/verify.hpp"

namespace {

using namespace acb3;

ClassId class_from_name(const std::string& name) {
    if (name == "F1") return ClassId::F1;
    if (name == "F4") return ClassId::F4;
    if (name == "F5") return ClassId::F5;
    if (name == "F8") return ClassId::F8;
    if (name == "F9") return ClassId::F9;
    if (name == "F10") return ClassId::F10;
    if (name == "F11") return ClassId::F11;
    throw InvalidSpec("unknown construction '" + name +
                      "' (expected F1, F4, F5, F8, F9, F10, F11 or example)");
}

struct ConstructArgs {
    std::string target;  // class name or "example"
    std::string alpha = "0";
    std::string beta = "0";
    std::string a1 = "0";
    std::string a2 = "0";
};

StructureConstants build_constants(const ConstructArgs& args) {
    if (args.target == "example")
        return construct_example({parse_rational(args.a1), parse_rational(args.a2)});
    return construct_class_family({class_from_name(args.target),
                                   parse_rational(args.alpha),
                                   parse_rational(args.beta)});
}

struct AnalysisArgs {
    std::string input_path;  // empty: standard input (unless constructing)
    ConstructArgs construct;
    bool use_construct = false;
    std::string mode;       // optional override: "exact" | "float"
    std::string tolerance;  // optional override, float mode only
    std::string format = "pretty";
};

std::string read_input_text(const std::string& path) {
    std::ostringstream text;
    if (path.empty()) {
        text << std::cin.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw ParseError("cannot read input file '" + path + "'");
        text << file.rdbuf();
    }
    return text.str();
}

InputDocument resolve_document(const AnalysisArgs& args) {
    InputDocument doc;
    if (args.use_construct) {
        doc = document_from_constants(build_constants(args.construct), Mode::Exact,
                                      Rational(0));
    } else {
        doc = parse_input_document(read_input_text(args.input_path));
    }
    if (!args.mode.empty()) {
        doc.mode = args.mode == "float" ? Mode::Float : Mode::Exact;
        if (doc.mode == Mode::Exact) doc.tolerance = 0;
    }
    if (!args.tolerance.empty()) {
        if (doc.mode != Mode::Float)
            throw ParseError("--tolerance applies to float mode only");
        Rational tol = parse_rational(args.tolerance);
        if (tol < 0) throw ParseError("tolerance must be non-negative");
        doc.tolerance = tol;
    }
    return doc;
}

int run_analysis(const AnalysisArgs& args, bool include_curvature) {
    InputDocument doc = resolve_document(args);
    StructureConstants constants = to_structure_constants(doc);
    AnalysisReport report = analyze(constants, tolerance_of(doc));
    std::cout << (args.format == "json" ? render_json(report, include_curvature)
                                        : render_pretty(report, include_curvature));
    return report.lie_algebra ? 0 : 2;
}

int run_construct(const ConstructArgs& args, const std::string& mode,
                  const std::string& tolerance) {
    Mode m = mode == "float" ? Mode::Float : Mode::Exact;
    Rational tol(0);
    if (!tolerance.empty()) {
        if (m != Mode::Float)
            throw ParseError("--tolerance applies to float mode only");
        tol = parse_rational(tolerance);
        if (tol < 0) throw ParseError("tolerance must be non-negative");
    }
    std::cout << emit_input_document(
        document_from_constants(build_constants(args), m, tol));
    return 0;
}

std::vector<Rational> parse_grid(const std::string& csv) {
    std::vector<Rational> grid;
    std::string item;
    std::istringstream stream(csv);
    while (std::getline(stream, item, ',')) {
        const auto begin = item.find_first_not_of(" \t");
        if (begin == std::string::npos)
            throw ParseError("empty value in --grid list");
        const auto end = item.find_last_not_of(" \t");
        grid.push_back(parse_rational(item.substr(begin, end - begin + 1)));
    }
    if (grid.empty()) throw ParseError("--grid list is empty");
    return grid;
}

int run_verification(const std::string& grid_csv, std::uint64_t seeds,
                     bool corrupt) {
    VerifyOptions options;
    if (!grid_csv.empty()) options.grid = parse_grid(grid_csv);
    options.seeds = seeds;
    options.corrupt_expected = corrupt;

    VerifyResult result = run_verify(options);
    std::size_t passed = 0;
    for (const CheckOutcome& check : result.checks) {
        if (check.pass) {
            ++passed;
            std::cout << "[PASS] " << check.name << "\n";
        } else {
            std::cout << "[FAIL] " << check.name << ": " << check.detail << "\n";
        }
    }
    for (const Discrepancy& d : result.documented)
        std::cout << "documented-discrepancy [" << d.id << "]: " << d.finding
                  << "\n";
    std::cout << "verification: " << passed << "/" << result.checks.size()
              << " checks passed\n";
    return result.all_pass() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Three-dimensional Lie algebras with an almost contact B-metric "
        "structure: classification, curvature, and self-verification"};
    app.require_subcommand(1);

    AnalysisArgs classify_args, curvature_args;
    auto add_analysis_options = [](CLI::App* cmd, AnalysisArgs& args) {
        CLI::Option* input =
            cmd->add_option("--input", args.input_path,
                            "Input document path (default: standard input)");
        CLI::Option* construct =
            cmd->add_option("--construct", args.construct.target,
                            "Construct the input instead of reading it: F1, F4, "
                            "F5, F8, F9, F10, F11 or example");
        cmd->add_option("--alpha", args.construct.alpha,
                        "Family parameter alpha (with --construct)");
        cmd->add_option("--beta", args.construct.beta,
                        "Family parameter beta (with --construct F1/F11)");
        cmd->add_option("--a1", args.construct.a1,
                        "Example parameter a1 (with --construct example)");
        cmd->add_option("--a2", args.construct.a2,
                        "Example parameter a2 (with --construct example)");
        cmd->add_option("--mode", args.mode, "Arithmetic mode")
            ->check(CLI::IsMember({"exact", "float"}));
        cmd->add_option("--tolerance", args.tolerance,
                        "Comparison tolerance (float mode only, default 1e-9)");
        cmd->add_option("--format", args.format, "Output format")
            ->check(CLI::IsMember({"json", "pretty"}));
        input->excludes(construct);
        construct->excludes(input);
        return construct;
    };

    CLI::App* classify = app.add_subcommand(
        "classify", "Classify an algebra: membership, parameters, Lee forms, "
                    "special structures");
    CLI::Option* classify_construct = add_analysis_options(classify, classify_args);

    CLI::App* curvature = app.add_subcommand(
        "curvature", "Full report including the Levi-Civita curvature suite");
    CLI::Option* curvature_construct =
        add_analysis_options(curvature, curvature_args);

    ConstructArgs construct_args;
    std::string construct_mode = "exact", construct_tolerance;
    CLI::App* construct = app.add_subcommand(
        "construct", "Emit an input document for a one-class family or the "
                     "two-parameter worked example");
    construct
        ->add_option("target", construct_args.target,
                     "F1, F4, F5, F8, F9, F10, F11 or example")
        ->required();
    construct->add_option("--alpha", construct_args.alpha, "Family parameter alpha");
    construct->add_option("--beta", construct_args.beta,
                          "Family parameter beta (F1/F11 only)");
    construct->add_option("--a1", construct_args.a1, "Example parameter a1");
    construct->add_option("--a2", construct_args.a2, "Example parameter a2");
    construct->add_option("--mode", construct_mode, "Arithmetic mode of the document")
        ->check(CLI::IsMember({"exact", "float"}));
    construct->add_option("--tolerance", construct_tolerance,
                          "Tolerance recorded in the document (float mode only)");

    std::string grid_csv;
    std::uint64_t seeds = 100;
    bool corrupt = false;
    CLI::App* verify = app.add_subcommand(
        "verify", "Run the full invariant suite over a parameter grid and "
                  "random algebras");
    verify->add_option("--grid", grid_csv,
                       "Comma-separated rational grid (default "
                       "-2,-1,-1/2,1/2,1,2)");
    verify->add_option("--seed,--seeds", seeds, "Number of random-algebra seeds");
    verify->add_flag("--self-test-corrupt", corrupt,
                     "Corrupt one expected table entry (harness self-test)")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (classify->parsed()) {
            classify_args.use_construct = static_cast<bool>(*classify_construct);
            return run_analysis(classify_args, /*include_curvature=*/false);
        }
        if (curvature->parsed()) {
            curvature_args.use_construct = static_cast<bool>(*curvature_construct);
            return run_analysis(curvature_args, /*include_curvature=*/true);
        }
        if (construct->parsed())
            return run_construct(construct_args, construct_mode,
                                 construct_tolerance);
        return run_verification(grid_csv, seeds, corrupt);
    } catch (const NotALieAlgebra& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
