#include "dy/runner.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir = ".";
    int max_degree = -1;
    bool equivariant = false;
    std::string suite;
    long long seed = -1;
    int samples = -1;
    std::string field;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_suite) {
    cmd->add_option("--config", args.config_path, "job configuration (JSON)")->required();
    cmd->add_option("--out", args.out_dir, "output directory for report files");
    cmd->add_option("--max-degree", args.max_degree, "override the configured degree cap");
    cmd->add_option("--seed", args.seed, "override the configured sampling seed");
    cmd->add_option("--samples", args.samples, "override the configured sample count");
    cmd->add_option("--field", args.field, "override the ground field ('Q' or 'F<p>')");
    cmd->add_flag("--equivariant", args.equivariant, "restrict to the equivariant subcomplex");
    if (with_suite)
        cmd->add_option("--suite", args.suite, "one of: complex, cup-derivation, weak-comp, "
                                               "recovery, dga, equivariant, graded-commutativity, "
                                               "gerstenhaber");
}

int run(const std::string& command, const CommonArgs& args) {
    dy::Json config;
    {
        std::ifstream in(args.config_path);
        if (!in) {
            std::cerr << "error: cannot read config file '" << args.config_path << "'\n";
            return 2;
        }
        try {
            in >> config;
        } catch (const dy::Json::exception& e) {
            std::cerr << "error: config is not valid JSON: " << e.what() << "\n";
            return 2;
        }
    }
    dy::RunOptions opts;
    if (args.max_degree >= 0) opts.max_degree = args.max_degree;
    if (args.seed >= 0) opts.seed = static_cast<std::uint64_t>(args.seed);
    if (args.samples >= 0) opts.samples = args.samples;
    if (!args.field.empty()) opts.field_override = args.field;
    opts.equivariant = args.equivariant;
    opts.suite = args.suite;

    dy::RunResult result;
    try {
        result = dy::run_command(command, config, opts);
    } catch (const dy::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const dy::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    fs::create_directories(args.out_dir);
    const fs::path report_path = fs::path(args.out_dir) / "report.json";
    {
        std::ofstream out(report_path);
        out << result.report.dump(2) << "\n";
    }
    std::cout << "report: " << report_path.string() << "\n";
    if (!result.betti_csv.empty()) {
        const fs::path csv_path = fs::path(args.out_dir) / "betti.csv";
        std::ofstream out(csv_path);
        out << result.betti_csv;
        std::cout << "betti:  " << csv_path.string() << "\n";
        std::cout << result.betti_csv;
    }
    if (result.report.contains("suites"))
        for (const auto& suite : result.report.at("suites")) {
            std::size_t fails = 0, total = suite.at("results").size();
            for (const auto& entry : suite.at("results"))
                if (entry.at("status") != "pass") ++fails;
            std::cout << (fails ? "FAIL " : "pass ") << suite.at("suite").get<std::string>() << " ("
                      << (total - fails) << "/" << total << ")\n";
        }
    if (result.report.contains("validation"))
        for (const auto& suite : result.report.at("validation")) {
            std::size_t fails = 0, total = suite.at("results").size();
            for (const auto& entry : suite.at("results"))
                if (entry.at("status") != "pass") ++fails;
            std::cout << (fails ? "FAIL " : "pass ") << suite.at("suite").get<std::string>() << " ("
                      << (total - fails) << "/" << total << ")\n";
        }
    std::cout << "status: " << (result.ok ? "pass" : "fail") << "\n";
    return result.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the deformation complex of monoidal functors "
                 "with coalgebra coefficients"};
    app.require_subcommand(1);

    CommonArgs args;
    auto* validate = app.add_subcommand("validate", "check all structure axioms of the input data");
    add_common(validate, args, false);
    auto* betti = app.add_subcommand("betti", "cohomology dimension table");
    add_common(betti, args, false);
    auto* check = app.add_subcommand("check", "run one identity-check suite");
    add_common(check, args, true);
    auto* report = app.add_subcommand("report", "validate, betti table, and every check suite");
    add_common(report, args, false);

    CLI11_PARSE(app, argc, argv);

    if (validate->parsed()) return run("validate", args);
    if (betti->parsed()) return run("betti", args);
    if (check->parsed()) return run("check", args);
    return run("report", args);
}
