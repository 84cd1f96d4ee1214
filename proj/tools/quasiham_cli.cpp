#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "quasiham/cli.hpp"

int main(int argc, char** argv) {
    namespace qc = quasiham::cli;
    qc::RunConfig cfg;
    std::string out_path;

    CLI::App app{"Perfect Hamming codes over quasifields"};
    app.require_subcommand(1, 1);
    for (const auto& name : qc::commands()) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--algebra", cfg.algebra, "preset name or JSON spec path")->capture_default_str();
        sub->add_option("--m", cfg.m, "row count")->capture_default_str();
        sub->add_option("--m2", cfg.m2, "larger row count for distinguish (default m+1)");
        sub->add_option("--pivots", cfg.pivots, "comma-separated pivot literals");
        sub->add_option("--mode", cfg.mode, "exhaustive | structural | sampled");
        sub->add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
        sub->add_option("--budget", cfg.budget, "exhaustive enumeration budget")->capture_default_str();
        sub->add_option("--trials", cfg.trials, "sample count");
        sub->add_option("--in", cfg.in, "input file (vector or column list)");
        sub->add_option("--out", out_path, "write the report here instead of stdout");
        sub->add_option("--jobs", cfg.jobs, "worker threads for audits")->capture_default_str()->check(CLI::PositiveNumber);
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : qc::usage;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    const auto result = qc::run(cfg);
    if (out_path.empty()) {
        std::cout << result.report;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return qc::usage;
        }
        out << result.report;
    }
    if (result.exit_code == qc::usage) std::cerr << "see --help\n";
    return result.exit_code;
}
