#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "fracint/cli/runner.hpp"
#include "fracint/cli/schema.hpp"

int main(int argc, char** argv) {
    using namespace fracint::cli;

    CLI::App app{"fracint: Wiener integrals for fractional processes, experiment runner"};
    app.footer("CSV columns:\n" + csv_columns_text());
    app.require_subcommand(1);

    RunOptions opt;
    unsigned threads = 1;
    app.add_option("--threads", threads, "worker threads (results do not depend on it)")->check(CLI::PositiveNumber);
    app.add_option("--out", opt.out_dir, "output directory for CSV, summary.json and manifest.json");
    app.add_flag("--strict", opt.strict, "treat warnings as assertion failures");

    std::string config_path;
    auto* run_cmd = app.add_subcommand("run", "execute an experiment config");
    run_cmd->add_option("config", config_path, "path of the key = value config file")->required();
    // Global flags are also accepted after the subcommand.
    run_cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    run_cmd->add_option("--out", opt.out_dir, "output directory");
    run_cmd->add_flag("--strict", opt.strict, "treat warnings as assertion failures");

    auto* list_cmd = app.add_subcommand("list-experiments", "print experiment kinds and their required keys");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInvalidConfig;
    }

    if (*list_cmd) {
        std::cout << list_experiments_text();
        return kExitOk;
    }
    opt.threads = threads;
    try {
        return run(config_path, opt, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitAssertion;
    }
}
