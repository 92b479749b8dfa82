#include <CLI11.hpp>

#include <iostream>

#include "nashgrid/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"nashgrid: distributed Nash-equilibrium seeking for energy consumption games"};
    app.require_subcommand(1);

    std::string scenario;
    std::string out_dir;
    bool quiet = false;
    bool verify = false;
    std::string param;
    std::vector<std::string> values;

    auto add_scenario = [&](CLI::App* cmd) {
        cmd->add_option("--scenario", scenario,
                        "scenario file path or bundled name (table1_inner, "
                        "table1_constrained, table1_stubborn)")
            ->required();
        cmd->add_flag("--quiet", quiet, "suppress the report, keep exit codes");
    };

    CLI::App* check = app.add_subcommand("check", "validate a scenario and report diagnostics");
    add_scenario(check);

    CLI::App* solve = app.add_subcommand("solve", "compute the Nash equilibrium with the oracle");
    add_scenario(solve);
    solve->add_flag("--verify", verify, "scan unilateral deviations over a 2001-point grid");

    CLI::App* simulate =
        app.add_subcommand("simulate", "integrate the seeking dynamics and write artifacts");
    add_scenario(simulate);
    simulate->add_option("--out", out_dir, "output directory")->required();

    CLI::App* sweep = app.add_subcommand("sweep", "run one simulation per parameter value");
    add_scenario(sweep);
    sweep->add_option("--out", out_dir, "output directory")->required();
    sweep->add_option("--param", param, "parameter: delta, step_h, topology or gain_k_all")
        ->required();
    sweep->add_option("--values", values, "comma-separated list of values")
        ->required()
        ->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    if (check->parsed()) {
        return nashgrid::cmd_check({scenario, quiet}, std::cout);
    }
    if (solve->parsed()) {
        return nashgrid::cmd_solve({scenario, verify, quiet}, std::cout);
    }
    if (simulate->parsed()) {
        return nashgrid::cmd_simulate({scenario, out_dir, quiet}, std::cout);
    }
    return nashgrid::cmd_sweep({scenario, out_dir, param, values, quiet}, std::cout);
}
