#include "nashgrid/commands.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace nashgrid {

namespace {

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::IoFailure:
            return kExitIo;
        case ErrorCode::NonFiniteDerivative:
            return kExitNumeric;
        default:
            return kExitValidation;
    }
}

std::string sci3(double x) {
    std::ostringstream s;
    s << std::setprecision(3) << std::scientific << x;
    return s.str();
}

std::string format_profile(const Eigen::VectorXd& v) {
    std::ostringstream s;
    s << "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i > 0) s << ", ";
        s << std::setprecision(6) << v(i);
    }
    s << ")";
    return s.str();
}

std::string format_players(const std::vector<int>& players) {
    if (players.empty()) {
        return "none";
    }
    std::string out;
    for (size_t k = 0; k < players.size(); ++k) {
        if (k) out += ", ";
        out += std::to_string(players[k] + 1);  // 1-based in reports
    }
    return out;
}

// The oracle for a scenario: the stubborn-reduced solve when fixed players
// exist, otherwise the box-constrained solve (which equals the inner solve
// when nothing binds). Returns false for models without an oracle.
bool scenario_oracle(const Scenario& scenario, EquilibriumResult& out) {
    if (!scenario.game.hvac_linear()) {
        return false;
    }
    out = scenario.game.stubborn_players().empty() ? constrained_equilibrium(scenario.game)
                                                   : stubborn_equilibrium(scenario.game);
    return true;
}

struct RunArtifacts {
    IntegrationResult result;
    int csv_rows = 0;
    double max_err_rational = std::numeric_limits<double>::quiet_NaN();
};

RunArtifacts run_and_write(const Scenario& scenario, const EquilibriumResult* oracle,
                           const std::string& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw Error(ErrorCode::IoFailure, "cannot create output directory: " + out_dir);
    }
    const Graph graph = scenario.build_graph();
    const Flow flow(scenario.game, graph, scenario.strategy, scenario.delta);

    RunArtifacts run;
    run.result = integrate(flow, initial_state(scenario), scenario.integrator);
    run.csv_rows = write_trajectory_csv(run.result.trajectory,
                                        (std::filesystem::path(out_dir) / "trajectory.csv").string());
    const nlohmann::json summary =
        make_summary(scenario, run.result, oracle, run.result.wall_seconds);
    write_json_file(summary, (std::filesystem::path(out_dir) / "summary.json").string());
    if (oracle != nullptr) {
        run.max_err_rational = summary.at("error_vs_oracle").at("max_rational").get<double>();
    }
    return run;
}

}  // namespace

int cmd_check(const CheckOptions& opts, std::ostream& out) {
    Scenario scenario;
    try {
        scenario = resolve_scenario(opts.scenario);
    } catch (const ScenarioValidationError& e) {
        out << "scenario '" << opts.scenario << "': INVALID\n";
        for (const auto& violation : e.violations()) {
            out << "  " << violation << "\n";
        }
        return kExitValidation;
    } catch (const Error& e) {
        out << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }

    const GameSpec& game = scenario.game;
    const Graph graph = scenario.build_graph();
    const bool hvac = game.hvac_linear();
    const int n = game.size();

    if (!opts.quiet) {
        out << "scenario '" << scenario.name << "': valid\n";
        out << "  players: " << n << " (stubborn: " << format_players(game.stubborn_players())
            << "), strategy: " << to_string(scenario.strategy)
            << ", model: " << (hvac ? "quadratic/linear" : "polynomial") << "\n";
        out << "  graph: " << (scenario.topology.empty() ? "custom" : scenario.topology) << ", "
            << graph.edges().size() << " edges, connected";
        if (n > 1) {
            out << ", fiedler value " << std::setprecision(6) << fiedler_value(graph);
        }
        out << "\n";
        if (hvac) {
            if (n > 3) {
                double min_w = std::numeric_limits<double>::infinity();
                for (const auto& p : game.players) min_w = std::min(min_w, p.w);
                const double bound = 2.0 * min_w / static_cast<double>(n - 3);
                out << "  uniqueness: a = " << game.pricing.a << " < " << bound << " (margin "
                    << bound - game.pricing.a << ")\n";
            } else {
                out << "  uniqueness: automatic for N <= 3\n";
            }
        } else {
            out << "  uniqueness: no closed-form bound for the polynomial model\n";
        }
        const Eigen::VectorXd l0 = initial_state(scenario).l;
        const Eigen::MatrixXd b = jacobian_B(game, l0);
        out << "  jacobian B at l(0): "
            << (is_strictly_diagonally_dominant(b) ? "strictly diagonally dominant"
                                                   : "NOT strictly diagonally dominant")
            << "\n";
        if (hvac) {
            const Eigen::MatrixXd h = hessian_Q(game);
            const double min_eig =
                Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(h, Eigen::EigenvaluesOnly)
                    .eigenvalues()(0);
            out << "  hessian H: " << (min_eig > 0.0 ? "positive definite" : "NOT positive definite")
                << " (min eigenvalue " << min_eig << ")\n";
        }
    }
    return kExitOk;
}

int cmd_solve(const SolveOptions& opts, std::ostream& out) {
    try {
        const Scenario scenario = resolve_scenario(opts.scenario);
        EquilibriumResult eq;
        if (!scenario_oracle(scenario, eq)) {
            out << "error: the equilibrium oracle requires the quadratic/linear model\n";
            return kExitValidation;
        }
        if (!opts.quiet) {
            out << "scenario '" << scenario.name << "': equilibrium\n";
            out << "  l* = " << format_profile(eq.l_star) << "\n";
            out << "  aggregate = " << std::setprecision(6) << eq.aggregate
                << ", price = " << scenario.game.pricing.price(eq.aggregate) << "\n";
            out << "  active lower bounds: players " << format_players(eq.active_lower) << "\n";
            out << "  active upper bounds: players " << format_players(eq.active_upper) << "\n";
            const auto stubborn = scenario.game.stubborn_players();
            if (!stubborn.empty()) {
                out << "  stubborn players: " << format_players(stubborn) << "\n";
            }
            out << "  stationarity residual = " << std::setprecision(3) << std::scientific
                << eq.stationarity_residual << std::defaultfloat << "\n";
        }
        if (opts.verify) {
            const NashCheck check = verify_nash(scenario.game, eq.l_star, 2001, 1e-6);
            if (check.is_nash) {
                out << "  verify: PASS (worst unilateral improvement "
                    << std::setprecision(3) << std::scientific << check.worst_improvement
                    << std::defaultfloat << " over a 2001-point grid)\n";
            } else {
                out << "  verify: FAIL (player " << check.worst_player + 1 << " improves by "
                    << check.worst_improvement << " at " << check.worst_action << ")\n";
                return kExitNumeric;
            }
        }
        return kExitOk;
    } catch (const ScenarioValidationError& e) {
        out << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        out << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

int cmd_simulate(const SimulateOptions& opts, std::ostream& out) {
    try {
        const Scenario scenario = resolve_scenario(opts.scenario);
        EquilibriumResult eq;
        const bool has_oracle = scenario_oracle(scenario, eq);
        const RunArtifacts run =
            run_and_write(scenario, has_oracle ? &eq : nullptr, opts.out_dir);
        const Trajectory& traj = run.result.trajectory;

        if (!opts.quiet) {
            out << "scenario '" << scenario.name << "': " << to_string(scenario.strategy)
                << " strategy, " << scenario.game.size() << " players\n";
            out << "  stop reason: " << to_string(run.result.reason) << " at t = "
                << traj.times.back() << " (" << traj.size() << " samples, wall "
                << std::setprecision(3) << run.result.wall_seconds << " s)\n";
            out << "  final l = " << format_profile(traj.states.back().l) << "\n";
            out << "  final aggregate = " << std::setprecision(6) << traj.aggregate.back();
            if (has_oracle) {
                out << " (oracle " << eq.aggregate << ")";
            }
            out << "\n";
            if (has_oracle) {
                out << "  max |l - l*| over rational players = " << std::setprecision(3)
                    << std::scientific << run.max_err_rational << std::defaultfloat << "\n";
            } else {
                const SimState& last = traj.states.back();
                double stationarity = 0.0;
                for (int i = 0; i < scenario.game.size(); ++i) {
                    stationarity = std::max(
                        stationarity,
                        std::abs(pseudo_gradient(scenario.game, i, last.l(i), traj.aggregate.back())));
                }
                out << "  stationarity max_i |dC_i/dl_i| = " << std::setprecision(3)
                    << std::scientific << stationarity << std::defaultfloat << "\n";
            }
            const SimState& last = traj.states.back();
            out << "  consensus error max_i |D_i - sum l| = " << std::setprecision(3)
                << std::scientific << (last.D.array() - traj.aggregate.back()).abs().maxCoeff()
                << std::defaultfloat << "\n";
            out << "  wrote " << opts.out_dir << "/trajectory.csv (" << run.csv_rows
                << " rows), " << opts.out_dir << "/summary.json\n";
        }
        const bool failed = run.result.reason == StopReason::Diverged ||
                            run.result.reason == StopReason::NumericFailure;
        if (failed) {
            out << "  run failed: " << to_string(run.result.reason) << "\n";
        }
        return failed ? kExitNumeric : kExitOk;
    } catch (const ScenarioValidationError& e) {
        out << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        out << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

namespace {

struct SweepRow {
    std::string value;
    StopReason reason = StopReason::NumericFailure;
    double t_final = 0.0;
    double residual = 0.0;
    double max_err_rational = std::numeric_limits<double>::quiet_NaN();
    double wall_seconds = 0.0;
    std::string error;  // non-empty when the run threw
};

Scenario apply_sweep_value(const Scenario& base, const std::string& param,
                           const std::string& value) {
    Scenario scenario = base;
    auto as_number = [&](const char* what) {
        try {
            size_t used = 0;
            const double x = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
            return x;
        } catch (const std::exception&) {
            throw Error(ErrorCode::ValidationError,
                        std::string("sweep value '") + value + "' is not a valid " + what);
        }
    };
    if (param == "delta") {
        scenario.delta = as_number("delta");
        if (!(scenario.delta > 0.0)) {
            throw Error(ErrorCode::ValidationError, "sweep delta must be positive");
        }
    } else if (param == "step_h") {
        scenario.integrator.step_h = as_number("step size");
        if (!(scenario.integrator.step_h > 0.0)) {
            throw Error(ErrorCode::ValidationError, "sweep step_h must be positive");
        }
    } else if (param == "topology") {
        if (value != "ring" && value != "complete" && value != "path") {
            throw Error(ErrorCode::ValidationError,
                        "sweep topology must be one of ring, complete, path (got '" + value + "')");
        }
        scenario.topology = value;
        scenario.edges.clear();
    } else if (param == "gain_k_all") {
        const double k = as_number("gain");
        if (!(k > 0.0)) {
            throw Error(ErrorCode::ValidationError, "sweep gain_k_all must be positive");
        }
        for (auto& p : scenario.game.players) {
            p.gain_k = k;
        }
    } else {
        throw Error(ErrorCode::ValidationError,
                    "unknown sweep parameter '" + param +
                        "' (expected delta, step_h, topology or gain_k_all)");
    }
    return scenario;
}

}  // namespace

int cmd_sweep(const SweepOptions& opts, std::ostream& out) {
    if (opts.values.empty()) {
        out << "error: sweep needs at least one value\n";
        return kExitValidation;
    }
    {
        std::vector<std::string> sorted = opts.values;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            out << "error: sweep values must be distinct (outputs share one directory per value)\n";
            return kExitValidation;
        }
    }
    try {
        const Scenario base = resolve_scenario(opts.scenario);
        EquilibriumResult eq;
        const bool has_oracle = scenario_oracle(base, eq);

        // Validate every variant before launching any run.
        std::vector<Scenario> variants;
        variants.reserve(opts.values.size());
        for (const auto& value : opts.values) {
            variants.push_back(apply_sweep_value(base, opts.param, value));
        }

        std::vector<std::future<SweepRow>> futures;
        for (size_t k = 0; k < variants.size(); ++k) {
            const Scenario& scenario = variants[k];
            const std::string value = opts.values[k];
            const std::string run_dir =
                (std::filesystem::path(opts.out_dir) / (opts.param + "=" + value)).string();
            futures.push_back(std::async(std::launch::async, [&scenario, value, run_dir,
                                                              has_oracle, &eq]() {
                SweepRow row;
                row.value = value;
                try {
                    const RunArtifacts run =
                        run_and_write(scenario, has_oracle ? &eq : nullptr, run_dir);
                    row.reason = run.result.reason;
                    row.t_final = run.result.trajectory.times.back();
                    row.residual = run.result.trajectory.residual.back();
                    row.max_err_rational = run.max_err_rational;
                    row.wall_seconds = run.result.wall_seconds;
                } catch (const std::exception& e) {
                    row.error = e.what();
                }
                return row;
            }));
        }
        std::vector<SweepRow> rows;
        rows.reserve(futures.size());
        for (auto& f : futures) {
            rows.push_back(f.get());
        }

        if (!opts.quiet) {
            out << "sweep " << opts.param << " over " << rows.size() << " values on '"
                << base.name << "'\n";
            out << std::left << std::setw(14) << "  value" << std::setw(12) << "stop"
                << std::setw(12) << "t_stop" << std::setw(14) << "residual" << std::setw(14)
                << "max|l-l*|" << "wall_s\n";
            for (const auto& row : rows) {
                if (!row.error.empty()) {
                    out << "  " << std::setw(12) << row.value << "failed: " << row.error << "\n";
                    continue;
                }
                const std::string err =
                    std::isnan(row.max_err_rational) ? "n/a" : sci3(row.max_err_rational);
                out << "  " << std::setw(12) << row.value << std::setw(12)
                    << to_string(row.reason) << std::setw(12) << std::setprecision(6)
                    << row.t_final << std::setw(14) << sci3(row.residual) << std::setw(14) << err
                    << std::setprecision(3) << row.wall_seconds << "\n";
            }
        }

        // Machine-readable comparison table next to the per-run directories.
        std::ostringstream csv;
        csv << "value,stop_reason,t_stop,residual,max_err_rational,wall_seconds\n";
        for (const auto& row : rows) {
            csv << row.value << ',' << (row.error.empty() ? to_string(row.reason) : "error") << ','
                << row.t_final << ',' << row.residual << ',';
            if (!std::isnan(row.max_err_rational)) {
                csv << row.max_err_rational;
            }
            csv << ',' << row.wall_seconds << '\n';
        }
        std::error_code ec;
        std::filesystem::create_directories(opts.out_dir, ec);
        if (ec) {
            throw Error(ErrorCode::IoFailure, "cannot create output directory: " + opts.out_dir);
        }
        write_text_file(csv.str(),
                        (std::filesystem::path(opts.out_dir) / "sweep_summary.csv").string());

        for (const auto& row : rows) {
            if (!row.error.empty() || row.reason == StopReason::Diverged ||
                row.reason == StopReason::NumericFailure) {
                return kExitNumeric;
            }
        }
        return kExitOk;
    } catch (const ScenarioValidationError& e) {
        out << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        out << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

}  // namespace nashgrid
