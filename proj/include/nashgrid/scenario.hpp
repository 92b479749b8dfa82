#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "nashgrid/integrate.hpp"
#include "nashgrid/oracle.hpp"

namespace nashgrid {

/// Fully validated simulation setup parsed from a scenario document.
struct Scenario {
    std::string name;
    GameSpec game;
    std::string topology;  // "ring" | "complete" | "path" | "" for an explicit edge list
    std::vector<std::pair<int, int>> edges;
    StrategyMode strategy = StrategyMode::Inner;
    double delta = 0.05;
    IntegratorConfig integrator;
    std::optional<Eigen::VectorXd> init_l;
    std::optional<Eigen::VectorXd> init_D;
    std::optional<Eigen::VectorXd> init_kappa;
    std::optional<Eigen::VectorXd> init_zeta;

    Graph build_graph() const;

    bool operator==(const Scenario& other) const;
};

/// Parses and validates a scenario JSON document. Unknown fields are
/// rejected; every violation is reported with its field path via
/// ScenarioValidationError. Malformed JSON raises ErrorCode::ParseError.
Scenario parse_scenario(const std::string& text);

/// Canonical JSON form; parse(serialize(s)) == s.
std::string serialize_scenario(const Scenario& scenario);

/// Reads `ref` as a file path, falling back to the bundled scenario of that
/// name; parses either way.
Scenario resolve_scenario(const std::string& ref);

/// Names of the scenarios embedded in the library.
const std::vector<std::string>& bundled_scenario_names();

/// JSON text of a bundled scenario; throws std::invalid_argument for
/// unknown names.
const std::string& bundled_scenario_text(const std::string& name);

/// Default initial condition (l = comfort targets, estimates and integrators
/// at zero, unit multipliers) with any scenario overrides applied. Stubborn
/// players always start at their fixed consumption.
SimState initial_state(const Scenario& scenario);

/// Writes `t,l_1..l_N,D_1..D_N,aggregate,price,Q,residual` rows with 12
/// significant digits (Q blank for non-potential models). Returns the number
/// of data rows.
int write_trajectory_csv(const Trajectory& traj, std::ostream& out);

/// File variant; writes to a temporary file and renames on success so
/// failures leave no partial output. Throws IoFailure.
int write_trajectory_csv(const Trajectory& traj, const std::string& path);

/// Machine-readable run summary: stop reason, final profile and aggregate,
/// per-component error against the oracle (when given), and the final
/// consensus error max_i |D_i - sum(l)|.
nlohmann::json make_summary(const Scenario& scenario, const IntegrationResult& result,
                            const EquilibriumResult* oracle, double wall_seconds);

/// Atomic JSON write. Throws IoFailure.
void write_json_file(const nlohmann::json& doc, const std::string& path);

/// Atomic text write (temp file + rename). Throws IoFailure.
void write_text_file(const std::string& content, const std::string& path);

}  // namespace nashgrid
