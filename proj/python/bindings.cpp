#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "nashgrid/commands.hpp"
#include "nashgrid/integrate.hpp"
#include "nashgrid/oracle.hpp"
#include "nashgrid/scenario.hpp"

namespace py = pybind11;
using namespace nashgrid;

namespace {

Eigen::MatrixXd stack_actions(const Trajectory& traj) {
    const Eigen::Index n = traj.states.empty() ? 0 : traj.states.front().l.size();
    Eigen::MatrixXd m(static_cast<Eigen::Index>(traj.size()), n);
    for (size_t k = 0; k < traj.size(); ++k) {
        m.row(static_cast<Eigen::Index>(k)) = traj.states[k].l.transpose();
    }
    return m;
}

Eigen::MatrixXd stack_estimates(const Trajectory& traj) {
    const Eigen::Index n = traj.states.empty() ? 0 : traj.states.front().D.size();
    Eigen::MatrixXd m(static_cast<Eigen::Index>(traj.size()), n);
    for (size_t k = 0; k < traj.size(); ++k) {
        m.row(static_cast<Eigen::Index>(k)) = traj.states[k].D.transpose();
    }
    return m;
}

Eigen::MatrixXd stack_costs(const Trajectory& traj) {
    const Eigen::Index n = traj.player_cost.empty() ? 0 : traj.player_cost.front().size();
    Eigen::MatrixXd m(static_cast<Eigen::Index>(traj.player_cost.size()), n);
    for (size_t k = 0; k < traj.player_cost.size(); ++k) {
        m.row(static_cast<Eigen::Index>(k)) = traj.player_cost[k].transpose();
    }
    return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Distributed Nash-equilibrium seeking for energy consumption games";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            switch (e.code()) {
                case ErrorCode::ParseError:
                case ErrorCode::ValidationError:
                    PyErr_SetString(PyExc_ValueError, e.what());
                    break;
                default:
                    PyErr_SetString(PyExc_RuntimeError, e.what());
            }
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"),
             py::arg("edges"))
        .def_static("ring", &Graph::ring, py::arg("n"))
        .def_static("complete", &Graph::complete, py::arg("n"))
        .def_static("path", &Graph::path, py::arg("n"))
        .def_property_readonly("n", &Graph::size)
        .def_property_readonly("edges", &Graph::edges)
        .def("degree", &Graph::degree, py::arg("i"));
    m.def("is_connected", &is_connected, py::arg("graph"));
    m.def("laplacian", &laplacian, py::arg("graph"));
    m.def("fiedler_value", &fiedler_value, py::arg("graph"));

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init([](std::vector<double> coeffs) { return Polynomial{std::move(coeffs)}; }),
             py::arg("coeffs"))
        .def_readwrite("coeffs", &Polynomial::coeffs)
        .def("value", &Polynomial::value, py::arg("x"))
        .def("slope", &Polynomial::slope, py::arg("x"));

    py::class_<PlayerSpec>(m, "PlayerSpec")
        .def(py::init<>())
        .def_readwrite("w", &PlayerSpec::w)
        .def_readwrite("l_hat", &PlayerSpec::l_hat)
        .def_readwrite("l_min", &PlayerSpec::l_min)
        .def_readwrite("l_max", &PlayerSpec::l_max)
        .def_readwrite("gain_k", &PlayerSpec::gain_k)
        .def_readwrite("gain_m1", &PlayerSpec::gain_m1)
        .def_readwrite("gain_m2", &PlayerSpec::gain_m2)
        .def_readwrite("stubborn", &PlayerSpec::stubborn)
        .def_readwrite("curtailment", &PlayerSpec::curtailment);

    py::class_<PricingSpec>(m, "PricingSpec")
        .def(py::init<>())
        .def_readwrite("a", &PricingSpec::a)
        .def_readwrite("p0", &PricingSpec::p0)
        .def_readwrite("curve", &PricingSpec::curve)
        .def("price", &PricingSpec::price, py::arg("aggregate"));

    py::class_<GameSpec>(m, "GameSpec")
        .def(py::init<>())
        .def_readwrite("players", &GameSpec::players)
        .def_readwrite("pricing", &GameSpec::pricing)
        .def_property_readonly("n", &GameSpec::size)
        .def("hvac_linear", &GameSpec::hvac_linear)
        .def("stubborn_players", &GameSpec::stubborn_players);

    m.def("cost", &cost, py::arg("spec"), py::arg("i"), py::arg("l_i"), py::arg("aggregate"));
    m.def("pseudo_gradient", &pseudo_gradient, py::arg("spec"), py::arg("i"), py::arg("l_i"),
          py::arg("estimate"));
    m.def("potential", &potential, py::arg("spec"), py::arg("l"));
    m.def("potential_gradient", &potential_gradient, py::arg("spec"), py::arg("l"));
    m.def("check_uniqueness_condition", &check_uniqueness_condition, py::arg("spec"));
    m.def("jacobian_B", &jacobian_B, py::arg("spec"), py::arg("l"));
    m.def("is_strictly_diagonally_dominant", &is_strictly_diagonally_dominant, py::arg("m"));
    m.def("hessian_Q", &hessian_Q, py::arg("spec"));
    m.def("lagrangian", &lagrangian, py::arg("spec"), py::arg("l"), py::arg("eta"));

    py::enum_<StrategyMode>(m, "StrategyMode")
        .value("GENERAL", StrategyMode::General)
        .value("PRIMAL_DUAL", StrategyMode::PrimalDual)
        .value("INNER", StrategyMode::Inner);

    py::class_<SimState>(m, "SimState")
        .def(py::init<>())
        .def_readwrite("l", &SimState::l)
        .def_readwrite("D", &SimState::D)
        .def_readwrite("kappa", &SimState::kappa)
        .def_readwrite("zeta", &SimState::zeta)
        .def("eta", &SimState::eta)
        .def("norm", &SimState::norm);

    m.def("seeking_rhs", &seeking_rhs, py::arg("spec"), py::arg("graph"), py::arg("mode"),
          py::arg("state"), py::arg("delta"));
    m.def(
        "consensus_rhs",
        [](const Graph& g, const SimState& state, const Eigen::VectorXd& drive) {
            return consensus_rhs(g, state, drive);
        },
        py::arg("graph"), py::arg("state"), py::arg("drive"));
    m.def("residual", &residual, py::arg("spec"), py::arg("graph"), py::arg("mode"),
          py::arg("state"));

    py::class_<IntegratorConfig>(m, "IntegratorConfig")
        .def(py::init<>())
        .def_readwrite("step_h", &IntegratorConfig::step_h)
        .def_readwrite("t_max", &IntegratorConfig::t_max)
        .def_readwrite("sample_every", &IntegratorConfig::sample_every)
        .def_readwrite("stop_tol", &IntegratorConfig::stop_tol)
        .def_readwrite("diverge_bound", &IntegratorConfig::diverge_bound);

    py::enum_<StopReason>(m, "StopReason")
        .value("CONVERGED", StopReason::Converged)
        .value("HORIZON", StopReason::Horizon)
        .value("DIVERGED", StopReason::Diverged)
        .value("NUMERIC_FAILURE", StopReason::NumericFailure);

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("times", &Trajectory::times)
        .def_readonly("aggregate", &Trajectory::aggregate)
        .def_readonly("price", &Trajectory::price)
        .def_readonly("residual", &Trajectory::residual)
        .def_readonly("potential_q", &Trajectory::potential_q)
        .def_readonly("states", &Trajectory::states)
        .def_property_readonly("actions", &stack_actions,
                               "samples-by-players matrix of consumptions")
        .def_property_readonly("estimates", &stack_estimates,
                               "samples-by-players matrix of aggregate estimates")
        .def_property_readonly("costs", &stack_costs,
                               "samples-by-players matrix of realized player costs")
        .def("__len__", &Trajectory::size);

    py::class_<IntegrationResult>(m, "IntegrationResult")
        .def_readonly("trajectory", &IntegrationResult::trajectory)
        .def_readonly("reason", &IntegrationResult::reason)
        .def_readonly("wall_seconds", &IntegrationResult::wall_seconds);

    m.def(
        "integrate",
        [](const GameSpec& spec, const Graph& graph, StrategyMode mode, double delta,
           const SimState& initial, const IntegratorConfig& cfg) {
            const Flow flow(spec, graph, mode, delta);
            return integrate(flow, initial, cfg);
        },
        py::arg("spec"), py::arg("graph"), py::arg("mode"), py::arg("delta"), py::arg("initial"),
        py::arg("config"));

    m.def(
        "rk4_step",
        [](const std::function<SimState(const SimState&)>& rhs, const SimState& state, double h) {
            return rk4_step(rhs, state, h);
        },
        py::arg("rhs"), py::arg("state"), py::arg("h"),
        "One classical Runge-Kutta update of a custom vector field");

    py::class_<EquilibriumResult>(m, "EquilibriumResult")
        .def_readonly("l_star", &EquilibriumResult::l_star)
        .def_readonly("aggregate", &EquilibriumResult::aggregate)
        .def_readonly("eta_star", &EquilibriumResult::eta_star)
        .def_readonly("active_lower", &EquilibriumResult::active_lower)
        .def_readonly("active_upper", &EquilibriumResult::active_upper)
        .def_readonly("stationarity_residual", &EquilibriumResult::stationarity_residual);

    m.def("inner_equilibrium", &inner_equilibrium, py::arg("spec"));
    m.def("constrained_equilibrium", &constrained_equilibrium, py::arg("spec"));
    m.def("best_response", &best_response, py::arg("spec"), py::arg("i"), py::arg("others_sum"));
    m.def("stubborn_equilibrium", &stubborn_equilibrium, py::arg("spec"));

    py::class_<NashCheck>(m, "NashCheck")
        .def_readonly("is_nash", &NashCheck::is_nash)
        .def_readonly("worst_improvement", &NashCheck::worst_improvement)
        .def_readonly("worst_player", &NashCheck::worst_player)
        .def_readonly("worst_action", &NashCheck::worst_action);
    m.def("verify_nash", &verify_nash, py::arg("spec"), py::arg("l"), py::arg("grid_points"),
          py::arg("eps"));

    py::class_<Scenario>(m, "Scenario")
        .def_readwrite("name", &Scenario::name)
        .def_readwrite("game", &Scenario::game)
        .def_readwrite("strategy", &Scenario::strategy)
        .def_readwrite("delta", &Scenario::delta)
        .def_readwrite("integrator", &Scenario::integrator)
        .def_property_readonly("topology", [](const Scenario& s) { return s.topology; })
        .def("build_graph", &Scenario::build_graph);

    m.def("parse_scenario", &parse_scenario, py::arg("text"));
    m.def("serialize_scenario", &serialize_scenario, py::arg("scenario"));
    m.def("resolve_scenario", &resolve_scenario, py::arg("ref"));
    m.def("bundled_scenario_names", &bundled_scenario_names);
    m.def("bundled_scenario_text", &bundled_scenario_text, py::arg("name"));
    m.def("initial_state", &initial_state, py::arg("scenario"));

    m.def(
        "run_scenario",
        [](const Scenario& scenario) {
            const Graph graph = scenario.build_graph();
            const Flow flow(scenario.game, graph, scenario.strategy, scenario.delta);
            return integrate(flow, initial_state(scenario), scenario.integrator);
        },
        py::arg("scenario"), "Integrate a scenario from its initial condition");

    m.def(
        "summary_json",
        [](const Scenario& scenario, const IntegrationResult& result,
           const EquilibriumResult* oracle) {
            return make_summary(scenario, result, oracle, result.wall_seconds).dump(2);
        },
        py::arg("scenario"), py::arg("result"), py::arg("oracle") = nullptr,
        "Run summary as a JSON string");

    m.def(
        "write_trajectory_csv",
        [](const Trajectory& traj, const std::string& path) {
            return write_trajectory_csv(traj, path);
        },
        py::arg("trajectory"), py::arg("path"), "Returns the number of data rows written");
}
