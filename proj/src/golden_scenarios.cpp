#include "nashgrid/scenario.hpp"

#include <map>
#include <stdexcept>

namespace nashgrid {

namespace {

// Five commercial users with HVAC loads: comfort targets 50..70 kWh, boxes at
// +-20% of the target, linear pricing 0.04 per kWh over a base price of 5.
// The three bundled scenarios differ only in player 1's box (tightened to
// [45, 55] in the constrained variant) and player 5's behavior (fixed at
// 100 kWh in the stubborn variant).
const char* const kTable1Inner = R"json({
  "name": "table1_inner",
  "players": [
    {"w": 1.0, "l_hat": 50.0, "l_min": 40.0, "l_max": 60.0, "gain_k": 1.0, "gain_m1": 1.0, "gain_m2": 1.0},
    {"w": 1.0, "l_hat": 55.0, "l_min": 44.0, "l_max": 66.0, "gain_k": 1.0, "gain_m1": 1.0, "gain_m2": 1.0},
    {"w": 1.0, "l_hat": 60.0, "l_min": 48.0, "l_max": 72.0, "gain_k": 1.0, "gain_m1": 1.0, "gain_m2": 1.0},
    {"w": 1.0, "l_hat": 65.0, "l_min": 52.0, "l_max": 78.0, "gain_k": 1.0, "gain_m1": 1.0, "gain_m2": 1.0},
    {"w": 1.0, "l_hat": 70.0, "l_min": 56.0, "l_max": 84.0, "gain_k": 1.0, "gain_m1": 1.0, "gain_m2": 1.0}
  ],
  "pricing": {"a": 0.04, "p0": 5.0},
  "graph": {"topology": "ring"},
  "strategy": "inner",
  "delta": 0.05,
  "integrator": {"step_h": 0.001, "t_max": 2000.0, "sample_every": 100, "stop_tol": 1e-8, "diverge_bound": 1e6}
})json";

const char* const kTable1Constrained = R"json({
  "name": "table1_constrained",
  "players": [
    {"w": 1.0, "l_hat": 50.0, "l_min": 45.0, "l_max": 55.0, "gain_k": 1.0, "gain_m1": 1.0, "gain_m2": 1.0},
    {"w": 1.0, "l_hat": 55.0, "l_min": 44.0, "l_max": 66.0, "gain_k": 1.0, "gain_m1": 1.0, "gain_m2": 1.0},
    {"w": 1.0, "l_hat": 60.0, "l_min": 48.0, "l_max": 72.0, "gain_k": 1.0, "gain_m1": 1.0, "gain_m2": 1.0},
    {"w": 1.0, "l_hat": 65.0, "l_min": 52.0, "l_max": 78.0, "gain_k": 1.0, "gain_m1": 1.0, "gain_m2": 1.0},
    {"w": 1.0, "l_hat": 70.0, "l_min": 56.0, "l_max": 84.0, "gain_k": 1.0, "gain_m1": 1.0, "gain_m2": 1.0}
  ],
  "pricing": {"a": 0.04, "p0": 5.0},
  "graph": {"topology": "ring"},
  "strategy": "primal_dual",
  "delta": 0.05,
  "integrator": {"step_h": 0.001, "t_max": 2000.0, "sample_every": 100, "stop_tol": 1e-8, "diverge_bound": 1e6}
})json";

const char* const kTable1Stubborn = R"json({
  "name": "table1_stubborn",
  "players": [
    {"w": 1.0, "l_hat": 50.0, "l_min": 40.0, "l_max": 60.0, "gain_k": 1.0, "gain_m1": 1.0, "gain_m2": 1.0},
    {"w": 1.0, "l_hat": 55.0, "l_min": 44.0, "l_max": 66.0, "gain_k": 1.0, "gain_m1": 1.0, "gain_m2": 1.0},
    {"w": 1.0, "l_hat": 60.0, "l_min": 48.0, "l_max": 72.0, "gain_k": 1.0, "gain_m1": 1.0, "gain_m2": 1.0},
    {"w": 1.0, "l_hat": 65.0, "l_min": 52.0, "l_max": 78.0, "gain_k": 1.0, "gain_m1": 1.0, "gain_m2": 1.0},
    {"w": 1.0, "l_hat": 70.0, "l_min": 56.0, "l_max": 84.0, "gain_k": 1.0, "gain_m1": 1.0, "gain_m2": 1.0, "stubborn": 100.0}
  ],
  "pricing": {"a": 0.04, "p0": 5.0},
  "graph": {"topology": "ring"},
  "strategy": "inner",
  "delta": 0.05,
  "integrator": {"step_h": 0.001, "t_max": 2000.0, "sample_every": 100, "stop_tol": 1e-8, "diverge_bound": 1e6}
})json";

const std::map<std::string, std::string>& registry() {
    static const std::map<std::string, std::string> scenarios = {
        {"table1_inner", kTable1Inner},
        {"table1_constrained", kTable1Constrained},
        {"table1_stubborn", kTable1Stubborn},
    };
    return scenarios;
}

}  // namespace

const std::vector<std::string>& bundled_scenario_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, _] : registry()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

const std::string& bundled_scenario_text(const std::string& name) {
    const auto& reg = registry();
    auto it = reg.find(name);
    if (it == reg.end()) {
        throw std::invalid_argument("unknown bundled scenario: " + name);
    }
    return it->second;
}

}  // namespace nashgrid
