"""Distributed Nash-equilibrium seeking for energy consumption games.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from ._core import (
    EquilibriumResult,
    GameSpec,
    Graph,
    IntegrationResult,
    IntegratorConfig,
    NashCheck,
    PlayerSpec,
    Polynomial,
    PricingSpec,
    Scenario,
    SimState,
    StopReason,
    StrategyMode,
    Trajectory,
    best_response,
    bundled_scenario_names,
    bundled_scenario_text,
    check_uniqueness_condition,
    consensus_rhs,
    constrained_equilibrium,
    cost,
    fiedler_value,
    hessian_Q,
    initial_state,
    inner_equilibrium,
    integrate,
    is_connected,
    is_strictly_diagonally_dominant,
    jacobian_B,
    lagrangian,
    laplacian,
    parse_scenario,
    potential,
    potential_gradient,
    pseudo_gradient,
    residual,
    resolve_scenario,
    rk4_step,
    run_scenario,
    seeking_rhs,
    serialize_scenario,
    stubborn_equilibrium,
    summary_json,
    verify_nash,
    write_trajectory_csv,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
