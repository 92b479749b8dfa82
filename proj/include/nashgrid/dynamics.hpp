#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>

#include "nashgrid/game.hpp"
#include "nashgrid/graph.hpp"

namespace nashgrid {

enum class StrategyMode {
    General,     // consensus + gradient step on the general polynomial model
    PrimalDual,  // consensus + gradient step with box-constraint multipliers
    Inner,       // consensus + unconstrained gradient step (hvac/linear)
};

std::string to_string(StrategyMode mode);

/// Stacked flow state. `zeta` holds log-multipliers (zeta[2i] for the lower
/// bound of player i, zeta[2i+1] for the upper bound); it has 2N entries in
/// primal-dual mode and is empty otherwise. Keeping multipliers in log space
/// makes eta = exp(zeta) > 0 hold for every reachable state.
struct SimState {
    Eigen::VectorXd l;
    Eigen::VectorXd D;
    Eigen::VectorXd kappa;
    Eigen::VectorXd zeta;

    Eigen::VectorXd eta() const { return zeta.array().exp(); }
    bool all_finite() const;
    double squared_norm() const;
    double norm() const;
};

/// s + c * d, blockwise.
SimState add_scaled(const SimState& s, const SimState& d, double c);

/// Dynamic-average-consensus estimator over the graph:
///   dD_i     = -D_i - sum_{j in N_i} (D_i - D_j) - sum_{j in N_i} (kappa_i - kappa_j) + drive_i
///   dkappa_i =  sum_{j in N_i} (D_i - D_j)
/// With drive = N*l the estimates D converge to the true aggregate sum(l).
std::pair<Eigen::VectorXd, Eigen::VectorXd> consensus_rhs(const Graph& g,
                                                          const SimState& state,
                                                          const Eigen::VectorXd& drive);

SimState general_rhs(const GameSpec& spec, const Graph& g, const SimState& state, double delta);
SimState primal_dual_rhs(const GameSpec& spec, const Graph& g, const SimState& state, double delta);
SimState inner_rhs(const GameSpec& spec, const Graph& g, const SimState& state, double delta);

/// Dispatch on mode.
SimState seeking_rhs(const GameSpec& spec, const Graph& g, StrategyMode mode,
                     const SimState& state, double delta);

/// Euclidean norm of the state derivative evaluated at delta = 1, so stopping
/// thresholds do not depend on the time-scale parameter. The multiplier block
/// is measured as eta .* dzeta (the velocity of eta itself), which vanishes at
/// saddle points where inactive multipliers decay to zero.
double residual(const GameSpec& spec, const Graph& g, StrategyMode mode, const SimState& state);

/// Bundles one scenario's right-hand side; calling it evaluates the selected
/// strategy at the given state.
class Flow {
  public:
    Flow(const GameSpec& spec, const Graph& graph, StrategyMode mode, double delta);

    SimState operator()(const SimState& state) const {
        return seeking_rhs(*spec_, *graph_, mode_, state, delta_);
    }

    double residual_at(const SimState& state) const {
        return residual(*spec_, *graph_, mode_, state);
    }

    const GameSpec& spec() const noexcept { return *spec_; }
    const Graph& graph() const noexcept { return *graph_; }
    StrategyMode mode() const noexcept { return mode_; }
    double delta() const noexcept { return delta_; }

  private:
    const GameSpec* spec_;
    const Graph* graph_;
    StrategyMode mode_;
    double delta_;
};

}  // namespace nashgrid
