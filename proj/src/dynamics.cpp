#include "nashgrid/dynamics.hpp"

#include <cmath>

namespace nashgrid {

namespace {

void require_connected(const Graph& g) {
    if (!g.connected()) {
        throw Error(ErrorCode::NotConnected, "seeking dynamics require a connected graph");
    }
}

void require_positive_delta(double delta) {
    if (!(delta > 0.0)) {
        throw Error(ErrorCode::NonPositiveDelta, "delta must be positive");
    }
}

Eigen::VectorXd consensus_drive(const GameSpec& spec, const SimState& state) {
    const int n = spec.size();
    Eigen::VectorXd drive(n);
    for (int i = 0; i < n; ++i) {
        const auto& p = spec.players[static_cast<size_t>(i)];
        drive(i) = static_cast<double>(n) * (p.is_stubborn() ? *p.stubborn : state.l(i));
    }
    return drive;
}

// Shared consensus + action-step assembly; `bracket` supplies the seeking
// direction for a rational player.
template <typename Bracket>
SimState assemble_rhs(const GameSpec& spec, const Graph& g, const SimState& state, double delta,
                      Bracket&& bracket) {
    require_connected(g);
    require_positive_delta(delta);
    SimState d;
    auto [dD, dkappa] = consensus_rhs(g, state, consensus_drive(spec, state));
    d.D = std::move(dD);
    d.kappa = std::move(dkappa);
    d.l.resize(spec.size());
    for (int i = 0; i < spec.size(); ++i) {
        const auto& p = spec.players[static_cast<size_t>(i)];
        d.l(i) = p.is_stubborn() ? 0.0 : -delta * p.gain_k * bracket(i, p);
    }
    d.zeta.resize(0);
    return d;
}

}  // namespace

std::string to_string(StrategyMode mode) {
    switch (mode) {
        case StrategyMode::General: return "general";
        case StrategyMode::PrimalDual: return "primal_dual";
        case StrategyMode::Inner: return "inner";
    }
    return "unknown";
}

bool SimState::all_finite() const {
    return l.allFinite() && D.allFinite() && kappa.allFinite() && zeta.allFinite();
}

double SimState::squared_norm() const {
    return l.squaredNorm() + D.squaredNorm() + kappa.squaredNorm() + zeta.squaredNorm();
}

double SimState::norm() const {
    return std::sqrt(squared_norm());
}

SimState add_scaled(const SimState& s, const SimState& d, double c) {
    SimState out;
    out.l = s.l + c * d.l;
    out.D = s.D + c * d.D;
    out.kappa = s.kappa + c * d.kappa;
    out.zeta = s.zeta + c * d.zeta;
    return out;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> consensus_rhs(const Graph& g, const SimState& state,
                                                          const Eigen::VectorXd& drive) {
    require_connected(g);
    const int n = g.size();
    if (state.D.size() != n || state.kappa.size() != n || drive.size() != n) {
        throw std::invalid_argument("consensus_rhs: state/drive sizes must match the graph");
    }
    Eigen::VectorXd dD(n);
    Eigen::VectorXd dkappa(n);
    for (int i = 0; i < n; ++i) {
        double d_gap = 0.0;      // sum_j (D_i - D_j) over neighbors
        double kappa_gap = 0.0;  // sum_j (kappa_i - kappa_j)
        for (int j : g.neighbors(i)) {
            d_gap += state.D(i) - state.D(j);
            kappa_gap += state.kappa(i) - state.kappa(j);
        }
        dD(i) = -state.D(i) - d_gap - kappa_gap + drive(i);
        dkappa(i) = d_gap;
    }
    return {std::move(dD), std::move(dkappa)};
}

SimState general_rhs(const GameSpec& spec, const Graph& g, const SimState& state, double delta) {
    return assemble_rhs(spec, g, state, delta, [&](int i, const PlayerSpec&) {
        return pseudo_gradient(spec, i, state.l(i), state.D(i));
    });
}

SimState inner_rhs(const GameSpec& spec, const Graph& g, const SimState& state, double delta) {
    if (!spec.hvac_linear()) {
        throw Error(ErrorCode::ModelNotPotential,
                    "inner_rhs: requires the quadratic-curtailment / linear-pricing model");
    }
    return assemble_rhs(spec, g, state, delta, [&](int i, const PlayerSpec& p) {
        return 2.0 * p.w * (state.l(i) - p.l_hat) + spec.pricing.price(state.D(i)) +
               spec.pricing.a * state.l(i);
    });
}

SimState primal_dual_rhs(const GameSpec& spec, const Graph& g, const SimState& state,
                         double delta) {
    if (!spec.hvac_linear()) {
        throw Error(ErrorCode::ModelNotPotential,
                    "primal_dual_rhs: requires the quadratic-curtailment / linear-pricing model");
    }
    if (state.zeta.size() != 2 * spec.size()) {
        throw std::invalid_argument("primal_dual_rhs: state.zeta must have 2N entries");
    }
    const Eigen::VectorXd eta = state.eta();
    SimState d = assemble_rhs(spec, g, state, delta, [&](int i, const PlayerSpec& p) {
        return 2.0 * p.w * (state.l(i) - p.l_hat) + spec.pricing.price(state.D(i)) +
               spec.pricing.a * state.l(i) - eta(2 * i) + eta(2 * i + 1);
    });
    // Multiplier flow eta_dot = delta * m * eta .* gap, integrated in log
    // space: zeta_dot = delta * m * gap keeps eta = exp(zeta) positive exactly.
    // A stubborn player runs only the consensus exchange; its multipliers
    // stay frozen (its box is ignored and its action never moves).
    d.zeta.resize(2 * spec.size());
    for (int i = 0; i < spec.size(); ++i) {
        const auto& p = spec.players[static_cast<size_t>(i)];
        if (p.is_stubborn()) {
            d.zeta(2 * i) = 0.0;
            d.zeta(2 * i + 1) = 0.0;
            continue;
        }
        d.zeta(2 * i) = delta * p.gain_m1 * (p.l_min - state.l(i));
        d.zeta(2 * i + 1) = delta * p.gain_m2 * (state.l(i) - p.l_max);
    }
    return d;
}

SimState seeking_rhs(const GameSpec& spec, const Graph& g, StrategyMode mode,
                     const SimState& state, double delta) {
    switch (mode) {
        case StrategyMode::General: return general_rhs(spec, g, state, delta);
        case StrategyMode::PrimalDual: return primal_dual_rhs(spec, g, state, delta);
        case StrategyMode::Inner: return inner_rhs(spec, g, state, delta);
    }
    throw std::invalid_argument("seeking_rhs: unknown strategy mode");
}

double residual(const GameSpec& spec, const Graph& g, StrategyMode mode, const SimState& state) {
    const SimState d = seeking_rhs(spec, g, mode, state, 1.0);
    double sq = d.l.squaredNorm() + d.D.squaredNorm() + d.kappa.squaredNorm();
    if (state.zeta.size() > 0) {
        sq += (state.eta().cwiseProduct(d.zeta)).squaredNorm();
    }
    return std::sqrt(sq);
}

Flow::Flow(const GameSpec& spec, const Graph& graph, StrategyMode mode, double delta)
    : spec_(&spec), graph_(&graph), mode_(mode), delta_(delta) {
    require_connected(graph);
    require_positive_delta(delta);
    if (graph.size() != spec.size()) {
        throw std::invalid_argument("flow: graph size must match the number of players");
    }
    if (mode != StrategyMode::General && !spec.hvac_linear()) {
        throw Error(ErrorCode::ModelNotPotential,
                    to_string(mode) + " strategy requires the quadratic/linear model");
    }
}

}  // namespace nashgrid
