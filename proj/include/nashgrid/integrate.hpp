#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nashgrid/dynamics.hpp"

namespace nashgrid {

struct IntegratorConfig {
    double step_h = 1e-3;        // fixed step, simulated-time units
    double t_max = 2000.0;       // horizon
    int sample_every = 100;      // sampling stride in steps
    double stop_tol = 1e-8;      // residual threshold, checked per sample
    double diverge_bound = 1e6;  // state-norm abort threshold

    void validate() const;  // throws on violated invariants

    bool operator==(const IntegratorConfig&) const = default;
};

enum class StopReason { Converged, Horizon, Diverged, NumericFailure };

std::string to_string(StopReason reason);

/// Time-sampled states plus the derived series rendered into trajectory
/// files. The first sample is the initial condition and the final state is
/// always included, whatever the sampling stride.
struct Trajectory {
    std::vector<double> times;
    std::vector<SimState> states;
    std::vector<double> aggregate;              // sum of l per sample
    std::vector<double> price;                  // P(aggregate)
    std::vector<double> residual;               // delta-independent residual
    std::vector<double> potential_q;            // empty for non-potential models
    std::vector<Eigen::VectorXd> player_cost;   // C_i(l_i, aggregate) per sample

    size_t size() const noexcept { return times.size(); }
};

struct IntegrationResult {
    Trajectory trajectory;
    StopReason reason = StopReason::Horizon;
    double wall_seconds = 0.0;
};

namespace detail {
void require_finite_derivative(const SimState& d);
}

/// Classical fixed-step 4th-order Runge-Kutta update. Deterministic; throws
/// NonFiniteDerivative when a stage derivative contains NaN/inf.
template <typename Rhs>
SimState rk4_step(Rhs&& rhs, const SimState& state, double h) {
    const SimState k1 = rhs(state);
    detail::require_finite_derivative(k1);
    const SimState k2 = rhs(add_scaled(state, k1, 0.5 * h));
    detail::require_finite_derivative(k2);
    const SimState k3 = rhs(add_scaled(state, k2, 0.5 * h));
    detail::require_finite_derivative(k3);
    const SimState k4 = rhs(add_scaled(state, k3, h));
    detail::require_finite_derivative(k4);

    SimState out;
    const double w = h / 6.0;
    out.l = state.l + w * (k1.l + 2.0 * k2.l + 2.0 * k3.l + k4.l);
    out.D = state.D + w * (k1.D + 2.0 * k2.D + 2.0 * k3.D + k4.D);
    out.kappa = state.kappa + w * (k1.kappa + 2.0 * k2.kappa + 2.0 * k3.kappa + k4.kappa);
    out.zeta = state.zeta + w * (k1.zeta + 2.0 * k2.zeta + 2.0 * k3.zeta + k4.zeta);
    return out;
}

/// Steps the flow until the sampled residual drops below stop_tol
/// (Converged), the horizon is reached (Horizon), the state norm exceeds
/// diverge_bound (Diverged), or a derivative turns non-finite
/// (NumericFailure, partial trajectory).
IntegrationResult integrate(const Flow& flow, const SimState& initial,
                            const IntegratorConfig& cfg);

}  // namespace nashgrid
