#include "nashgrid/integrate.hpp"

#include <chrono>
#include <cmath>

namespace nashgrid {

void IntegratorConfig::validate() const {
    std::vector<std::string> bad;
    if (!(step_h > 0.0)) bad.push_back("step_h must be > 0");
    if (!(t_max >= 0.0)) bad.push_back("t_max must be >= 0");
    if (sample_every < 1) bad.push_back("sample_every must be >= 1");
    if (!(stop_tol >= 0.0)) bad.push_back("stop_tol must be >= 0");
    if (!(diverge_bound > 0.0)) bad.push_back("diverge_bound must be > 0");
    if (!bad.empty()) {
        std::string msg = "integrator config invalid:";
        for (const auto& b : bad) msg += " " + b + ";";
        throw Error(ErrorCode::ValidationError, msg);
    }
}

std::string to_string(StopReason reason) {
    switch (reason) {
        case StopReason::Converged: return "converged";
        case StopReason::Horizon: return "horizon";
        case StopReason::Diverged: return "diverged";
        case StopReason::NumericFailure: return "numeric_failure";
    }
    return "unknown";
}

namespace detail {
void require_finite_derivative(const SimState& d) {
    if (!d.all_finite()) {
        throw Error(ErrorCode::NonFiniteDerivative, "state derivative is not finite");
    }
}
}  // namespace detail

IntegrationResult integrate(const Flow& flow, const SimState& initial,
                            const IntegratorConfig& cfg) {
    cfg.validate();
    if (!initial.all_finite()) {
        throw std::invalid_argument("integrate: initial state must be finite");
    }
    const auto wall_start = std::chrono::steady_clock::now();

    IntegrationResult result;
    Trajectory& traj = result.trajectory;
    const GameSpec& spec = flow.spec();
    const bool has_potential = spec.hvac_linear();

    auto sample = [&](double t, const SimState& s) -> double {
        const double agg = s.l.sum();
        const double r = flow.residual_at(s);
        traj.times.push_back(t);
        traj.states.push_back(s);
        traj.aggregate.push_back(agg);
        traj.price.push_back(spec.pricing.price(agg));
        traj.residual.push_back(r);
        if (has_potential) {
            traj.potential_q.push_back(potential(spec, s.l));
        }
        Eigen::VectorXd costs(spec.size());
        for (int i = 0; i < spec.size(); ++i) {
            costs(i) = cost(spec, i, s.l(i), agg);
        }
        traj.player_cost.push_back(std::move(costs));
        return r;
    };

    auto finish = [&](StopReason reason) {
        result.reason = reason;
        result.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
        return result;
    };

    SimState state = initial;
    if (sample(0.0, state) < cfg.stop_tol) {
        return finish(StopReason::Converged);
    }

    // Integer step count keeps t = k*h exact and the loop deterministic.
    const long long max_steps =
        static_cast<long long>(std::ceil(cfg.t_max / cfg.step_h - 1e-9));
    long long step = 0;
    while (step < max_steps) {
        try {
            state = rk4_step(flow, state, cfg.step_h);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::NonFiniteDerivative) {
                return finish(StopReason::NumericFailure);
            }
            throw;
        }
        ++step;
        const double t = static_cast<double>(step) * cfg.step_h;
        if (!state.all_finite()) {
            return finish(StopReason::NumericFailure);
        }
        if (state.norm() > cfg.diverge_bound) {
            sample(t, state);
            return finish(StopReason::Diverged);
        }
        if (step % cfg.sample_every == 0) {
            if (sample(t, state) < cfg.stop_tol) {
                return finish(StopReason::Converged);
            }
        }
    }
    if (max_steps % cfg.sample_every != 0 && max_steps > 0) {
        sample(static_cast<double>(max_steps) * cfg.step_h, state);
    }
    return finish(StopReason::Horizon);
}

}  // namespace nashgrid
