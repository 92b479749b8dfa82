#include "nashgrid/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nashgrid {

namespace {

constexpr double kSweepTol = 1e-12;     // per-sweep fixed-point tolerance
constexpr double kKktTol = 1e-8;        // stationarity residual bound
constexpr int kMaxSweeps = 100000;

void require_hvac(const GameSpec& spec, const char* op) {
    if (!spec.hvac_linear()) {
        throw Error(ErrorCode::ModelNotPotential,
                    std::string(op) + ": oracle requires the quadratic/linear model");
    }
}

void require_uniqueness(const GameSpec& spec, const char* op) {
    if (!check_uniqueness_condition(spec)) {
        throw Error(ErrorCode::ConditionViolated,
                    std::string(op) + ": uniqueness condition a < min_i 2 w_i / (N - 3) violated");
    }
}

double clamp(double x, double lo, double hi) {
    return std::min(std::max(x, lo), hi);
}

// Stationarity residual and multipliers at a candidate box-constrained
// minimizer of Q, via the KKT conditions.
void fill_kkt(const GameSpec& spec, EquilibriumResult& result) {
    const int n = spec.size();
    const double total = result.l_star.sum();
    result.eta_star = Eigen::VectorXd::Zero(2 * n);
    result.active_lower.clear();
    result.active_upper.clear();
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto& p = spec.players[static_cast<size_t>(i)];
        const double g = pseudo_gradient(spec, i, result.l_star(i), total);
        double violation;
        if (result.l_star(i) == p.l_min && g > 0.0) {
            result.active_lower.push_back(i);
            result.eta_star(2 * i) = g;  // g - eta_lower = 0
            violation = 0.0;
        } else if (result.l_star(i) == p.l_max && g < 0.0) {
            result.active_upper.push_back(i);
            result.eta_star(2 * i + 1) = -g;  // g + eta_upper = 0
            violation = 0.0;
        } else {
            violation = std::abs(g);
        }
        worst = std::max(worst, violation);
    }
    result.stationarity_residual = worst;
}

}  // namespace

EquilibriumResult inner_equilibrium(const GameSpec& spec) {
    require_hvac(spec, "inner_equilibrium");
    require_uniqueness(spec, "inner_equilibrium");
    const int n = spec.size();
    const Eigen::MatrixXd h = hessian_Q(spec);
    Eigen::VectorXd b(n);
    for (int i = 0; i < n; ++i) {
        const auto& p = spec.players[static_cast<size_t>(i)];
        b(i) = 2.0 * p.w * p.l_hat - spec.pricing.p0;
    }
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(h);
    EquilibriumResult result;
    result.l_star = lu.solve(b);
    // The uniqueness condition makes H strictly diagonally dominant, so the
    // solve cannot silently degenerate; verify anyway.
    if ((h * result.l_star - b).cwiseAbs().maxCoeff() > 1e-6 * (1.0 + b.cwiseAbs().maxCoeff())) {
        throw Error(ErrorCode::SingularSystem, "inner_equilibrium: linear solve failed");
    }
    result.aggregate = result.l_star.sum();
    fill_kkt(spec, result);
    for (int i = 0; i < n; ++i) {
        const auto& p = spec.players[static_cast<size_t>(i)];
        if (result.l_star(i) < p.l_min || result.l_star(i) > p.l_max) {
            throw Error(ErrorCode::NotInner,
                        "inner_equilibrium: player " + std::to_string(i) +
                            " violates its box bound; use constrained_equilibrium");
        }
    }
    return result;
}

EquilibriumResult constrained_equilibrium(const GameSpec& spec) {
    require_hvac(spec, "constrained_equilibrium");
    require_uniqueness(spec, "constrained_equilibrium");
    const int n = spec.size();
    Eigen::VectorXd l(n);
    for (int i = 0; i < n; ++i) {
        const auto& p = spec.players[static_cast<size_t>(i)];
        l(i) = clamp(p.l_hat, p.l_min, p.l_max);
    }
    double total = l.sum();
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double largest_move = 0.0;
        for (int i = 0; i < n; ++i) {
            const double updated = best_response(spec, i, total - l(i));
            largest_move = std::max(largest_move, std::abs(updated - l(i)));
            total += updated - l(i);
            l(i) = updated;
        }
        if (largest_move < kSweepTol) {
            break;
        }
    }
    // Refresh the aggregate to shed incremental-update roundoff.
    total = l.sum();

    EquilibriumResult result;
    result.l_star = std::move(l);
    result.aggregate = total;
    fill_kkt(spec, result);
    if (result.stationarity_residual > kKktTol) {
        throw Error(ErrorCode::SingularSystem,
                    "constrained_equilibrium: best-response iteration did not reach a KKT point");
    }
    return result;
}

double best_response(const GameSpec& spec, int i, double others_sum) {
    require_hvac(spec, "best_response");
    if (i < 0 || i >= spec.size()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "best_response: player index " + std::to_string(i) + " out of range");
    }
    const auto& p = spec.players[static_cast<size_t>(i)];
    const double unconstrained = (2.0 * p.w * p.l_hat - spec.pricing.p0 -
                                  spec.pricing.a * others_sum) /
                                 (2.0 * p.w + 2.0 * spec.pricing.a);
    return clamp(unconstrained, p.l_min, p.l_max);
}

EquilibriumResult stubborn_equilibrium(const GameSpec& spec) {
    require_hvac(spec, "stubborn_equilibrium");
    const std::vector<int> stubborn = spec.stubborn_players();
    if (stubborn.empty()) {
        throw Error(ErrorCode::NoStubbornPlayer, "stubborn_equilibrium: no stubborn player");
    }
    require_uniqueness(spec, "stubborn_equilibrium");

    double stubborn_total = 0.0;
    for (int i : stubborn) {
        stubborn_total += *spec.players[static_cast<size_t>(i)].stubborn;
    }

    // Reduced game over the rational players: the stubborn total only shifts
    // the base price, p0' = p0 + a * sum of fixed consumptions.
    GameSpec reduced;
    reduced.pricing = spec.pricing;
    reduced.pricing.p0 += spec.pricing.a * stubborn_total;
    std::vector<int> rational;
    for (int i = 0; i < spec.size(); ++i) {
        const auto& p = spec.players[static_cast<size_t>(i)];
        if (!p.is_stubborn()) {
            rational.push_back(i);
            reduced.players.push_back(p);
        }
    }

    const int n = spec.size();
    EquilibriumResult result;
    result.l_star.resize(n);
    result.eta_star = Eigen::VectorXd::Zero(2 * n);
    for (int i : stubborn) {
        result.l_star(i) = *spec.players[static_cast<size_t>(i)].stubborn;
    }
    if (!rational.empty()) {
        const EquilibriumResult sub = constrained_equilibrium(reduced);
        for (size_t k = 0; k < rational.size(); ++k) {
            const int i = rational[k];
            result.l_star(i) = sub.l_star(static_cast<Eigen::Index>(k));
            result.eta_star(2 * i) = sub.eta_star(static_cast<Eigen::Index>(2 * k));
            result.eta_star(2 * i + 1) = sub.eta_star(static_cast<Eigen::Index>(2 * k + 1));
        }
        for (int k : sub.active_lower) {
            result.active_lower.push_back(rational[static_cast<size_t>(k)]);
        }
        for (int k : sub.active_upper) {
            result.active_upper.push_back(rational[static_cast<size_t>(k)]);
        }
        result.stationarity_residual = sub.stationarity_residual;
    }
    result.aggregate = result.l_star.sum();
    return result;
}

NashCheck verify_nash(const GameSpec& spec, const Eigen::VectorXd& l, int grid_points,
                      double eps) {
    if (grid_points < 2) {
        throw std::invalid_argument("verify_nash: grid_points must be >= 2");
    }
    if (l.size() != spec.size()) {
        throw std::invalid_argument("verify_nash: profile size must match the number of players");
    }
    const double total = l.sum();
    NashCheck check;
    check.is_nash = true;
    for (int i = 0; i < spec.size(); ++i) {
        const auto& p = spec.players[static_cast<size_t>(i)];
        if (p.is_stubborn()) {
            continue;  // a stubborn player has no choice to deviate
        }
        if (!std::isfinite(p.l_min) || !std::isfinite(p.l_max)) {
            throw std::invalid_argument(
                "verify_nash: player " + std::to_string(i) + " has an unbounded action box");
        }
        const double others = total - l(i);
        const double current = cost(spec, i, l(i), total);
        const double span = p.l_max - p.l_min;
        for (int k = 0; k < grid_points; ++k) {
            const double x =
                p.l_min + span * static_cast<double>(k) / static_cast<double>(grid_points - 1);
            const double improvement = current - cost(spec, i, x, others + x);
            if (improvement > check.worst_improvement) {
                check.worst_improvement = improvement;
                check.worst_player = i;
                check.worst_action = x;
            }
        }
    }
    check.is_nash = check.worst_improvement <= eps;
    return check;
}

}  // namespace nashgrid
