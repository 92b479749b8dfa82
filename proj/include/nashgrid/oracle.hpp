#pragma once

#include <Eigen/Dense>
#include <vector>

#include "nashgrid/game.hpp"

namespace nashgrid {

/// Equilibrium computed independently of the seeking dynamics. Multipliers
/// are ordered (lower_0, upper_0, lower_1, upper_1, ...); box and
/// complementary-slackness invariants apply to the rational players (a
/// stubborn player's fixed consumption may sit outside its box).
struct EquilibriumResult {
    Eigen::VectorXd l_star;
    double aggregate = 0.0;
    Eigen::VectorXd eta_star;
    std::vector<int> active_lower;
    std::vector<int> active_upper;
    double stationarity_residual = 0.0;
};

/// Solves the unconstrained stationarity system H l = b (b_i = 2 w_i l_hat_i - p0)
/// by direct elimination with partial pivoting. Throws NotInner when the
/// solution violates a box bound; use constrained_equilibrium then.
EquilibriumResult inner_equilibrium(const GameSpec& spec);

/// Minimizes the strictly convex potential over the box via cyclic projected
/// best-response sweeps (a contraction under the uniqueness condition),
/// then recovers multipliers from stationarity at the active bounds.
EquilibriumResult constrained_equilibrium(const GameSpec& spec);

/// argmin over [l_min_i, l_max_i] of C_i(x, x + others_sum):
/// clamp((2 w_i l_hat_i - p0 - a * others_sum) / (2 w_i + 2 a)).
double best_response(const GameSpec& spec, int i, double others_sum);

/// Fixes stubborn coordinates and solves the reduced game (the stubborn total
/// folds into the base price) for the rational players' best responses.
EquilibriumResult stubborn_equilibrium(const GameSpec& spec);

struct NashCheck {
    bool is_nash = false;
    double worst_improvement = 0.0;  // largest cost reduction found by a unilateral deviation
    int worst_player = -1;
    double worst_action = 0.0;
};

/// Brute-force unilateral-deviation scan: for each rational player, tries
/// grid_points equally spaced actions across its box (adjusting the
/// aggregate); the profile passes when no deviation improves its cost by
/// more than eps.
NashCheck verify_nash(const GameSpec& spec, const Eigen::VectorXd& l, int grid_points, double eps);

}  // namespace nashgrid
