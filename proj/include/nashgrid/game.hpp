#pragma once

#include <Eigen/Dense>
#include <limits>
#include <optional>
#include <vector>

#include "nashgrid/errors.hpp"

namespace nashgrid {

/// Dense polynomial in one variable, coeffs[k] multiplies x^k.
struct Polynomial {
    std::vector<double> coeffs;

    double value(double x) const;
    double slope(double x) const;      // first derivative
    double curvature(double x) const;  // second derivative
    Polynomial derivative() const;

    bool operator==(const Polynomial&) const = default;
};

/// One electricity user. The default cost of reduced comfort is the quadratic
/// w*(l - l_hat)^2; setting `curtailment` replaces it with an arbitrary
/// polynomial (general-strategy mode). A stubborn player keeps consumption
/// fixed at `*stubborn` and its box bounds are ignored.
struct PlayerSpec {
    double w = 1.0;      // curvature weight of the quadratic comfort cost
    double l_hat = 0.0;  // comfort target (kWh)
    double l_min = -std::numeric_limits<double>::infinity();
    double l_max = std::numeric_limits<double>::infinity();
    double gain_k = 1.0;
    double gain_m1 = 1.0;
    double gain_m2 = 1.0;
    std::optional<double> stubborn;
    std::optional<Polynomial> curtailment;

    bool is_stubborn() const noexcept { return stubborn.has_value(); }

    double curtailment_value(double l) const;
    double curtailment_slope(double l) const;
    double curtailment_curvature(double l) const;

    bool operator==(const PlayerSpec&) const = default;
};

/// Price per kWh as a function of the aggregate consumption. Linear
/// a*aggregate + p0 by default; `curve` replaces it with a polynomial.
struct PricingSpec {
    double a = 0.0;
    double p0 = 0.0;
    std::optional<Polynomial> curve;

    double price(double aggregate) const;
    double slope(double aggregate) const;
    double curvature(double aggregate) const;

    bool operator==(const PricingSpec&) const = default;
};

struct GameSpec {
    std::vector<PlayerSpec> players;
    PricingSpec pricing;

    int size() const noexcept { return static_cast<int>(players.size()); }

    /// True when every curtailment cost is the quadratic form and the pricing
    /// is linear; the potential function, oracle and the constrained seeking
    /// strategies only exist in this mode.
    bool hvac_linear() const;

    std::vector<int> stubborn_players() const;

    bool operator==(const GameSpec&) const = default;
};

/// C_i(l_i, aggregate) = V_i(l_i) + P(aggregate) * l_i.
double cost(const GameSpec& spec, int i, double l_i, double aggregate);

/// Player i's seeking direction V_i'(l_i) + P(estimate) + l_i * P'(estimate),
/// evaluated at its own action and its estimate of the aggregate.
double pseudo_gradient(const GameSpec& spec, int i, double l_i, double estimate);

/// Potential function of the game in hvac/linear mode:
/// Q(l) = sum_i w_i (l_i - l_hat_i)^2 + a * sum_{i<j} l_i l_j
///        + sum_i (a l_i^2 + p0 l_i).
/// Each unordered cross pair enters once; that is the normalization under
/// which dQ/dl_i coincides with the players' own cost gradients.
double potential(const GameSpec& spec, const Eigen::VectorXd& l);

/// Gradient of Q; component i equals pseudo_gradient(spec, i, l_i, sum(l)).
Eigen::VectorXd potential_gradient(const GameSpec& spec, const Eigen::VectorXd& l);

/// True iff N <= 3 or a < min_i 2 w_i / (N - 3). Guarantees a unique Nash
/// equilibrium in hvac/linear mode.
bool check_uniqueness_condition(const GameSpec& spec);

/// B_ij = d^2 C_i / (dl_i dl_j) at the profile l. Constant in l for the
/// hvac/linear model: diagonal 2 w_i + 2a, off-diagonal a.
Eigen::MatrixXd jacobian_B(const GameSpec& spec, const Eigen::VectorXd& l);

bool is_strictly_diagonally_dominant(const Eigen::MatrixXd& m);

/// Hessian of Q (hvac/linear mode only); constant in l.
Eigen::MatrixXd hessian_Q(const GameSpec& spec);

/// L(l, eta) = Q(l) + sum_i [eta_{2i} (l_min_i - l_i) + eta_{2i+1} (l_i - l_max_i)].
/// Multipliers are ordered (lower_0, upper_0, lower_1, upper_1, ...).
double lagrangian(const GameSpec& spec, const Eigen::VectorXd& l, const Eigen::VectorXd& eta);

}  // namespace nashgrid
