#include "nashgrid/game.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nashgrid {

namespace {

void require_player_index(const GameSpec& spec, int i) {
    if (i < 0 || i >= spec.size()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "player index " + std::to_string(i) + " out of range for " +
                        std::to_string(spec.size()) + " players");
    }
}

void require_hvac_linear(const GameSpec& spec, const char* op) {
    if (!spec.hvac_linear()) {
        throw Error(ErrorCode::ModelNotPotential,
                    std::string(op) + ": requires the quadratic-curtailment / linear-pricing model");
    }
}

}  // namespace

double Polynomial::value(double x) const {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

double Polynomial::slope(double x) const {
    double acc = 0.0;
    for (size_t k = coeffs.size(); k-- > 1;) {
        acc = acc * x + static_cast<double>(k) * coeffs[k];
    }
    return acc;
}

double Polynomial::curvature(double x) const {
    double acc = 0.0;
    for (size_t k = coeffs.size(); k-- > 2;) {
        acc = acc * x + static_cast<double>(k) * static_cast<double>(k - 1) * coeffs[k];
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    Polynomial d;
    if (coeffs.size() > 1) {
        d.coeffs.resize(coeffs.size() - 1);
        for (size_t k = 1; k < coeffs.size(); ++k) {
            d.coeffs[k - 1] = static_cast<double>(k) * coeffs[k];
        }
    }
    return d;
}

double PlayerSpec::curtailment_value(double l) const {
    if (curtailment) {
        return curtailment->value(l);
    }
    const double d = l - l_hat;
    return w * d * d;
}

double PlayerSpec::curtailment_slope(double l) const {
    if (curtailment) {
        return curtailment->slope(l);
    }
    return 2.0 * w * (l - l_hat);
}

double PlayerSpec::curtailment_curvature(double l) const {
    if (curtailment) {
        return curtailment->curvature(l);
    }
    return 2.0 * w;
}

double PricingSpec::price(double aggregate) const {
    if (curve) {
        return curve->value(aggregate);
    }
    return a * aggregate + p0;
}

double PricingSpec::slope(double aggregate) const {
    if (curve) {
        return curve->slope(aggregate);
    }
    return a;
}

double PricingSpec::curvature(double aggregate) const {
    if (curve) {
        return curve->curvature(aggregate);
    }
    return 0.0;
}

bool GameSpec::hvac_linear() const {
    if (pricing.curve) {
        return false;
    }
    for (const auto& p : players) {
        if (p.curtailment) {
            return false;
        }
    }
    return true;
}

std::vector<int> GameSpec::stubborn_players() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        if (players[static_cast<size_t>(i)].is_stubborn()) {
            out.push_back(i);
        }
    }
    return out;
}

double cost(const GameSpec& spec, int i, double l_i, double aggregate) {
    require_player_index(spec, i);
    const auto& p = spec.players[static_cast<size_t>(i)];
    return p.curtailment_value(l_i) + spec.pricing.price(aggregate) * l_i;
}

double pseudo_gradient(const GameSpec& spec, int i, double l_i, double estimate) {
    require_player_index(spec, i);
    const auto& p = spec.players[static_cast<size_t>(i)];
    return p.curtailment_slope(l_i) + spec.pricing.price(estimate) +
           l_i * spec.pricing.slope(estimate);
}

double potential(const GameSpec& spec, const Eigen::VectorXd& l) {
    require_hvac_linear(spec, "potential");
    const double a = spec.pricing.a;
    const double p0 = spec.pricing.p0;
    const double total = l.sum();
    // sum over unordered pairs: sum_{i<j} l_i l_j = (total^2 - sum l_i^2) / 2
    const double cross = 0.5 * (total * total - l.squaredNorm());
    double q = a * cross;
    for (int i = 0; i < spec.size(); ++i) {
        const auto& p = spec.players[static_cast<size_t>(i)];
        const double d = l(i) - p.l_hat;
        q += p.w * d * d + a * l(i) * l(i) + p0 * l(i);
    }
    return q;
}

Eigen::VectorXd potential_gradient(const GameSpec& spec, const Eigen::VectorXd& l) {
    require_hvac_linear(spec, "potential_gradient");
    const double total = l.sum();
    Eigen::VectorXd grad(spec.size());
    for (int i = 0; i < spec.size(); ++i) {
        grad(i) = pseudo_gradient(spec, i, l(i), total);
    }
    return grad;
}

bool check_uniqueness_condition(const GameSpec& spec) {
    require_hvac_linear(spec, "check_uniqueness_condition");
    const int n = spec.size();
    if (n <= 3) {
        return true;
    }
    double min_w = std::numeric_limits<double>::infinity();
    for (const auto& p : spec.players) {
        min_w = std::min(min_w, p.w);
    }
    return spec.pricing.a < 2.0 * min_w / static_cast<double>(n - 3);
}

Eigen::MatrixXd jacobian_B(const GameSpec& spec, const Eigen::VectorXd& l) {
    const int n = spec.size();
    const double total = l.sum();
    const double p_slope = spec.pricing.slope(total);
    const double p_curv = spec.pricing.curvature(total);
    Eigen::MatrixXd b(n, n);
    for (int i = 0; i < n; ++i) {
        const auto& p = spec.players[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j) {
            b(i, j) = p_slope + l(i) * p_curv;
        }
        b(i, i) += p.curtailment_curvature(l(i)) + p_slope;
    }
    return b;
}

bool is_strictly_diagonally_dominant(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorCode::NotSquare, "is_strictly_diagonally_dominant: matrix is not square");
    }
    for (int i = 0; i < m.rows(); ++i) {
        const double off = m.row(i).cwiseAbs().sum() - std::abs(m(i, i));
        if (std::abs(m(i, i)) <= off) {
            return false;
        }
    }
    return true;
}

Eigen::MatrixXd hessian_Q(const GameSpec& spec) {
    require_hvac_linear(spec, "hessian_Q");
    const int n = spec.size();
    const double a = spec.pricing.a;
    Eigen::MatrixXd h = Eigen::MatrixXd::Constant(n, n, a);
    for (int i = 0; i < n; ++i) {
        h(i, i) = 2.0 * spec.players[static_cast<size_t>(i)].w + 2.0 * a;
    }
    return h;
}

double lagrangian(const GameSpec& spec, const Eigen::VectorXd& l, const Eigen::VectorXd& eta) {
    require_hvac_linear(spec, "lagrangian");
    if (eta.size() != 2 * spec.size()) {
        throw std::invalid_argument("lagrangian: eta must have 2N entries");
    }
    if ((eta.array() < 0.0).any()) {
        throw Error(ErrorCode::NegativeMultiplier, "lagrangian: multipliers must be nonnegative");
    }
    double value = potential(spec, l);
    for (int i = 0; i < spec.size(); ++i) {
        const auto& p = spec.players[static_cast<size_t>(i)];
        value += eta(2 * i) * (p.l_min - l(i)) + eta(2 * i + 1) * (l(i) - p.l_max);
    }
    return value;
}

}  // namespace nashgrid
