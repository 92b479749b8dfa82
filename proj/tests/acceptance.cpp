// Acceptance suite: replays the benchmark scenarios against their expected values and the
// analytical guarantees end to end, one pass/fail line per criterion.

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "nashgrid/commands.hpp"
#include "test_util.hpp"

using namespace nashgrid;
namespace fs = std::filesystem;

namespace {

struct Harness {
    int failures = 0;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            detail << "    failed: " << what << "\n";
        }
    }
};

int run_criterion(int number, const std::string& name, const std::function<void(Harness&)>& body) {
    Harness h;
    try {
        body(h);
    } catch (const std::exception& e) {
        ++h.failures;
        h.detail << "    exception: " << e.what() << "\n";
    }
    std::cout << (h.failures == 0 ? "[PASS] " : "[FAIL] ") << number << ". " << name << "\n"
              << h.detail.str();
    return h.failures == 0 ? 0 : 1;
}

double elapsed_ms(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

nlohmann::json read_json(const fs::path& path) {
    std::ifstream f(path);
    return nlohmann::json::parse(f);
}

fs::path fresh_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("nashgrid_acceptance_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

struct LineFit {
    double slope = 0.0;
    double r_squared = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
        syy += y[i] * y[i];
    }
    LineFit fit;
    const double cov = sxy - sx * sy / n;
    const double var_x = sxx - sx * sx / n;
    const double var_y = syy - sy * sy / n;
    fit.slope = cov / var_x;
    fit.r_squared = (cov * cov) / (var_x * var_y);
    return fit;
}

Eigen::VectorXd reference(std::initializer_list<double> values) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double x : values) {
        v(i++) = x;
    }
    return v;
}

IntegrationResult run_bundled(const std::string& name) {
    const Scenario scenario = parse_scenario(bundled_scenario_text(name));
    const Graph g = scenario.build_graph();
    const Flow flow(scenario.game, g, scenario.strategy, scenario.delta);
    return integrate(flow, initial_state(scenario), scenario.integrator);
}

}  // namespace

int main() {
    int failures = 0;
    const GameSpec table1 = parse_scenario(bundled_scenario_text("table1_inner")).game;

    failures += run_criterion(1, "inner equilibrium reproduction", [&](Harness& h) {
        const auto start = std::chrono::steady_clock::now();
        const EquilibriumResult eq = inner_equilibrium(table1);
        const double ms = elapsed_ms(start);
        const Eigen::VectorXd expected = reference({41.5, 46.4, 51.3, 56.2, 61.1});
        h.require((eq.l_star - expected).cwiseAbs().maxCoeff() < 0.05,
                  "components within 0.05 of the reference equilibrium");
        h.require(std::abs(eq.aggregate - 256.7) < 0.2, "aggregate within 0.2 of 256.7");
        h.require(ms < 10.0, "solve under 10 ms (took " + std::to_string(ms) + ")");
    });

    failures += run_criterion(2, "constrained equilibrium reproduction", [&](Harness& h) {
        const Scenario scenario = parse_scenario(bundled_scenario_text("table1_constrained"));
        const EquilibriumResult eq = constrained_equilibrium(scenario.game);
        const Eigen::VectorXd expected = reference({45.0, 46.4, 51.3, 56.2, 61.1});
        h.require((eq.l_star - expected).cwiseAbs().maxCoeff() < 0.05,
                  "components within 0.05 of the reference equilibrium");
        h.require(eq.active_lower == std::vector<int>{0} && eq.active_upper.empty(),
                  "active set is exactly {player 1 lower}");
        h.require(std::abs(eq.aggregate - 259.9) < 0.2,
                  "aggregate within 0.2 of 259.9 (components sum to 260.0)");
    });

    failures += run_criterion(3, "stubborn equilibrium reproduction", [&](Harness& h) {
        const Scenario scenario = parse_scenario(bundled_scenario_text("table1_stubborn"));
        const EquilibriumResult eq = stubborn_equilibrium(scenario.game);
        const Eigen::VectorXd expected = reference({40.8, 45.7, 50.6, 55.5});
        h.require((eq.l_star.head(4) - expected).cwiseAbs().maxCoeff() < 0.05,
                  "rational components within 0.05 of the reference best responses");
        h.require(std::abs(eq.aggregate - 292.7) < 0.2, "aggregate within 0.2 of 292.7");
    });

    failures += run_criterion(4, "seeking dynamics reach the oracle (inner)", [&](Harness& h) {
        const fs::path dir = fresh_dir("c4");
        const auto start = std::chrono::steady_clock::now();
        std::ostringstream out;
        const int code = cmd_simulate({"table1_inner", dir.string(), true}, out);
        const double wall = elapsed_ms(start) / 1000.0;
        h.require(code == kExitOk, "cmd_simulate exits 0");
        const nlohmann::json summary = read_json(dir / "summary.json");
        h.require(summary.at("stop_reason") == "converged", "stop reason CONVERGED");
        h.require(summary.at("error_vs_oracle").at("max").get<double>() < 0.05,
                  "max component error below 0.05");
        h.require(summary.at("final").at("consensus_error").get<double>() < 1e-4,
                  "consensus error below 1e-4 at termination");
        h.require(wall < 60.0, "wall time under 60 s");
        fs::remove_all(dir);
    });

    failures += run_criterion(5, "practical convergence under the constraint", [&](Harness& h) {
        const fs::path dir = fresh_dir("c5");
        std::ostringstream out;
        const int code = cmd_simulate({"table1_constrained", (dir / "base").string(), true}, out);
        h.require(code == kExitOk, "cmd_simulate exits 0");
        const nlohmann::json base = read_json(dir / "base" / "summary.json");
        const double err = base.at("error_vs_oracle").at("max").get<double>();
        h.require(err < 0.1, "max component error below 0.1");

        nlohmann::json doc = nlohmann::json::parse(bundled_scenario_text("table1_constrained"));
        doc["delta"] = doc["delta"].get<double>() / 2.0;
        const fs::path halved = dir / "halved.json";
        {
            std::ofstream f(halved);
            f << doc.dump();
        }
        const int code2 = cmd_simulate({halved.string(), (dir / "half").string(), true}, out);
        h.require(code2 == kExitOk, "halved-delta run exits 0");
        const nlohmann::json half = read_json(dir / "half" / "summary.json");
        const double err_half = half.at("error_vs_oracle").at("max").get<double>();
        h.require(err_half <= 1.1 * err,
                  "halving delta does not grow the final error by more than 10% (" +
                      std::to_string(err) + " -> " + std::to_string(err_half) + ")");
        fs::remove_all(dir);
    });

    failures += run_criterion(6, "stubborn dynamics track the best responses", [&](Harness& h) {
        const IntegrationResult run = run_bundled("table1_stubborn");
        h.require(run.reason == StopReason::Converged, "run converges");
        const Eigen::VectorXd expected = reference({40.8, 45.7, 50.6, 55.5});
        h.require(
            (run.trajectory.states.back().l.head(4) - expected).cwiseAbs().maxCoeff() < 0.1,
            "rational components within 0.1 of the reference best responses");
        bool pinned = true;
        for (const SimState& s : run.trajectory.states) {
            pinned = pinned && s.l(4) == 100.0;
        }
        h.require(pinned, "the stubborn consumption stays exactly 100 at every sample");
    });

    failures += run_criterion(7, "consensus tracks the aggregate on random graphs",
                              [&](Harness& h) {
        std::mt19937 rng(2024);
        std::uniform_int_distribution<int> size(2, 8);
        std::uniform_real_distribution<double> load(-50.0, 50.0);
        std::uniform_real_distribution<double> perturb(-5.0, 5.0);
        for (int trial = 0; trial < 50; ++trial) {
            const Graph g = testutil::random_connected_graph(rng, size(rng));
            const int n = g.size();
            Eigen::VectorXd l(n);
            SimState s;
            s.D.resize(n);
            s.kappa.resize(n);
            for (int i = 0; i < n; ++i) {
                l(i) = load(rng);
                s.D(i) = perturb(rng);
                s.kappa(i) = perturb(rng);
            }
            s.l = l;
            s.zeta.resize(0);
            const Eigen::VectorXd drive = static_cast<double>(n) * l;
            auto rhs = [&](const SimState& state) {
                SimState d;
                d.l = Eigen::VectorXd::Zero(n);
                auto [dD, dkappa] = consensus_rhs(g, state, drive);
                d.D = std::move(dD);
                d.kappa = std::move(dkappa);
                d.zeta.resize(0);
                return d;
            };
            // The decay line is fit on the Euclidean estimate error over
            // twelve decades: component-wise max dips through zero at the
            // beat frequency of near-degenerate modes, while the asymptotic
            // slope is the same. The 1e-6 convergence bound itself is
            // checked on the component-wise max, and the fit stays a safe
            // margin above the integrator's roundoff floor.
            const double h_step = 0.02;
            std::vector<double> times, errors;
            double err2 = (s.D.array() - l.sum()).matrix().norm();
            const double err0 = err2;
            double best_max = (s.D.array() - l.sum()).abs().maxCoeff();
            double t = 0.0;
            while (err2 >= 1e-12 * err0 && t < 4000.0) {
                times.push_back(t);
                errors.push_back(err2);
                for (int k = 0; k < 10; ++k) {
                    s = rk4_step(rhs, s, h_step);
                }
                t += 10 * h_step;
                err2 = (s.D.array() - l.sum()).matrix().norm();
                best_max = std::min(best_max, (s.D.array() - l.sum()).abs().maxCoeff());
            }
            h.require(best_max < 1e-6, "estimate error below 1e-6 (graph " +
                                           std::to_string(trial) + ", n=" + std::to_string(n) +
                                           ")");
            // fit once the fast boundary-layer modes are gone
            std::vector<double> ts, ls;
            for (size_t k = 0; k < times.size(); ++k) {
                if (errors[k] <= 1e-2 * err0) {
                    ts.push_back(times[k]);
                    ls.push_back(std::log(errors[k]));
                }
            }
            if (ts.size() < 5) {
                continue;  // convergence faster than the sampling grid
            }
            const LineFit fit = fit_line(ts, ls);
            h.require(fit.r_squared > 0.99, "affine log-error decay, R^2 > 0.99 (graph " +
                                                std::to_string(trial) + ", R^2 = " +
                                                std::to_string(fit.r_squared) + ")");
        }
    });

    failures += run_criterion(8, "kappa conservation and multiplier positivity", [&](Harness& h) {
        for (const std::string& name : bundled_scenario_names()) {
            const Scenario scenario = parse_scenario(bundled_scenario_text(name));
            const IntegrationResult run = run_bundled(name);
            h.require(run.reason == StopReason::Converged, name + " converges");
            const double kappa0 = run.trajectory.states.front().kappa.sum();
            for (size_t k = 0; k < run.trajectory.size(); ++k) {
                const double t = run.trajectory.times[k];
                const double drift = std::abs(run.trajectory.states[k].kappa.sum() - kappa0);
                if (drift > 1e-8 * std::max(1.0, t)) {
                    h.require(false, name + ": kappa drift " + std::to_string(drift) + " at t=" +
                                         std::to_string(t));
                    break;
                }
                if (scenario.strategy == StrategyMode::PrimalDual &&
                    !(run.trajectory.states[k].eta().array() > 0.0).all()) {
                    h.require(false, name + ": non-positive multiplier at t=" + std::to_string(t));
                    break;
                }
            }
        }
    });

    failures += run_criterion(9, "potential identity and reduced-flow equivalence",
                              [&](Harness& h) {
        std::mt19937 rng(31);
        std::uniform_int_distribution<int> size(1, 6);
        std::uniform_real_distribution<double> offset(-30.0, 30.0);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = size(rng);
            const GameSpec spec = testutil::random_hvac_game(rng, n);
            Eigen::VectorXd l(n);
            for (int i = 0; i < n; ++i) {
                l(i) = spec.players[static_cast<size_t>(i)].l_hat + offset(rng);
            }
            const double total = l.sum();
            for (int i = 0; i < n; ++i) {
                const double step = 1e-4 * std::max(1.0, std::abs(l(i)));
                Eigen::VectorXd up = l, down = l;
                up(i) += step;
                down(i) -= step;
                const double fd = (potential(spec, up) - potential(spec, down)) / (2.0 * step);
                const double pg = pseudo_gradient(spec, i, l(i), total);
                if (std::abs(fd - pg) > 1e-6 * std::max(1.0, std::abs(pg))) {
                    h.require(false, "finite-difference gradient mismatch (trial " +
                                         std::to_string(trial) + ")");
                }
            }
        }

        // reduced flow: estimates forced to the aggregate turn the inner
        // strategy into the gain-scaled potential descent
        const Graph ring = Graph::ring(5);
        std::uniform_real_distribution<double> wiggle(-10.0, 10.0);
        for (int trial = 0; trial < 50; ++trial) {
            SimState s;
            s.l.resize(5);
            for (int i = 0; i < 5; ++i) {
                s.l(i) = table1.players[static_cast<size_t>(i)].l_hat + wiggle(rng);
            }
            s.D = Eigen::VectorXd::Constant(5, s.l.sum());
            s.kappa = Eigen::VectorXd::Zero(5);
            const double delta = 0.05;
            const SimState d = inner_rhs(table1, ring, s, delta);
            const Eigen::VectorXd grad = potential_gradient(table1, s.l);
            for (int i = 0; i < 5; ++i) {
                const double expected = -delta * table1.players[static_cast<size_t>(i)].gain_k *
                                        grad(i);
                if (std::abs(d.l(i) - expected) > 1e-15 * std::max(1.0, std::abs(expected))) {
                    h.require(false, "reduced flow differs from the potential descent");
                }
            }
        }
    });

    failures += run_criterion(10, "oracle soundness on random games", [&](Harness& h) {
        const auto start = std::chrono::steady_clock::now();
        std::mt19937 rng(777);
        std::uniform_int_distribution<int> size(4, 8);
        for (int trial = 0; trial < 100; ++trial) {
            const GameSpec spec = testutil::random_hvac_game(rng, size(rng));
            if (!check_uniqueness_condition(spec)) {
                h.require(false, "generator produced a non-unique game");
                continue;
            }
            const EquilibriumResult eq = constrained_equilibrium(spec);
            bool invariants = eq.stationarity_residual < 1e-8;
            for (int i = 0; i < spec.size(); ++i) {
                const auto& p = spec.players[static_cast<size_t>(i)];
                invariants = invariants && eq.l_star(i) >= p.l_min && eq.l_star(i) <= p.l_max;
                if (eq.eta_star(2 * i) > 0.0) {
                    invariants = invariants && eq.l_star(i) == p.l_min;
                }
                if (eq.eta_star(2 * i + 1) > 0.0) {
                    invariants = invariants && eq.l_star(i) == p.l_max;
                }
            }
            if (!invariants) {
                h.require(false, "equilibrium invariants violated (trial " +
                                     std::to_string(trial) + ")");
            }
            if (!verify_nash(spec, eq.l_star, 1001, 1e-5).is_nash) {
                h.require(false, "verify_nash rejected the oracle (trial " +
                                     std::to_string(trial) + ")");
            }
        }
        h.require(elapsed_ms(start) < 5.0 * 60.0 * 1000.0, "suite runs under 5 minutes");
    });

    failures += run_criterion(11, "general-strategy stationarity (no-oracle substitute)",
                              [&](Harness& h) {
        // Quartic-plus-quadratic comfort costs around the benchmark targets;
        // no closed-form oracle exists, so termination is checked against the
        // game's own stationarity conditions plus the curvature-dominance
        // condition at the terminal point.
        GameSpec spec;
        const double targets[] = {50.0, 55.0, 60.0, 65.0, 70.0};
        const double bend = 5e-4;
        for (double t : targets) {
            PlayerSpec p;
            // w (l - t)^2 + bend (l - t)^4, expanded in the monomial basis
            const double t2 = t * t;
            p.curtailment = Polynomial{{t2 + bend * t2 * t2, -2.0 * t - 4.0 * bend * t * t2,
                                        1.0 + 6.0 * bend * t2, -4.0 * bend * t, bend}};
            spec.players.push_back(p);
        }
        spec.pricing.curve = Polynomial{{5.0, 0.04}};
        const Graph g = Graph::ring(5);
        const Flow flow(spec, g, StrategyMode::General, 0.05);
        SimState s0;
        s0.l.resize(5);
        for (int i = 0; i < 5; ++i) {
            s0.l(i) = targets[i];
        }
        s0.D = Eigen::VectorXd::Zero(5);
        s0.kappa = Eigen::VectorXd::Zero(5);
        IntegratorConfig cfg;
        const IntegrationResult run = integrate(flow, s0, cfg);
        h.require(run.reason == StopReason::Converged, "general run converges");
        const Eigen::VectorXd& l = run.trajectory.states.back().l;
        const double total = l.sum();
        double stationarity = 0.0;
        for (int i = 0; i < 5; ++i) {
            stationarity = std::max(stationarity, std::abs(pseudo_gradient(spec, i, l(i), total)));
        }
        h.require(stationarity < 1e-6,
                  "stationarity residual below 1e-6 (got " + std::to_string(stationarity) + ")");
        h.require(is_strictly_diagonally_dominant(jacobian_B(spec, l)),
                  "B is strictly diagonally dominant at the terminal point");
    });

    std::cout << (failures == 0 ? "acceptance: all criteria passed\n"
                                : "acceptance: " + std::to_string(failures) + " criteria FAILED\n");
    return failures;
}
