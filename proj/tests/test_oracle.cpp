#include <doctest.h>

#include <random>

#include "nashgrid/oracle.hpp"
#include "test_util.hpp"

using namespace nashgrid;

namespace {

GameSpec table1_game() {
    GameSpec spec;
    const double targets[] = {50.0, 55.0, 60.0, 65.0, 70.0};
    for (double t : targets) {
        PlayerSpec p;
        p.w = 1.0;
        p.l_hat = t;
        p.l_min = 0.8 * t;
        p.l_max = 1.2 * t;
        spec.players.push_back(p);
    }
    spec.pricing.a = 0.04;
    spec.pricing.p0 = 5.0;
    return spec;
}

GameSpec constrained_game() {
    GameSpec spec = table1_game();
    spec.players[0].l_min = 45.0;
    spec.players[0].l_max = 55.0;
    return spec;
}

void check_equilibrium_invariants(const GameSpec& spec, const EquilibriumResult& eq) {
    const int n = spec.size();
    REQUIRE(eq.l_star.size() == n);
    REQUIRE(eq.eta_star.size() == 2 * n);
    CHECK(eq.stationarity_residual < 1e-8);
    for (int i = 0; i < n; ++i) {
        const auto& p = spec.players[static_cast<size_t>(i)];
        if (p.is_stubborn()) {
            continue;
        }
        CHECK(eq.l_star(i) >= p.l_min);
        CHECK(eq.l_star(i) <= p.l_max);
        // complementary slackness
        if (eq.eta_star(2 * i) > 0.0) {
            CHECK(eq.l_star(i) == p.l_min);
        }
        if (eq.eta_star(2 * i + 1) > 0.0) {
            CHECK(eq.l_star(i) == p.l_max);
        }
    }
}

}  // namespace

TEST_CASE("inner equilibrium reproduces the five-user benchmark") {
    const EquilibriumResult eq = inner_equilibrium(table1_game());
    Eigen::VectorXd expected(5);
    expected << 41.535, 46.437, 51.339, 56.241, 61.143;
    CHECK((eq.l_star - expected).cwiseAbs().maxCoeff() < 5e-4);
    CHECK(eq.aggregate == doctest::Approx(256.696).epsilon(1e-5));
    CHECK(eq.eta_star.cwiseAbs().maxCoeff() == 0.0);
    CHECK(eq.active_lower.empty());
    CHECK(eq.active_upper.empty());
    check_equilibrium_invariants(table1_game(), eq);

    // inactive multipliers: the Lagrangian collapses to the potential there
    CHECK(lagrangian(table1_game(), eq.l_star, eq.eta_star) ==
          doctest::Approx(potential(table1_game(), eq.l_star)));
}

TEST_CASE("inner equilibrium decouples without aggregate pricing") {
    GameSpec spec = table1_game();
    spec.pricing.a = 0.0;
    const EquilibriumResult eq = inner_equilibrium(spec);
    for (int i = 0; i < 5; ++i) {
        const auto& p = spec.players[static_cast<size_t>(i)];
        CHECK(eq.l_star(i) == doctest::Approx(p.l_hat - spec.pricing.p0 / (2.0 * p.w)));
    }

    GameSpec trivial;
    for (int i = 0; i < 2; ++i) {
        PlayerSpec p;
        p.w = 1.0;
        p.l_hat = 0.0;
        trivial.players.push_back(p);
    }
    const EquilibriumResult zero = inner_equilibrium(trivial);
    CHECK(zero.l_star.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("inner equilibrium reports box violations") {
    try {
        inner_equilibrium(constrained_game());
        FAIL("expected NotInner");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotInner);
    }
}

TEST_CASE("oracle requires the uniqueness condition") {
    GameSpec spec = table1_game();
    spec.pricing.a = 1.5;
    try {
        constrained_equilibrium(spec);
        FAIL("expected ConditionViolated");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ConditionViolated);
    }
}

TEST_CASE("constrained equilibrium reproduces the bound-limited benchmark") {
    const GameSpec spec = constrained_game();
    const EquilibriumResult eq = constrained_equilibrium(spec);
    Eigen::VectorXd reference(5);
    reference << 45.0, 46.4, 51.3, 56.2, 61.1;
    CHECK((eq.l_star - reference).cwiseAbs().maxCoeff() < 0.05);
    CHECK(eq.l_star(0) == 45.0);
    CHECK(eq.active_lower == std::vector<int>{0});
    CHECK(eq.active_upper.empty());
    // the reference aggregate rounds to 259.9 while the components sum to 260.0
    CHECK(eq.aggregate == doctest::Approx(259.909).epsilon(1e-5));
    CHECK(eq.eta_star(0) > 0.0);
    check_equilibrium_invariants(spec, eq);
}

TEST_CASE("wide boxes make the constrained solve match the inner one") {
    GameSpec spec = table1_game();
    for (auto& p : spec.players) {
        p.l_min = -1e6;
        p.l_max = 1e6;
    }
    const EquilibriumResult inner = inner_equilibrium(spec);
    const EquilibriumResult constrained = constrained_equilibrium(spec);
    CHECK((inner.l_star - constrained.l_star).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(constrained.eta_star.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("degenerate-narrow boxes put every player on a bound") {
    GameSpec spec;
    const double eps = 0.05;
    const double targets[] = {30.0, 40.0, 50.0};
    for (double t : targets) {
        PlayerSpec p;
        p.w = 1.0;
        p.l_hat = t;
        p.l_min = t - eps;
        p.l_max = t + eps;
        spec.players.push_back(p);
    }
    spec.pricing.a = 0.04;
    spec.pricing.p0 = 5.0;  // pushes every action below its comfort target
    const EquilibriumResult eq = constrained_equilibrium(spec);
    for (int i = 0; i < 3; ++i) {
        CHECK(eq.l_star(i) == spec.players[static_cast<size_t>(i)].l_min);
    }
    CHECK(eq.active_lower == std::vector<int>{0, 1, 2});

    // brute-force confirmation: no grid deviation inside any box improves
    const NashCheck brute = verify_nash(spec, eq.l_star, 2001, 1e-9);
    CHECK(brute.is_nash);
    check_equilibrium_invariants(spec, eq);
}

TEST_CASE("best response matches the closed form and the benchmark") {
    const GameSpec spec = table1_game();
    GameSpec stub = spec;
    stub.players[4].stubborn = 100.0;
    const EquilibriumResult eq = stubborn_equilibrium(stub);
    // player 1 against the fixed 100 kWh and the others at their best responses
    const double others = eq.aggregate - eq.l_star(0);
    CHECK(best_response(stub, 0, others) == doctest::Approx(eq.l_star(0)).epsilon(1e-12));
    CHECK(best_response(stub, 0, others) == doctest::Approx(40.8).epsilon(1e-3));

    GameSpec no_pricing = table1_game();
    no_pricing.pricing.a = 0.0;
    CHECK(best_response(no_pricing, 2, 123.0) ==
          doctest::Approx(60.0 - no_pricing.pricing.p0 / 2.0));

    // interior best response is a strict minimizer on a scan
    const double br = best_response(spec, 1, 200.0);
    const double at_br = cost(spec, 1, br, br + 200.0);
    for (double offset : {-0.01, 0.01}) {
        CHECK(cost(spec, 1, br + offset, br + offset + 200.0) > at_br);
    }
}

TEST_CASE("stubborn equilibrium reproduces the benchmark best responses") {
    GameSpec spec = table1_game();
    spec.players[4].stubborn = 100.0;
    const EquilibriumResult eq = stubborn_equilibrium(spec);
    Eigen::VectorXd expected(4);
    expected << 40.829, 45.731, 50.633, 55.535;
    CHECK((eq.l_star.head(4) - expected).cwiseAbs().maxCoeff() < 5e-4);
    CHECK(eq.l_star(4) == 100.0);
    CHECK(eq.aggregate == doctest::Approx(292.727).epsilon(1e-5));
    check_equilibrium_invariants(spec, eq);
}

TEST_CASE("a stubborn player at its own inner value leaves the others unchanged") {
    const GameSpec base = table1_game();
    const EquilibriumResult inner = inner_equilibrium(base);
    GameSpec spec = base;
    spec.players[2].stubborn = inner.l_star(2);
    const EquilibriumResult eq = stubborn_equilibrium(spec);
    CHECK((eq.l_star - inner.l_star).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("an all-stubborn game echoes the fixed profile") {
    GameSpec spec = table1_game();
    const double fixed[] = {10.0, 20.0, 30.0, 40.0, 50.0};
    for (int i = 0; i < 5; ++i) {
        spec.players[static_cast<size_t>(i)].stubborn = fixed[i];
    }
    const EquilibriumResult eq = stubborn_equilibrium(spec);
    for (int i = 0; i < 5; ++i) {
        CHECK(eq.l_star(i) == fixed[i]);
    }
    CHECK(eq.aggregate == doctest::Approx(150.0));
}

TEST_CASE("stubborn solve requires a stubborn player") {
    try {
        stubborn_equilibrium(table1_game());
        FAIL("expected NoStubbornPlayer");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoStubbornPlayer);
    }
}

TEST_CASE("verify_nash accepts the oracle and rejects perturbations") {
    const GameSpec spec = table1_game();
    const EquilibriumResult eq = inner_equilibrium(spec);
    CHECK(verify_nash(spec, eq.l_star, 2001, 1e-6).is_nash);

    Eigen::VectorXd perturbed = eq.l_star;
    perturbed(2) += 1.0;
    const NashCheck check = verify_nash(spec, perturbed, 2001, 1e-6);
    CHECK_FALSE(check.is_nash);
    CHECK(check.worst_improvement > 0.0);
    CHECK(check.worst_player == 2);
}

TEST_CASE("verify_nash on a one-player quadratic") {
    GameSpec spec;
    PlayerSpec p;
    p.w = 1.0;
    p.l_hat = 0.0;
    p.l_min = 0.0;
    p.l_max = 1.0;
    spec.players.push_back(p);
    Eigen::VectorXd l(1);
    l << 0.0;  // cost = l^2, minimized at the lower bound
    CHECK(verify_nash(spec, l, 101, 1e-9).is_nash);

    CHECK_THROWS_AS(verify_nash(spec, l, 1, 1e-9), std::invalid_argument);
}

TEST_CASE("oracle self-consistency on random games") {
    std::mt19937 rng(97);
    std::uniform_int_distribution<int> size(4, 8);
    int solved = 0;
    for (int trial = 0; trial < 30; ++trial) {
        const GameSpec spec = testutil::random_hvac_game(rng, size(rng));
        REQUIRE(check_uniqueness_condition(spec));
        const EquilibriumResult eq = constrained_equilibrium(spec);
        check_equilibrium_invariants(spec, eq);
        CHECK(verify_nash(spec, eq.l_star, 1001, 1e-5).is_nash);

        // best-response fixed point
        for (int i = 0; i < spec.size(); ++i) {
            const double br = best_response(spec, i, eq.aggregate - eq.l_star(i));
            CHECK(std::abs(br - eq.l_star(i)) < 1e-9);
        }
        ++solved;
    }
    CHECK(solved == 30);
}

TEST_CASE("the oracle output is a saddle point of the Lagrangian") {
    const GameSpec spec = constrained_game();
    const EquilibriumResult eq = constrained_equilibrium(spec);
    const double at_saddle = lagrangian(spec, eq.l_star, eq.eta_star);

    std::mt19937 rng(5);
    std::uniform_real_distribution<double> frac(0.0, 1.0);
    std::uniform_real_distribution<double> eta_dist(0.0, 10.0);
    for (int trial = 0; trial < 1000; ++trial) {
        Eigen::VectorXd l(5);
        for (int i = 0; i < 5; ++i) {
            const auto& p = spec.players[static_cast<size_t>(i)];
            l(i) = p.l_min + frac(rng) * (p.l_max - p.l_min);
        }
        Eigen::VectorXd eta(10);
        for (int k = 0; k < 10; ++k) {
            eta(k) = eta_dist(rng);
        }
        CHECK(lagrangian(spec, eq.l_star, eta) <= at_saddle + 1e-9);
        CHECK(at_saddle <= lagrangian(spec, l, eq.eta_star) + 1e-9);
    }
}
