#include "nashgrid/scenario.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace nashgrid {

using nlohmann::json;

namespace {

bool optional_vec_equal(const std::optional<Eigen::VectorXd>& a,
                        const std::optional<Eigen::VectorXd>& b) {
    if (a.has_value() != b.has_value()) {
        return false;
    }
    if (!a) {
        return true;
    }
    return a->size() == b->size() && *a == *b;
}

// Accumulates "<field path>: <problem>" entries while walking the document.
struct Validator {
    std::vector<std::string> violations;

    void fail(const std::string& path, const std::string& msg) {
        violations.push_back(path + ": " + msg);
    }

    void check_keys(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
        for (const auto& [key, _] : obj.items()) {
            if (!allowed.count(key)) {
                fail(path.empty() ? key : path + "." + key, "unknown field");
            }
        }
    }

    std::optional<double> number(const json& obj, const std::string& path, const std::string& key) {
        if (!obj.contains(key)) {
            return std::nullopt;
        }
        const auto& v = obj.at(key);
        if (!v.is_number()) {
            fail(path + key, "expected a number");
            return std::nullopt;
        }
        return v.get<double>();
    }

    std::optional<double> required_number(const json& obj, const std::string& path,
                                          const std::string& key) {
        if (!obj.contains(key)) {
            fail(path + key, "required field is missing");
            return std::nullopt;
        }
        return number(obj, path, key);
    }

    std::optional<std::vector<double>> number_array(const json& obj, const std::string& path,
                                                    const std::string& key) {
        if (!obj.contains(key)) {
            return std::nullopt;
        }
        const auto& v = obj.at(key);
        if (!v.is_array()) {
            fail(path + key, "expected an array of numbers");
            return std::nullopt;
        }
        std::vector<double> out;
        out.reserve(v.size());
        for (size_t k = 0; k < v.size(); ++k) {
            if (!v[k].is_number()) {
                fail(path + key + "[" + std::to_string(k) + "]", "expected a number");
                return std::nullopt;
            }
            out.push_back(v[k].get<double>());
        }
        return out;
    }
};

Eigen::VectorXd to_vector(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

PlayerSpec parse_player(Validator& v, const json& obj, const std::string& path) {
    PlayerSpec p;
    if (!obj.is_object()) {
        v.fail(path, "expected an object");
        return p;
    }
    v.check_keys(obj, path,
                 {"w", "l_hat", "l_min", "l_max", "gain_k", "gain_m1", "gain_m2", "stubborn",
                  "v_coeffs"});
    const std::string prefix = path + ".";

    if (auto coeffs = v.number_array(obj, prefix, "v_coeffs")) {
        if (coeffs->empty()) {
            v.fail(prefix + "v_coeffs", "must not be empty");
        } else {
            p.curtailment = Polynomial{*coeffs};
        }
        if (obj.contains("w") || obj.contains("l_hat")) {
            v.fail(prefix + "v_coeffs", "cannot be combined with w/l_hat");
        }
    }
    const bool quadratic = !p.curtailment.has_value();

    if (auto w = quadratic ? v.required_number(obj, prefix, "w") : v.number(obj, prefix, "w")) {
        p.w = *w;
        if (quadratic && !(p.w > 0.0)) {
            v.fail(prefix + "w", "must be positive");
        }
    }
    if (auto l_hat = quadratic ? v.required_number(obj, prefix, "l_hat")
                               : v.number(obj, prefix, "l_hat")) {
        p.l_hat = *l_hat;
    }
    if (auto l_min = v.number(obj, prefix, "l_min")) {
        p.l_min = *l_min;
    }
    if (auto l_max = v.number(obj, prefix, "l_max")) {
        p.l_max = *l_max;
    }
    if (auto g = v.number(obj, prefix, "gain_k")) {
        p.gain_k = *g;
    }
    if (auto g = v.number(obj, prefix, "gain_m1")) {
        p.gain_m1 = *g;
    }
    if (auto g = v.number(obj, prefix, "gain_m2")) {
        p.gain_m2 = *g;
    }
    if (!(p.gain_k > 0.0)) v.fail(prefix + "gain_k", "must be positive");
    if (!(p.gain_m1 > 0.0)) v.fail(prefix + "gain_m1", "must be positive");
    if (!(p.gain_m2 > 0.0)) v.fail(prefix + "gain_m2", "must be positive");
    if (auto s = v.number(obj, prefix, "stubborn")) {
        p.stubborn = *s;
    }
    if (!p.is_stubborn() && !(p.l_min < p.l_max)) {
        v.fail(prefix + "l_min", "must be < l_max");
    }
    return p;
}

PricingSpec parse_pricing(Validator& v, const json& obj) {
    PricingSpec pricing;
    if (!obj.is_object()) {
        v.fail("pricing", "expected an object");
        return pricing;
    }
    v.check_keys(obj, "pricing", {"a", "p0", "p_coeffs"});
    if (obj.contains("p_coeffs")) {
        if (obj.contains("a") || obj.contains("p0")) {
            v.fail("pricing", "p_coeffs cannot be combined with a/p0");
        }
        if (auto coeffs = v.number_array(obj, "pricing.", "p_coeffs")) {
            if (coeffs->empty()) {
                v.fail("pricing.p_coeffs", "must not be empty");
            } else {
                pricing.curve = Polynomial{*coeffs};
            }
        }
        return pricing;
    }
    if (auto a = v.required_number(obj, "pricing.", "a")) {
        pricing.a = *a;
        if (pricing.a < 0.0) {
            v.fail("pricing.a", "must be >= 0");
        }
    }
    if (auto p0 = v.required_number(obj, "pricing.", "p0")) {
        pricing.p0 = *p0;
    }
    return pricing;
}

void parse_graph_block(Validator& v, const json& obj, int n_players, Scenario& scenario) {
    if (!obj.is_object()) {
        v.fail("graph", "expected an object");
        return;
    }
    v.check_keys(obj, "graph", {"topology", "edges"});
    if (obj.contains("topology") && obj.contains("edges")) {
        v.fail("graph", "specify either topology or edges, not both");
        return;
    }
    if (obj.contains("topology")) {
        const auto& t = obj.at("topology");
        if (!t.is_string()) {
            v.fail("graph.topology", "expected a string");
            return;
        }
        const std::string name = t.get<std::string>();
        if (name != "ring" && name != "complete" && name != "path") {
            v.fail("graph.topology", "must be one of ring, complete, path (got '" + name + "')");
            return;
        }
        scenario.topology = name;
        return;
    }
    if (!obj.contains("edges")) {
        v.fail("graph", "missing topology or edges");
        return;
    }
    const auto& edges = obj.at("edges");
    if (!edges.is_array()) {
        v.fail("graph.edges", "expected an array of [i, j] pairs");
        return;
    }
    for (size_t k = 0; k < edges.size(); ++k) {
        const std::string path = "graph.edges[" + std::to_string(k) + "]";
        const auto& e = edges[k];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer()) {
            v.fail(path, "expected a pair of node indices");
            continue;
        }
        const int a = e[0].get<int>();
        const int b = e[1].get<int>();
        if (a < 0 || a >= n_players || b < 0 || b >= n_players) {
            v.fail(path, "node index out of range (players: " + std::to_string(n_players) + ")");
            continue;
        }
        if (a == b) {
            v.fail(path, "self-loop");
            continue;
        }
        scenario.edges.emplace_back(a, b);
    }
    scenario.topology.clear();
}

void parse_integrator(Validator& v, const json& obj, IntegratorConfig& cfg) {
    if (!obj.is_object()) {
        v.fail("integrator", "expected an object");
        return;
    }
    v.check_keys(obj, "integrator", {"step_h", "t_max", "sample_every", "stop_tol", "diverge_bound"});
    if (auto x = v.number(obj, "integrator.", "step_h")) {
        cfg.step_h = *x;
        if (!(cfg.step_h > 0.0)) v.fail("integrator.step_h", "must be positive");
    }
    if (auto x = v.number(obj, "integrator.", "t_max")) {
        cfg.t_max = *x;
        if (!(cfg.t_max >= 0.0)) v.fail("integrator.t_max", "must be >= 0");
    }
    if (obj.contains("sample_every")) {
        const auto& s = obj.at("sample_every");
        if (!s.is_number_integer() || s.get<long long>() < 1) {
            v.fail("integrator.sample_every", "must be an integer >= 1");
        } else {
            cfg.sample_every = s.get<int>();
        }
    }
    if (auto x = v.number(obj, "integrator.", "stop_tol")) {
        cfg.stop_tol = *x;
        if (!(cfg.stop_tol >= 0.0)) v.fail("integrator.stop_tol", "must be >= 0");
    }
    if (auto x = v.number(obj, "integrator.", "diverge_bound")) {
        cfg.diverge_bound = *x;
        if (!(cfg.diverge_bound > 0.0)) v.fail("integrator.diverge_bound", "must be positive");
    }
}

void parse_init(Validator& v, const json& obj, Scenario& scenario) {
    if (!obj.is_object()) {
        v.fail("init", "expected an object");
        return;
    }
    v.check_keys(obj, "init", {"l", "D", "kappa", "zeta"});
    if (auto x = v.number_array(obj, "init.", "l")) scenario.init_l = to_vector(*x);
    if (auto x = v.number_array(obj, "init.", "D")) scenario.init_D = to_vector(*x);
    if (auto x = v.number_array(obj, "init.", "kappa")) scenario.init_kappa = to_vector(*x);
    if (auto x = v.number_array(obj, "init.", "zeta")) scenario.init_zeta = to_vector(*x);
}

// Cross-field rules that only make sense once the pieces parsed cleanly.
void validate_semantics(Validator& v, Scenario& scenario) {
    const GameSpec& game = scenario.game;
    const int n = game.size();
    const bool hvac = game.hvac_linear();
    const bool needs_model = scenario.strategy != StrategyMode::General;

    if (needs_model && !hvac) {
        for (int i = 0; i < n; ++i) {
            if (game.players[static_cast<size_t>(i)].curtailment) {
                v.fail("players[" + std::to_string(i) + "].v_coeffs",
                       "polynomial model requires strategy 'general'");
            }
        }
        if (game.pricing.curve) {
            v.fail("pricing.p_coeffs", "polynomial pricing requires strategy 'general'");
        }
    }
    if (scenario.strategy == StrategyMode::PrimalDual) {
        for (int i = 0; i < n; ++i) {
            const auto& p = game.players[static_cast<size_t>(i)];
            if (p.is_stubborn()) {
                continue;
            }
            if (!std::isfinite(p.l_min)) {
                v.fail("players[" + std::to_string(i) + "].l_min",
                       "finite bound required for strategy 'primal_dual'");
            }
            if (!std::isfinite(p.l_max)) {
                v.fail("players[" + std::to_string(i) + "].l_max",
                       "finite bound required for strategy 'primal_dual'");
            }
        }
    }
    if (needs_model && hvac && n > 3 && !check_uniqueness_condition(game)) {
        double min_w = std::numeric_limits<double>::infinity();
        for (const auto& p : game.players) min_w = std::min(min_w, p.w);
        std::ostringstream msg;
        msg << "violates the uniqueness bound a < min_i 2*w_i/(N-3) = "
            << 2.0 * min_w / static_cast<double>(n - 3) << " (got a = " << game.pricing.a << ")";
        v.fail("pricing.a", msg.str());
    }

    try {
        const Graph g = scenario.build_graph();
        if (!g.connected()) {
            v.fail("graph", "not connected");
        }
    } catch (const Error& e) {
        v.fail("graph", e.what());
    } catch (const std::invalid_argument& e) {
        v.fail("graph", e.what());
    }

    auto check_len = [&](const std::optional<Eigen::VectorXd>& vec, const char* key, int want) {
        if (vec && vec->size() != want) {
            v.fail(std::string("init.") + key,
                   "expected " + std::to_string(want) + " entries, got " +
                       std::to_string(vec->size()));
        }
    };
    check_len(scenario.init_l, "l", n);
    check_len(scenario.init_D, "D", n);
    check_len(scenario.init_kappa, "kappa", n);
    check_len(scenario.init_zeta, "zeta", 2 * n);
    if (scenario.init_zeta && scenario.strategy != StrategyMode::PrimalDual) {
        v.fail("init.zeta", "only applicable to strategy 'primal_dual'");
    }
}

json vector_to_json(const Eigen::VectorXd& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        arr.push_back(v(i));
    }
    return arr;
}

}  // namespace

Graph Scenario::build_graph() const {
    const int n = game.size();
    if (topology == "ring") return Graph::ring(n);
    if (topology == "complete") return Graph::complete(n);
    if (topology == "path") return Graph::path(n);
    return Graph(n, edges);
}

bool Scenario::operator==(const Scenario& other) const {
    return name == other.name && game == other.game && topology == other.topology &&
           edges == other.edges && strategy == other.strategy && delta == other.delta &&
           integrator == other.integrator && optional_vec_equal(init_l, other.init_l) &&
           optional_vec_equal(init_D, other.init_D) &&
           optional_vec_equal(init_kappa, other.init_kappa) &&
           optional_vec_equal(init_zeta, other.init_zeta);
}

Scenario parse_scenario(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("scenario parse error: ") + e.what());
    }
    if (!doc.is_object()) {
        throw Error(ErrorCode::ParseError, "scenario document must be a JSON object");
    }

    Validator v;
    Scenario scenario;
    v.check_keys(doc, "",
                 {"name", "players", "pricing", "graph", "strategy", "delta", "integrator",
                  "init"});

    if (!doc.contains("name") || !doc.at("name").is_string()) {
        v.fail("name", "required string field");
    } else {
        scenario.name = doc.at("name").get<std::string>();
    }

    if (!doc.contains("players") || !doc.at("players").is_array() || doc.at("players").empty()) {
        v.fail("players", "required non-empty array");
    } else {
        const auto& players = doc.at("players");
        for (size_t i = 0; i < players.size(); ++i) {
            scenario.game.players.push_back(
                parse_player(v, players[i], "players[" + std::to_string(i) + "]"));
        }
    }

    if (!doc.contains("pricing")) {
        v.fail("pricing", "required field is missing");
    } else {
        scenario.game.pricing = parse_pricing(v, doc.at("pricing"));
    }

    if (!doc.contains("strategy") || !doc.at("strategy").is_string()) {
        v.fail("strategy", "required string field (general | primal_dual | inner)");
    } else {
        const std::string s = doc.at("strategy").get<std::string>();
        if (s == "general") {
            scenario.strategy = StrategyMode::General;
        } else if (s == "primal_dual") {
            scenario.strategy = StrategyMode::PrimalDual;
        } else if (s == "inner") {
            scenario.strategy = StrategyMode::Inner;
        } else {
            v.fail("strategy", "must be one of general, primal_dual, inner (got '" + s + "')");
        }
    }

    scenario.topology = "ring";  // default topology
    if (doc.contains("graph")) {
        parse_graph_block(v, doc.at("graph"), scenario.game.size(), scenario);
    }

    if (doc.contains("delta")) {
        if (auto d = v.number(doc, "", "delta")) {
            scenario.delta = *d;
            if (!(scenario.delta > 0.0)) {
                v.fail("delta", "must be positive");
            }
        }
    }
    if (doc.contains("integrator")) {
        parse_integrator(v, doc.at("integrator"), scenario.integrator);
    }
    if (doc.contains("init")) {
        parse_init(v, doc.at("init"), scenario);
    }

    if (v.violations.empty()) {
        validate_semantics(v, scenario);
    }
    if (!v.violations.empty()) {
        throw ScenarioValidationError(std::move(v.violations));
    }
    return scenario;
}

std::string serialize_scenario(const Scenario& scenario) {
    json doc;
    doc["name"] = scenario.name;
    json players = json::array();
    for (const auto& p : scenario.game.players) {
        json jp;
        if (p.curtailment) {
            jp["v_coeffs"] = p.curtailment->coeffs;
        } else {
            jp["w"] = p.w;
            jp["l_hat"] = p.l_hat;
        }
        if (std::isfinite(p.l_min)) jp["l_min"] = p.l_min;
        if (std::isfinite(p.l_max)) jp["l_max"] = p.l_max;
        jp["gain_k"] = p.gain_k;
        jp["gain_m1"] = p.gain_m1;
        jp["gain_m2"] = p.gain_m2;
        if (p.stubborn) jp["stubborn"] = *p.stubborn;
        players.push_back(std::move(jp));
    }
    doc["players"] = std::move(players);
    if (scenario.game.pricing.curve) {
        doc["pricing"] = {{"p_coeffs", scenario.game.pricing.curve->coeffs}};
    } else {
        doc["pricing"] = {{"a", scenario.game.pricing.a}, {"p0", scenario.game.pricing.p0}};
    }
    if (!scenario.topology.empty()) {
        doc["graph"] = {{"topology", scenario.topology}};
    } else {
        json edges = json::array();
        for (const auto& [a, b] : scenario.edges) {
            edges.push_back(json::array({a, b}));
        }
        doc["graph"] = {{"edges", std::move(edges)}};
    }
    doc["strategy"] = to_string(scenario.strategy);
    doc["delta"] = scenario.delta;
    doc["integrator"] = {{"step_h", scenario.integrator.step_h},
                         {"t_max", scenario.integrator.t_max},
                         {"sample_every", scenario.integrator.sample_every},
                         {"stop_tol", scenario.integrator.stop_tol},
                         {"diverge_bound", scenario.integrator.diverge_bound}};
    json init;
    if (scenario.init_l) init["l"] = vector_to_json(*scenario.init_l);
    if (scenario.init_D) init["D"] = vector_to_json(*scenario.init_D);
    if (scenario.init_kappa) init["kappa"] = vector_to_json(*scenario.init_kappa);
    if (scenario.init_zeta) init["zeta"] = vector_to_json(*scenario.init_zeta);
    if (!init.is_null()) {
        doc["init"] = std::move(init);
    }
    return doc.dump(2) + "\n";
}

Scenario resolve_scenario(const std::string& ref) {
    std::error_code ec;
    if (std::filesystem::exists(ref, ec)) {
        std::ifstream in(ref);
        if (!in) {
            throw Error(ErrorCode::IoFailure, "cannot read scenario file: " + ref);
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        if (in.bad()) {
            throw Error(ErrorCode::IoFailure, "i/o error while reading: " + ref);
        }
        return parse_scenario(buf.str());
    }
    const auto& names = bundled_scenario_names();
    if (std::find(names.begin(), names.end(), ref) != names.end()) {
        return parse_scenario(bundled_scenario_text(ref));
    }
    throw Error(ErrorCode::IoFailure,
                "scenario '" + ref + "' is neither a readable file nor a bundled scenario");
}

SimState initial_state(const Scenario& scenario) {
    const int n = scenario.game.size();
    SimState s;
    s.l.resize(n);
    for (int i = 0; i < n; ++i) {
        s.l(i) = scenario.game.players[static_cast<size_t>(i)].l_hat;
    }
    s.D = Eigen::VectorXd::Zero(n);
    s.kappa = Eigen::VectorXd::Zero(n);
    s.zeta = scenario.strategy == StrategyMode::PrimalDual ? Eigen::VectorXd::Zero(2 * n)
                                                           : Eigen::VectorXd(0);
    if (scenario.init_l) s.l = *scenario.init_l;
    if (scenario.init_D) s.D = *scenario.init_D;
    if (scenario.init_kappa) s.kappa = *scenario.init_kappa;
    if (scenario.init_zeta) s.zeta = *scenario.init_zeta;
    // A stubborn player's consumption is pinned, including against overrides.
    for (int i = 0; i < n; ++i) {
        const auto& p = scenario.game.players[static_cast<size_t>(i)];
        if (p.is_stubborn()) {
            s.l(i) = *p.stubborn;
        }
    }
    return s;
}

namespace {

std::string fmt12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void atomic_write(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(ErrorCode::IoFailure, "cannot open for writing: " + tmp);
        }
        out << content;
        if (!out) {
            throw Error(ErrorCode::IoFailure, "write failed: " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error(ErrorCode::IoFailure, "cannot move into place: " + path);
    }
}

}  // namespace

int write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
    if (traj.size() == 0) {
        throw std::invalid_argument("write_trajectory_csv: empty trajectory");
    }
    const int n = static_cast<int>(traj.states.front().l.size());
    out << "t";
    for (int i = 1; i <= n; ++i) out << ",l_" << i;
    for (int i = 1; i <= n; ++i) out << ",D_" << i;
    out << ",aggregate,price,Q,residual\n";
    const bool has_q = !traj.potential_q.empty();
    for (size_t k = 0; k < traj.size(); ++k) {
        const SimState& s = traj.states[k];
        out << fmt12(traj.times[k]);
        for (int i = 0; i < n; ++i) out << ',' << fmt12(s.l(i));
        for (int i = 0; i < n; ++i) out << ',' << fmt12(s.D(i));
        out << ',' << fmt12(traj.aggregate[k]) << ',' << fmt12(traj.price[k]) << ',';
        if (has_q) out << fmt12(traj.potential_q[k]);
        out << ',' << fmt12(traj.residual[k]) << '\n';
    }
    return static_cast<int>(traj.size());
}

int write_trajectory_csv(const Trajectory& traj, const std::string& path) {
    std::ostringstream buf;
    const int rows = write_trajectory_csv(traj, buf);
    atomic_write(path, buf.str());
    return rows;
}

nlohmann::json make_summary(const Scenario& scenario, const IntegrationResult& result,
                            const EquilibriumResult* oracle, double wall_seconds) {
    const Trajectory& traj = result.trajectory;
    if (traj.size() == 0) {
        throw std::invalid_argument("make_summary: empty trajectory");
    }
    const SimState& last = traj.states.back();
    const GameSpec& game = scenario.game;
    const int n = game.size();

    json doc;
    doc["scenario"] = scenario.name;
    doc["strategy"] = to_string(scenario.strategy);
    doc["players"] = n;
    doc["stop_reason"] = to_string(result.reason);
    doc["t_final"] = traj.times.back();
    doc["samples"] = traj.size();
    doc["wall_seconds"] = wall_seconds;

    const double agg = traj.aggregate.back();
    json fin;
    fin["l"] = vector_to_json(last.l);
    fin["aggregate"] = agg;
    fin["price"] = traj.price.back();
    fin["residual"] = traj.residual.back();
    fin["consensus_error"] = (last.D.array() - agg).abs().maxCoeff();
    if (!traj.potential_q.empty()) {
        fin["potential"] = traj.potential_q.back();
    }
    doc["final"] = std::move(fin);
    doc["stubborn_players"] = game.stubborn_players();

    if (oracle != nullptr) {
        json jo;
        jo["l_star"] = vector_to_json(oracle->l_star);
        jo["aggregate"] = oracle->aggregate;
        jo["eta_star"] = vector_to_json(oracle->eta_star);
        jo["active_lower"] = oracle->active_lower;
        jo["active_upper"] = oracle->active_upper;
        jo["stationarity_residual"] = oracle->stationarity_residual;
        doc["oracle"] = std::move(jo);

        Eigen::VectorXd err = (last.l - oracle->l_star).cwiseAbs();
        double max_rational = 0.0;
        for (int i = 0; i < n; ++i) {
            if (!game.players[static_cast<size_t>(i)].is_stubborn()) {
                max_rational = std::max(max_rational, err(i));
            }
        }
        json je;
        je["per_component"] = vector_to_json(err);
        je["max"] = err.maxCoeff();
        je["max_rational"] = max_rational;
        doc["error_vs_oracle"] = std::move(je);
    }
    return doc;
}

void write_json_file(const nlohmann::json& doc, const std::string& path) {
    atomic_write(path, doc.dump(2) + "\n");
}

void write_text_file(const std::string& content, const std::string& path) {
    atomic_write(path, content);
}

}  // namespace nashgrid
