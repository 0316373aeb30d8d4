#include "setbellman/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "setbellman/errors.hpp"
#include "setbellman/gridworld.hpp"

namespace setbellman::harness {

namespace fs = std::filesystem;

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

const std::set<std::string> kModes = {"solve",      "set-solve", "certify",
                                      "trajectory", "game-sim",  "grid-gen"};

Json vector_to_json(const Vector& v) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

Matrix parse_free_matrix(const Json& j, const std::string& context) {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) {
        throw parse_error(context + ": expected a matrix as an array of rows");
    }
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
    Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const Json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
            throw parse_error(context + ": ragged matrix row " + std::to_string(r));
        }
        for (Eigen::Index c = 0; c < cols; ++c) {
            if (!row[static_cast<std::size_t>(c)].is_number()) {
                throw parse_error(context + ": matrix entries must be numbers");
            }
            m(r, c) = row[static_cast<std::size_t>(c)].get<double>();
        }
    }
    return m;
}

ExperimentConfig parse_one(const Json& j, std::size_t index, const std::string& base_dir,
                           const RunOverrides& overrides) {
    const std::string context = "config";
    if (!j.is_object()) {
        throw parse_error(context + ": each entry must be an object");
    }
    ExperimentConfig c;
    if (!j.contains("mode") || !j["mode"].is_string()) {
        throw parse_error(context + ": missing field \"mode\"");
    }
    c.mode = j["mode"].get<std::string>();
    if (kModes.count(c.mode) == 0) {
        throw validation_error(context + ": unknown mode \"" + c.mode + "\"");
    }

    char default_label[32];
    std::snprintf(default_label, sizeof default_label, "run_%03zu", index);
    c.label = j.value("label", std::string(default_label));

    c.out_dir = overrides.out_dir ? *overrides.out_dir : j.value("out", std::string("out"));
    c.epsilon = overrides.epsilon ? *overrides.epsilon : j.value("epsilon", kDefaultEpsilon);
    if (!(c.epsilon > 0.0)) {
        throw validation_error(context + ": epsilon must be positive");
    }
    c.max_iters = j.value("max_iters", static_cast<long>(1000000));
    if (c.max_iters < 1) {
        throw validation_error(context + ": max_iters must be at least 1");
    }

    if (overrides.seed) {
        c.seeds = {*overrides.seed};
        c.gen_seed = *overrides.seed;
    } else {
        if (j.contains("seeds")) {
            c.seeds.clear();
            for (const Json& s : j["seeds"]) c.seeds.push_back(s.get<std::uint64_t>());
            if (c.seeds.empty()) {
                throw validation_error(context + ": seeds list must not be empty");
            }
        } else if (j.contains("seed")) {
            c.seeds = {j["seed"].get<std::uint64_t>()};
        }
        c.gen_seed = c.seeds.front();
    }

    if (j.contains("v0")) {
        const Json& v0 = j["v0"];
        if (v0.is_string()) {
            c.v0_init = v0.get<std::string>();
            if (c.v0_init != "zero" && c.v0_init != "uniform01") {
                throw validation_error(context + ": v0 must be \"zero\", \"uniform01\" or an array");
            }
        } else if (v0.is_array()) {
            c.v0_init = "explicit";
            std::vector<double> values;
            for (const Json& x : v0) values.push_back(x.get<double>());
            c.v0_values = std::move(values);
        } else {
            throw parse_error(context + ": field \"v0\" must be a string or an array");
        }
    }

    c.num_steps = j.value("num_steps", 100);
    c.num_iters = j.value("num_iters", 100);
    if (j.contains("sampler")) {
        const Json& s = j["sampler"];
        c.sampler_kind = s.value("kind", std::string("uniform-box"));
        if (c.sampler_kind != "uniform-box" && c.sampler_kind != "finite-list" &&
            c.sampler_kind != "vertex") {
            throw validation_error(context + ": unknown sampler kind \"" + c.sampler_kind + "\"");
        }
        if (s.contains("cost_list")) {
            for (const Json& m : s["cost_list"]) {
                c.cost_list.push_back(parse_free_matrix(m, context + ".sampler.cost_list"));
            }
        }
        if (c.sampler_kind == "finite-list" && c.cost_list.empty()) {
            throw validation_error(context + ": finite-list sampler needs a cost_list");
        }
    }

    if (j.contains("policy")) {
        std::vector<int> actions;
        for (const Json& a : j["policy"]) actions.push_back(a.get<int>());
        c.policy_actions = std::move(actions);
    }
    if (j.contains("opponent")) c.opponent_override = j["opponent"];

    c.rows = j.value("rows", 3);
    c.cols = j.value("cols", 3);
    c.stick_prob = j.value("stick_prob", 0.7);
    c.emit = j.value("emit", std::string("game"));
    c.discount = j.value("discount", 0.7);
    c.discount_p2 = j.value("discount_p2", 0.7);
    c.num_samples = j.value("num_samples", 0);

    if (c.mode != "grid-gen") {
        if (!j.contains("input") || !j["input"].is_string()) {
            throw parse_error(context + ": missing field \"input\" for mode " + c.mode);
        }
        fs::path input(j["input"].get<std::string>());
        if (input.is_relative()) input = fs::path(base_dir) / input;
        c.input = input.lexically_normal().string();
    } else if (c.emit != "mdp" && c.emit != "interval-mdp" && c.emit != "game") {
        throw validation_error(context + ": emit must be mdp, interval-mdp or game");
    }

    Json resolved{{"mode", c.mode},       {"label", c.label},       {"out", c.out_dir},
                  {"epsilon", c.epsilon}, {"max_iters", c.max_iters}};
    if (!c.input.empty()) resolved["input"] = c.input;
    if (c.mode == "grid-gen") {
        resolved["rows"] = c.rows;
        resolved["cols"] = c.cols;
        resolved["stick_prob"] = c.stick_prob;
        resolved["seed"] = c.gen_seed;
        resolved["emit"] = c.emit;
        resolved["discount"] = c.discount;
        if (c.emit == "game") resolved["discount_p2"] = c.discount_p2;
    } else {
        resolved["seeds"] = c.seeds;
    }
    if (c.mode == "solve" || c.mode == "set-solve" || c.mode == "trajectory" ||
        c.mode == "game-sim") {
        if (c.v0_values) {
            resolved["v0"] = *c.v0_values;
        } else {
            resolved["v0"] = c.v0_init;
        }
    }
    if (c.mode == "trajectory") {
        resolved["num_steps"] = c.num_steps;
        Json sampler{{"kind", c.sampler_kind}};
        if (!c.cost_list.empty()) {
            Json list = Json::array();
            for (const Matrix& m : c.cost_list) {
                Json rows_json = Json::array();
                for (Eigen::Index r = 0; r < m.rows(); ++r) {
                    Json row = Json::array();
                    for (Eigen::Index col = 0; col < m.cols(); ++col) row.push_back(m(r, col));
                    rows_json.push_back(std::move(row));
                }
                list.push_back(std::move(rows_json));
            }
            sampler["cost_list"] = std::move(list);
        }
        resolved["sampler"] = std::move(sampler);
    }
    if (c.mode == "game-sim") {
        resolved["num_iters"] = c.num_iters;
        if (c.opponent_override) resolved["opponent"] = *c.opponent_override;
    }
    if (c.mode == "certify" && c.policy_actions) resolved["policy"] = *c.policy_actions;
    if (c.mode == "set-solve" && c.num_samples > 0) resolved["num_samples"] = c.num_samples;
    c.resolved = std::move(resolved);
    return c;
}

Vector resolve_v0(const ExperimentConfig& c, int num_states, std::uint64_t seed) {
    if (c.v0_values) {
        if (static_cast<int>(c.v0_values->size()) != num_states) {
            throw validation_error("config: v0 length differs from the model's state count");
        }
        return Eigen::Map<const Vector>(c.v0_values->data(), num_states);
    }
    if (c.v0_init == "uniform01") {
        Rng rng(derive_seed(seed, 0x7017ULL));
        Vector v(num_states);
        for (int s = 0; s < num_states; ++s) v[s] = rng.uniform01();
        return v;
    }
    return Vector::Zero(num_states);
}

struct ModeResult {
    Json data;
    int code = kExitOk;
    std::string message;
};

// Input loading failures count as validation failures.
template <typename F>
auto load_input(F&& f) {
    try {
        return f();
    } catch (const io_error& e) {
        throw validation_error(e.what());
    }
}

void append_csv_row(std::ostringstream& out, std::initializer_list<std::string> cells) {
    bool first = true;
    for (const std::string& cell : cells) {
        if (!first) out << ',';
        out << cell;
        first = false;
    }
    out << '\n';
}

Json config_with_seed(const ExperimentConfig& c, std::uint64_t seed) {
    Json j = c.resolved;
    j["seed"] = seed;
    return j;
}

ModeResult run_solve(const ExperimentConfig& c) {
    const Mdp mdp = load_input([&] { return load_mdp(c.input); });
    const std::vector<std::string> report = validate_mdp(mdp);
    if (!report.empty()) {
        return {Json{{"validation", report}}, kExitValidation, "input MDP failed validation"};
    }
    const Vector v0 = resolve_v0(c, mdp.num_states(), c.seeds.front());
    const ValueIterationResult r = value_iteration(mdp, v0, c.epsilon, c.max_iters);
    Json data{{"validation", Json::array()},
              {"value", vector_to_json(r.value)},
              {"iterations", r.iterations},
              {"converged", r.converged},
              {"greedy_actions", greedy_policy(mdp, r.value).actions()}};
    if (!r.converged) {
        return {std::move(data), kExitRuntime, "value iteration did not converge"};
    }
    return {std::move(data), kExitOk, ""};
}

ModeResult run_set_solve(const ExperimentConfig& c) {
    const IntervalMdp imdp = load_input([&] { return load_interval_mdp(c.input); });
    const std::vector<std::string> report = validate_mdp(imdp.lower());
    if (!report.empty()) {
        return {Json{{"validation", report}}, kExitValidation,
                "input interval MDP failed validation"};
    }
    const Vector v0 = resolve_v0(c, imdp.num_states(), c.seeds.front());
    const SetVISolution sol =
        set_value_iteration(imdp, IntervalVector::degenerate(v0), c.epsilon, c.max_iters);
    Json data{{"validation", Json::array()},
              {"box_lo", vector_to_json(sol.box.lo())},
              {"box_hi", vector_to_json(sol.box.hi())},
              {"iterations", sol.iterations},
              {"converged", sol.converged},
              {"certified_epsilon", sol.certified_epsilon}};
    if (!sol.converged) {
        return {std::move(data), kExitRuntime, "set value iteration did not converge"};
    }
    const IntervalVector fixed = fixed_point_box(imdp, c.epsilon, c.max_iters);
    const IntervalVector inflated = inflate(sol.box, c.epsilon / 2.0);
    data["fixed_box_lo"] = vector_to_json(fixed.lo());
    data["fixed_box_hi"] = vector_to_json(fixed.hi());
    data["inflated_box_lo"] = vector_to_json(inflated.lo());
    data["inflated_box_hi"] = vector_to_json(inflated.hi());
    if (c.num_samples > 0) {
        const PointSet points =
            sampled_fixed_points(imdp, c.num_samples, c.seeds.front(), c.epsilon);
        const IntervalVector hull = inflate(fixed, c.epsilon);
        Json sampled = Json::array();
        bool all_inside = true;
        for (const Vector& p : points.points) {
            sampled.push_back(vector_to_json(p));
            all_inside = all_inside && hull.contains(p);
        }
        data["sampled_fixed_points"] = std::move(sampled);
        data["samples_in_inflated_box"] = all_inside;
    }
    return {std::move(data), kExitOk, ""};
}

ModeResult run_certify(const ExperimentConfig& c) {
    const IntervalMdp imdp = load_input([&] { return load_interval_mdp(c.input); });
    if (!c.policy_actions) {
        throw validation_error("config: certify mode needs a \"policy\" action list");
    }
    const Policy policy = Policy::deterministic(*c.policy_actions, imdp.num_actions());
    const OptimalityCertificate cert = certify_interval_optimality(
        imdp.kernel(), imdp.discount(), policy, imdp.cost_box().lo(), imdp.cost_box().hi());
    Json data{{"certified", cert.certified},
              {"residual_lo", cert.residual_lo},
              {"residual_hi", cert.residual_hi},
              {"value_lo", vector_to_json(cert.value_lo)},
              {"value_hi", vector_to_json(cert.value_hi)}};
    return {std::move(data), kExitOk, ""};
}

CostSampler build_sampler(const ExperimentConfig& c) {
    if (c.sampler_kind == "finite-list") return CostSampler::finite_list(c.cost_list);
    if (c.sampler_kind == "vertex") return CostSampler::vertex();
    return CostSampler::uniform_box();
}

ModeResult run_trajectory(const ExperimentConfig& c, const fs::path& dir) {
    const IntervalMdp imdp = load_input([&] { return load_interval_mdp(c.input); });
    const CostSampler sampler = build_sampler(c);
    Json runs = Json::array();
    IntervalVector fixed = IntervalVector::degenerate(Vector::Zero(imdp.num_states()));
    for (const std::uint64_t seed : c.seeds) {
        const Vector v0 = resolve_v0(c, imdp.num_states(), seed);
        const TrajectoryRecord rec =
            random_cost_trajectory(imdp, v0, c.num_steps, seed, sampler, c.epsilon);
        fixed = rec.fixed_box;

        std::ostringstream csv;
        csv << "# config " << config_with_seed(c, seed).dump() << '\n';
        csv << "step,state,value,box_lo,box_hi,dist_to_fixed_box\n";
        bool all_contained = true;
        long first_violation = -1;
        for (std::size_t k = 0; k < rec.values.size(); ++k) {
            const bool inside = rec.boxes[k].contains(rec.values[k], 1e-9);
            if (!inside && first_violation < 0) first_violation = static_cast<long>(k);
            all_contained = all_contained && inside;
            for (Eigen::Index s = 0; s < rec.values[k].size(); ++s) {
                append_csv_row(csv, {std::to_string(k), std::to_string(s),
                                     format_double(rec.values[k][s]),
                                     format_double(rec.boxes[k].lo()[s]),
                                     format_double(rec.boxes[k].hi()[s]),
                                     format_double(rec.dist_to_fixed_box[k])});
            }
        }
        const std::string name = "trajectory_seed" + std::to_string(seed) + ".csv";
        write_text_file((dir / name).string(), csv.str());

        const std::size_t tail = std::max<std::size_t>(1, rec.values.size() / 10);
        double tail_distance = 0.0;
        for (std::size_t k = rec.values.size() - tail; k < rec.values.size(); ++k) {
            tail_distance = std::max(tail_distance, rec.dist_to_fixed_box[k]);
        }
        runs.push_back(Json{{"seed", seed},
                            {"csv", name},
                            {"all_contained", all_contained},
                            {"first_violation", first_violation},
                            {"final_distance", rec.dist_to_fixed_box.back()},
                            {"tail_distance", tail_distance}});
    }
    Json data{{"runs", std::move(runs)},
              {"fixed_box_lo", vector_to_json(fixed.lo())},
              {"fixed_box_hi", vector_to_json(fixed.hi())}};
    return {std::move(data), kExitOk, ""};
}

ModeResult run_game_sim(const ExperimentConfig& c, const fs::path& dir) {
    const GameSpec spec = load_input([&] { return load_game(c.input); });
    const OpponentSpec opp_spec =
        c.opponent_override ? opponent_from_json(*c.opponent_override) : spec.opponent;
    const auto opponent =
        make_opponent(opp_spec, spec.game.num_states(), spec.game.num_actions());
    Json runs = Json::array();
    int code = kExitOk;
    std::string message;
    for (const std::uint64_t seed : c.seeds) {
        const Vector v0 = resolve_v0(c, spec.game.num_states(), seed);
        const GameTrajectory traj =
            two_player_vi(spec.game, *opponent, v0, c.num_iters, seed, c.epsilon);
        const ContainmentReport report = containment_report(traj, traj.fixed_box);

        std::ostringstream csv;
        csv << "# config " << config_with_seed(c, seed).dump() << '\n';
        csv << "iter,state,v,box_lo,box_hi,contained,dist_to_fixed_box,opponent_kind\n";
        for (std::size_t k = 0; k < traj.values.size(); ++k) {
            for (Eigen::Index s = 0; s < traj.values[k].size(); ++s) {
                append_csv_row(csv, {std::to_string(k), std::to_string(s),
                                     format_double(traj.values[k][s]),
                                     format_double(traj.boxes[k].lo()[s]),
                                     format_double(traj.boxes[k].hi()[s]),
                                     report.contained[k] ? "1" : "0",
                                     format_double(traj.dist_to_fixed_box[k]),
                                     traj.opponent_kind});
            }
        }
        const std::string name = "game_seed" + std::to_string(seed) + ".csv";
        write_text_file((dir / name).string(), csv.str());

        Json entry{{"seed", seed},
                   {"csv", name},
                   {"opponent_kind", traj.opponent_kind},
                   {"all_contained", report.all_contained},
                   {"first_violation", report.first_violation},
                   {"tail_distance", report.tail_distance},
                   {"pass", report.pass},
                   {"fixed_box_lo", vector_to_json(traj.fixed_box.lo())},
                   {"fixed_box_hi", vector_to_json(traj.fixed_box.hi())}};
        if (!traj.error.empty()) {
            entry["error"] = traj.error;
            code = kExitRuntime;
            message = "opponent failed: " + traj.error;
        }
        runs.push_back(std::move(entry));
    }
    return {Json{{"runs", std::move(runs)}}, code, message};
}

ModeResult run_grid_gen(const ExperimentConfig& c, const fs::path& dir) {
    const GridSpec spec{c.rows, c.cols, c.stick_prob, c.gen_seed};
    const Matrix kernel = build_grid_kernel(spec);
    const int s_count = spec.rows * spec.cols;
    const auto [base_cost, coupling] = sample_cost_matrices(spec, s_count, kGridActions);

    Json doc;
    std::string name;
    if (c.emit == "mdp") {
        doc = mdp_to_json(Mdp(kernel, base_cost, c.discount));
        name = "mdp.json";
    } else if (c.emit == "interval-mdp") {
        doc = interval_mdp_to_json(
            IntervalMdp(kernel, IntervalMatrix(base_cost, base_cost + coupling), c.discount));
        name = "interval_mdp.json";
    } else {
        OpponentSpec opponent;
        if (c.opponent_override) opponent = opponent_from_json(*c.opponent_override);
        doc = game_to_json(
            SingleControllerGame(kernel, base_cost, coupling, c.discount, c.discount_p2),
            opponent);
        name = "game.json";
    }
    doc["generator"] = Json{{"rng", Rng::algorithm()},
                            {"seed", c.gen_seed},
                            {"rows", c.rows},
                            {"cols", c.cols},
                            {"stick_prob", c.stick_prob}};
    write_text_file((dir / name).string(), doc.dump(2) + "\n");
    return {Json{{"emitted", name}}, kExitOk, ""};
}

void write_result(const fs::path& dir, const ExperimentConfig& c, const Json& data) {
    Json result{{"config", c.resolved}, {"result", data}};
    write_text_file((dir / "result.json").string(), result.dump(2) + "\n");
}

}  // namespace

std::vector<ExperimentConfig> parse_configs(const Json& document, const std::string& base_dir,
                                            const RunOverrides& overrides) {
    std::vector<ExperimentConfig> configs;
    if (document.is_array()) {
        for (std::size_t i = 0; i < document.size(); ++i) {
            configs.push_back(parse_one(document[i], i, base_dir, overrides));
        }
    } else {
        configs.push_back(parse_one(document, 0, base_dir, overrides));
    }
    // Duplicate labels would overwrite each other's artifacts.
    std::set<std::string> seen;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        while (!seen.insert(configs[i].label).second) {
            configs[i].label += "_" + std::to_string(i);
        }
        configs[i].resolved["label"] = configs[i].label;
    }
    return configs;
}

RunOutcome run(const ExperimentConfig& config) {
    RunOutcome outcome{config.label, config.mode, kExitOk, ""};
    const fs::path dir = fs::path(config.out_dir) / config.label;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        outcome.exit_code = kExitRuntime;
        outcome.message = "cannot create output directory: " + dir.string();
        return outcome;
    }
    try {
        ModeResult result;
        if (config.mode == "solve") {
            result = run_solve(config);
        } else if (config.mode == "set-solve") {
            result = run_set_solve(config);
        } else if (config.mode == "certify") {
            result = run_certify(config);
        } else if (config.mode == "trajectory") {
            result = run_trajectory(config, dir);
        } else if (config.mode == "game-sim") {
            result = run_game_sim(config, dir);
        } else {
            result = run_grid_gen(config, dir);
        }
        if (!result.message.empty()) result.data["error"] = result.message;
        write_result(dir, config, result.data);
        outcome.exit_code = result.code;
        outcome.message = result.message;
    } catch (const parse_error& e) {
        outcome.exit_code = kExitValidation;
        outcome.message = e.what();
    } catch (const validation_error& e) {
        outcome.exit_code = kExitValidation;
        outcome.message = e.what();
    } catch (const dimension_error& e) {
        outcome.exit_code = kExitValidation;
        outcome.message = e.what();
    } catch (const std::exception& e) {
        outcome.exit_code = kExitRuntime;
        outcome.message = e.what();
    }
    if (outcome.exit_code != kExitOk && !outcome.message.empty()) {
        // Best effort: leave the failure visible next to any partial artifacts.
        Json result{{"config", config.resolved}, {"error", outcome.message}};
        try {
            write_text_file((dir / "error.json").string(), result.dump(2) + "\n");
        } catch (const std::exception&) {
        }
    }
    return outcome;
}

int run_all(const std::vector<ExperimentConfig>& configs, bool quiet) {
    if (configs.empty()) return kExitOk;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(configs.size()));
    if (const char* env = std::getenv("SETBELLMAN_THREADS")) {
        char* end = nullptr;
        const unsigned long cap = std::strtoul(env, &end, 10);
        if (end != env && cap >= 1) threads = std::min<unsigned>(threads, cap);
    }

    std::vector<RunOutcome> outcomes(configs.size());
    std::atomic<std::size_t> next{0};
    std::mutex io_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= configs.size()) break;
            outcomes[i] = run(configs[i]);
            if (!quiet) {
                std::lock_guard<std::mutex> lock(io_mutex);
                std::cout << "[" << outcomes[i].label << "] mode=" << outcomes[i].mode;
                if (outcomes[i].exit_code == kExitOk) {
                    std::cout << " ok\n";
                } else {
                    std::cout << " failed (" << outcomes[i].message << ")\n";
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();

    bool any_validation = false;
    bool any_runtime = false;
    for (const RunOutcome& o : outcomes) {
        any_validation = any_validation || o.exit_code == kExitValidation;
        any_runtime = any_runtime || o.exit_code == kExitRuntime;
    }
    if (any_validation) return kExitValidation;
    if (any_runtime) return kExitRuntime;
    return kExitOk;
}

int run_config_file(const std::string& config_path, const RunOverrides& overrides) {
    std::vector<ExperimentConfig> configs;
    try {
        const Json document = load_json_file(config_path);
        const std::string base_dir = fs::path(config_path).parent_path().string();
        configs = parse_configs(document, base_dir, overrides);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitValidation;
    }
    return run_all(configs, overrides.quiet);
}

}  // namespace setbellman::harness
