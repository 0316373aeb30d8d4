#include "setbellman/json_io.hpp"

#include <fstream>
#include <sstream>

#include "setbellman/errors.hpp"

namespace setbellman {

namespace {

const Json& require(const Json& j, const char* field, const std::string& context) {
    const auto it = j.find(field);
    if (it == j.end()) {
        throw parse_error(context + ": missing field \"" + field + "\"");
    }
    return *it;
}

double number(const Json& j, const char* field, const std::string& context) {
    const Json& v = require(j, field, context);
    if (!v.is_number()) {
        throw parse_error(context + ": field \"" + field + "\" must be a number");
    }
    return v.get<double>();
}

int integer(const Json& j, const char* field, const std::string& context) {
    const Json& v = require(j, field, context);
    if (!v.is_number_integer()) {
        throw parse_error(context + ": field \"" + field + "\" must be an integer");
    }
    return v.get<int>();
}

Matrix matrix(const Json& j, const char* field, Eigen::Index rows, Eigen::Index cols,
              const std::string& context) {
    const Json& v = require(j, field, context);
    if (!v.is_array() || static_cast<Eigen::Index>(v.size()) != rows) {
        throw parse_error(context + ": field \"" + field + "\" must be an array of " +
                          std::to_string(rows) + " rows");
    }
    Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const Json& row = v[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
            throw parse_error(context + ": field \"" + field + "\" row " + std::to_string(r) +
                              " must hold " + std::to_string(cols) + " numbers");
        }
        for (Eigen::Index c = 0; c < cols; ++c) {
            const Json& cell = row[static_cast<std::size_t>(c)];
            if (!cell.is_number()) {
                throw parse_error(context + ": field \"" + field + "\" entry (" +
                                  std::to_string(r) + "," + std::to_string(c) +
                                  ") must be a number");
            }
            m(r, c) = cell.get<double>();
        }
    }
    return m;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

struct Header {
    int num_states;
    int num_actions;
    double discount;
    Matrix kernel;
};

Header header_from_json(const Json& j, const std::string& context) {
    const int s_count = integer(j, "num_states", context);
    const int a_count = integer(j, "num_actions", context);
    if (s_count < 1 || a_count < 1) {
        throw parse_error(context + ": num_states and num_actions must be positive");
    }
    const double discount = number(j, "discount", context);
    Matrix kernel = matrix(j, "kernel", s_count, static_cast<Eigen::Index>(s_count) * a_count,
                           context);
    return {s_count, a_count, discount, std::move(kernel)};
}

}  // namespace

Mdp mdp_from_json(const Json& j) {
    const std::string context = "mdp";
    Header h = header_from_json(j, context);
    Matrix cost = matrix(j, "cost", h.num_states, h.num_actions, context);
    return {std::move(h.kernel), std::move(cost), h.discount};
}

Json mdp_to_json(const Mdp& mdp) {
    return Json{{"num_states", mdp.num_states()},
                {"num_actions", mdp.num_actions()},
                {"discount", mdp.discount()},
                {"kernel", matrix_to_json(mdp.kernel())},
                {"cost", matrix_to_json(mdp.cost())}};
}

IntervalMdp interval_mdp_from_json(const Json& j) {
    const std::string context = "interval mdp";
    Header h = header_from_json(j, context);
    Matrix lo = matrix(j, "cost_lo", h.num_states, h.num_actions, context);
    Matrix hi = matrix(j, "cost_hi", h.num_states, h.num_actions, context);
    try {
        return {std::move(h.kernel), IntervalMatrix(std::move(lo), std::move(hi)), h.discount};
    } catch (const validation_error& e) {
        throw validation_error(context + ": " + e.what());
    }
}

Json interval_mdp_to_json(const IntervalMdp& imdp) {
    return Json{{"num_states", imdp.num_states()},
                {"num_actions", imdp.num_actions()},
                {"discount", imdp.discount()},
                {"kernel", matrix_to_json(imdp.kernel())},
                {"cost_lo", matrix_to_json(imdp.cost_box().lo())},
                {"cost_hi", matrix_to_json(imdp.cost_box().hi())}};
}

std::unique_ptr<OpponentStrategy> make_opponent(const OpponentSpec& spec, int num_states,
                                                int num_actions) {
    if (spec.kind == "min_vi") return make_min_vi(spec.gamma, spec.init);
    if (spec.kind == "max_vi") return make_max_vi(spec.gamma, spec.init);
    if (spec.kind == "uniform_random") return make_uniform_random();
    if (spec.kind == "fixed") {
        if (spec.fixed_actions) {
            if (static_cast<int>(spec.fixed_actions->size()) != num_states) {
                throw validation_error("opponent: fixed action list length differs from S");
            }
            return make_fixed(Policy::deterministic(*spec.fixed_actions, num_actions));
        }
        if (spec.fixed_probs) {
            return make_fixed(Policy(*spec.fixed_probs));
        }
        throw validation_error("opponent: fixed kind needs \"actions\" or \"policy\"");
    }
    throw validation_error("opponent: unknown kind \"" + spec.kind + "\"");
}

OpponentSpec opponent_from_json(const Json& j) {
    const std::string context = "opponent";
    OpponentSpec spec;
    const Json& kind = require(j, "kind", context);
    if (!kind.is_string()) {
        throw parse_error(context + ": field \"kind\" must be a string");
    }
    spec.kind = kind.get<std::string>();
    if (j.contains("gamma")) spec.gamma = number(j, "gamma", context);
    if (j.contains("init")) {
        const std::string init = require(j, "init", context).get<std::string>();
        if (init == "zero") {
            spec.init = ValueInit::Zero;
        } else if (init == "uniform01") {
            spec.init = ValueInit::Uniform01;
        } else {
            throw parse_error(context + ": field \"init\" must be \"zero\" or \"uniform01\"");
        }
    }
    if (j.contains("actions")) {
        std::vector<int> actions;
        for (const Json& a : j["actions"]) {
            if (!a.is_number_integer()) {
                throw parse_error(context + ": field \"actions\" must hold integers");
            }
            actions.push_back(a.get<int>());
        }
        spec.fixed_actions = std::move(actions);
    }
    if (j.contains("policy")) {
        const Json& p = j["policy"];
        if (!p.is_array() || p.empty() || !p[0].is_array() || p[0].empty()) {
            throw parse_error(context + ": field \"policy\" must be a matrix of rows");
        }
        spec.fixed_probs = matrix(j, "policy", static_cast<Eigen::Index>(p.size()),
                                  static_cast<Eigen::Index>(p[0].size()), context);
    }
    return spec;
}

Json opponent_to_json(const OpponentSpec& spec) {
    Json j{{"kind", spec.kind}};
    if (spec.kind == "min_vi" || spec.kind == "max_vi") {
        j["gamma"] = spec.gamma;
        j["init"] = spec.init == ValueInit::Zero ? "zero" : "uniform01";
    }
    if (spec.fixed_actions) j["actions"] = *spec.fixed_actions;
    if (spec.fixed_probs) j["policy"] = matrix_to_json(*spec.fixed_probs);
    return j;
}

GameSpec game_from_json(const Json& j) {
    const std::string context = "game";
    Header h = header_from_json(j, context);
    Matrix cost = matrix(j, "cost", h.num_states, h.num_actions, context);
    Matrix coupling = matrix(j, "coupling", h.num_states, h.num_actions, context);
    const double discount_p2 = number(j, "discount_p2", context);
    OpponentSpec opponent;
    if (j.contains("opponent")) opponent = opponent_from_json(j["opponent"]);
    return {SingleControllerGame(std::move(h.kernel), std::move(cost), std::move(coupling),
                                 h.discount, discount_p2),
            std::move(opponent)};
}

Json game_to_json(const SingleControllerGame& game, const OpponentSpec& opponent) {
    return Json{{"num_states", game.num_states()},
                {"num_actions", game.num_actions()},
                {"discount", game.discount_p1()},
                {"discount_p2", game.discount_p2()},
                {"kernel", matrix_to_json(game.kernel())},
                {"cost", matrix_to_json(game.base_cost())},
                {"coupling", matrix_to_json(game.coupling())},
                {"opponent", opponent_to_json(opponent)}};
}

Json parse_json_text(const std::string& text, const std::string& context) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw parse_error(context + ": invalid JSON: " + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot read file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw io_error("cannot write file: " + path);
    }
    out << content;
    if (!out) {
        throw io_error("write failed: " + path);
    }
}

Json load_json_file(const std::string& path) {
    return parse_json_text(read_text_file(path), path);
}

Mdp load_mdp(const std::string& path) { return mdp_from_json(load_json_file(path)); }

IntervalMdp load_interval_mdp(const std::string& path) {
    return interval_mdp_from_json(load_json_file(path));
}

GameSpec load_game(const std::string& path) { return game_from_json(load_json_file(path)); }

}  // namespace setbellman
