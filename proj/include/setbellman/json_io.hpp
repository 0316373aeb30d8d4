#pragma once

#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "setbellman/game.hpp"
#include "setbellman/mdp.hpp"
#include "setbellman/set_bellman.hpp"

namespace setbellman {

using Json = nlohmann::json;

/// MDP document: num_states, num_actions, discount, kernel (S x S*A rows),
/// cost (S x A rows). Unknown keys are ignored so emitted files may carry
/// generator metadata.
Mdp mdp_from_json(const Json& j);
Json mdp_to_json(const Mdp& mdp);

/// Interval MDP document: the MDP fields with cost replaced by the
/// cost_lo / cost_hi pair.
IntervalMdp interval_mdp_from_json(const Json& j);
Json interval_mdp_to_json(const IntervalMdp& imdp);

/// Opponent description carried inside game documents.
struct OpponentSpec {
    std::string kind = "min_vi";  // min_vi | max_vi | fixed | uniform_random
    double gamma = 0.7;           // min_vi / max_vi
    ValueInit init = ValueInit::Zero;
    std::optional<std::vector<int>> fixed_actions;  // fixed, deterministic form
    std::optional<Matrix> fixed_probs;              // fixed, mixed form
};

std::unique_ptr<OpponentStrategy> make_opponent(const OpponentSpec& spec, int num_states,
                                                int num_actions);

OpponentSpec opponent_from_json(const Json& j);
Json opponent_to_json(const OpponentSpec& spec);

/// Game document: MDP fields plus coupling, discount_p2 and opponent.
struct GameSpec {
    SingleControllerGame game;
    OpponentSpec opponent;
};

GameSpec game_from_json(const Json& j);
Json game_to_json(const SingleControllerGame& game, const OpponentSpec& opponent);

/// Parses text, turning syntax errors into parse_error with context.
Json parse_json_text(const std::string& text, const std::string& context);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

Json load_json_file(const std::string& path);
Mdp load_mdp(const std::string& path);
IntervalMdp load_interval_mdp(const std::string& path);
GameSpec load_game(const std::string& path);

}  // namespace setbellman
