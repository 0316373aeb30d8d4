#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "setbellman/json_io.hpp"

namespace setbellman::harness {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitValidation = 2;

/// Command-line overrides applied on top of every config entry.
struct RunOverrides {
    std::optional<std::string> out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<double> epsilon;
    bool quiet = false;
};

/// One fully resolved run. A config file holds either a single object or an
/// array of them; sweeps are expressed as arrays.
struct ExperimentConfig {
    std::string mode;   // solve | set-solve | certify | trajectory | game-sim | grid-gen
    std::string label;
    std::string input;  // resolved against the config file's directory
    std::string out_dir = "out";
    double epsilon = kDefaultEpsilon;
    long max_iters = 1000000;
    std::vector<std::uint64_t> seeds{0};

    // Initial value function: "zero", "uniform01", or an explicit vector.
    std::string v0_init = "zero";
    std::optional<std::vector<double>> v0_values;

    int num_steps = 100;  // trajectory
    int num_iters = 100;  // game-sim

    std::string sampler_kind = "uniform-box";  // uniform-box | finite-list | vertex
    std::vector<Matrix> cost_list;             // finite-list sampler

    std::optional<std::vector<int>> policy_actions;  // certify
    std::optional<Json> opponent_override;           // game-sim

    // grid-gen
    int rows = 3;
    int cols = 3;
    double stick_prob = 0.7;
    std::uint64_t gen_seed = 0;
    std::string emit = "game";  // mdp | interval-mdp | game
    double discount = 0.7;
    double discount_p2 = 0.7;
    int num_samples = 0;  // set-solve: optional sampled fixed points

    /// Full resolved view embedded into every artifact.
    Json resolved;
};

/// Expands a config document into resolved runs, applying overrides and
/// resolving relative input paths against base_dir.
std::vector<ExperimentConfig> parse_configs(const Json& document, const std::string& base_dir,
                                            const RunOverrides& overrides);

struct RunOutcome {
    std::string label;
    std::string mode;
    int exit_code = kExitOk;
    std::string message;
};

/// Executes one run, writing result.json and any CSV artifacts under
/// out_dir/label/.
RunOutcome run(const ExperimentConfig& config);

/// Runs every entry, fanning out across worker threads. The
/// SETBELLMAN_THREADS environment variable caps the parallelism. Returns
/// the most severe exit code (validation beats runtime beats ok).
int run_all(const std::vector<ExperimentConfig>& configs, bool quiet);

/// Loads a config file and runs it. This is the whole CLI behind flag
/// parsing.
int run_config_file(const std::string& config_path, const RunOverrides& overrides);

/// Doubles rendered with 17 significant digits (round-trip exact).
std::string format_double(double x);

}  // namespace setbellman::harness
