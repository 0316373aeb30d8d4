// Experiment CLI. Links the shared C API only; all solver and harness
// logic lives behind setbellman.h.

#include <cstdio>
#include <string>

#include <CLI11.hpp>
#include <setbellman/setbellman.h>

int main(int argc, char** argv) {
    CLI::App app{
        "setbellman: interval-cost MDP solving, fixed-point box computation and "
        "two-player game simulation driven by JSON configs"};
    app.set_version_flag("--version", std::string(sb_version()));

    std::string config_path;
    std::string out_dir;
    unsigned long long seed = 0;
    double epsilon = 0.0;
    bool quiet = false;

    app.add_option("--config", config_path, "Path to a config JSON file (object or array)")
        ->required();
    auto* out_opt = app.add_option("--out", out_dir, "Output directory for artifacts");
    auto* seed_opt = app.add_option("--seed", seed, "Seed override applied to every run");
    auto* eps_opt = app.add_option("--epsilon", epsilon, "Epsilon override applied to every run");
    app.add_flag("--quiet", quiet, "Suppress per-run progress lines");

    CLI11_PARSE(app, argc, argv);

    sb_run_options options{};
    options.out_dir = out_opt->count() > 0 ? out_dir.c_str() : nullptr;
    options.has_seed = seed_opt->count() > 0 ? 1 : 0;
    options.seed = seed;
    options.has_epsilon = eps_opt->count() > 0 ? 1 : 0;
    options.epsilon = epsilon;
    options.quiet = quiet ? 1 : 0;

    int exit_code = 0;
    const sb_status status = sb_run_config_file(config_path.c_str(), &options, &exit_code);
    if (status != SB_OK) {
        std::fprintf(stderr, "error: %s\n", sb_last_error());
        return status == SB_ERROR_PARSE || status == SB_ERROR_VALIDATION ? 2 : 1;
    }
    return exit_code;
}
