#include "setbellman/setbellman.h"

#include <cstring>
#include <new>
#include <string>

#include "setbellman/errors.hpp"
#include "setbellman/harness.hpp"
#include "setbellman/json_io.hpp"

using namespace setbellman;

struct sb_mdp_t {
    Mdp rep;
};

struct sb_interval_mdp_t {
    IntervalMdp rep;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& message) { g_last_error = message; }

sb_status fail(sb_status status, const std::string& message) {
    set_error(message);
    return status;
}

/// Runs the body, translating exceptions into status codes.
template <typename F>
sb_status guarded(F&& body) {
    try {
        return body();
    } catch (const parse_error& e) {
        return fail(SB_ERROR_PARSE, e.what());
    } catch (const validation_error& e) {
        return fail(SB_ERROR_VALIDATION, e.what());
    } catch (const dimension_error& e) {
        return fail(SB_ERROR_DIMENSION, e.what());
    } catch (const io_error& e) {
        return fail(SB_ERROR_IO, e.what());
    } catch (const solve_error& e) {
        return fail(SB_ERROR_INTERNAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(SB_ERROR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(SB_ERROR_INTERNAL, e.what());
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::vector<int> actions_from(const int* actions, int num_states) {
    return std::vector<int>(actions, actions + num_states);
}

}  // namespace

extern "C" {

const char* sb_version(void) { return "0.1.0"; }

const char* sb_last_error(void) { return g_last_error.c_str(); }

void sb_string_free(char* s) { delete[] s; }

sb_status sb_mdp_parse_json(const char* json_text, sb_mdp_t** out_mdp) {
    if (!json_text || !out_mdp) return fail(SB_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const Json j = parse_json_text(json_text, "mdp");
        *out_mdp = new sb_mdp_t{mdp_from_json(j)};
        return SB_OK;
    });
}

sb_status sb_mdp_load_file(const char* path, sb_mdp_t** out_mdp) {
    if (!path || !out_mdp) return fail(SB_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out_mdp = new sb_mdp_t{load_mdp(path)};
        return SB_OK;
    });
}

void sb_mdp_free(sb_mdp_t* mdp) { delete mdp; }

int sb_mdp_num_states(const sb_mdp_t* mdp) { return mdp ? mdp->rep.num_states() : 0; }

int sb_mdp_num_actions(const sb_mdp_t* mdp) { return mdp ? mdp->rep.num_actions() : 0; }

double sb_mdp_discount(const sb_mdp_t* mdp) { return mdp ? mdp->rep.discount() : 0.0; }

sb_status sb_mdp_validate(const sb_mdp_t* mdp, char** out_report) {
    if (!mdp || !out_report) return fail(SB_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        Json report = Json::array();
        for (const std::string& violation : validate_mdp(mdp->rep)) report.push_back(violation);
        *out_report = copy_string(report.dump());
        return SB_OK;
    });
}

sb_status sb_mdp_bellman_apply(const sb_mdp_t* mdp, const double* v, double* out_value) {
    if (!mdp || !v || !out_value) return fail(SB_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const Eigen::Map<const Vector> value(v, mdp->rep.num_states());
        const Vector result = bellman_apply(mdp->rep, value);
        Eigen::Map<Vector>(out_value, result.size()) = result;
        return SB_OK;
    });
}

sb_status sb_mdp_greedy_actions(const sb_mdp_t* mdp, const double* v, int* out_actions) {
    if (!mdp || !v || !out_actions) return fail(SB_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const Eigen::Map<const Vector> value(v, mdp->rep.num_states());
        const std::vector<int> actions = greedy_policy(mdp->rep, value).actions();
        std::copy(actions.begin(), actions.end(), out_actions);
        return SB_OK;
    });
}

sb_status sb_mdp_policy_evaluation(const sb_mdp_t* mdp, const int* actions, double* out_value) {
    if (!mdp || !actions || !out_value) return fail(SB_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const Policy policy = Policy::deterministic(actions_from(actions, mdp->rep.num_states()),
                                                    mdp->rep.num_actions());
        const Vector value = policy_evaluation(mdp->rep, policy);
        Eigen::Map<Vector>(out_value, value.size()) = value;
        return SB_OK;
    });
}

sb_status sb_mdp_value_iteration(const sb_mdp_t* mdp, const double* v0, double epsilon,
                                 long max_iters, double* out_value, long* out_iterations,
                                 int* out_converged) {
    if (!mdp || !out_value || !out_iterations || !out_converged) {
        return fail(SB_ERROR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        const int n = mdp->rep.num_states();
        const Vector start = v0 ? Vector(Eigen::Map<const Vector>(v0, n)) : Vector(Vector::Zero(n));
        const ValueIterationResult r = value_iteration(mdp->rep, start, epsilon, max_iters);
        Eigen::Map<Vector>(out_value, r.value.size()) = r.value;
        *out_iterations = r.iterations;
        *out_converged = r.converged ? 1 : 0;
        return SB_OK;
    });
}

sb_status sb_imdp_parse_json(const char* json_text, sb_interval_mdp_t** out_imdp) {
    if (!json_text || !out_imdp) return fail(SB_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const Json j = parse_json_text(json_text, "interval mdp");
        *out_imdp = new sb_interval_mdp_t{interval_mdp_from_json(j)};
        return SB_OK;
    });
}

sb_status sb_imdp_load_file(const char* path, sb_interval_mdp_t** out_imdp) {
    if (!path || !out_imdp) return fail(SB_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        *out_imdp = new sb_interval_mdp_t{load_interval_mdp(path)};
        return SB_OK;
    });
}

void sb_imdp_free(sb_interval_mdp_t* imdp) { delete imdp; }

int sb_imdp_num_states(const sb_interval_mdp_t* imdp) {
    return imdp ? imdp->rep.num_states() : 0;
}

int sb_imdp_num_actions(const sb_interval_mdp_t* imdp) {
    return imdp ? imdp->rep.num_actions() : 0;
}

sb_status sb_imdp_fixed_point_box(const sb_interval_mdp_t* imdp, double epsilon, double* out_lo,
                                  double* out_hi) {
    if (!imdp || !out_lo || !out_hi) return fail(SB_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        const IntervalVector box = fixed_point_box(imdp->rep, epsilon);
        Eigen::Map<Vector>(out_lo, box.size()) = box.lo();
        Eigen::Map<Vector>(out_hi, box.size()) = box.hi();
        return SB_OK;
    });
}

sb_status sb_imdp_set_value_iteration(const sb_interval_mdp_t* imdp, double epsilon,
                                      long max_iters, double* out_lo, double* out_hi,
                                      long* out_iterations, int* out_converged) {
    if (!imdp || !out_lo || !out_hi || !out_iterations || !out_converged) {
        return fail(SB_ERROR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        const Vector zero = Vector::Zero(imdp->rep.num_states());
        const SetVISolution sol = set_value_iteration(
            imdp->rep, IntervalVector::degenerate(zero), epsilon, max_iters);
        Eigen::Map<Vector>(out_lo, sol.box.size()) = sol.box.lo();
        Eigen::Map<Vector>(out_hi, sol.box.size()) = sol.box.hi();
        *out_iterations = sol.iterations;
        *out_converged = sol.converged ? 1 : 0;
        return SB_OK;
    });
}

sb_status sb_imdp_certify_policy(const sb_interval_mdp_t* imdp, const int* actions,
                                 int* out_certified, double* out_residual_lo,
                                 double* out_residual_hi) {
    if (!imdp || !actions || !out_certified) {
        return fail(SB_ERROR_INVALID_ARGUMENT, "null argument");
    }
    return guarded([&] {
        const Policy policy = Policy::deterministic(
            actions_from(actions, imdp->rep.num_states()), imdp->rep.num_actions());
        const OptimalityCertificate cert =
            certify_interval_optimality(imdp->rep.kernel(), imdp->rep.discount(), policy,
                                        imdp->rep.cost_box().lo(), imdp->rep.cost_box().hi());
        *out_certified = cert.certified ? 1 : 0;
        if (out_residual_lo) *out_residual_lo = cert.residual_lo;
        if (out_residual_hi) *out_residual_hi = cert.residual_hi;
        return SB_OK;
    });
}

sb_status sb_run_config_file(const char* config_path, const sb_run_options* options,
                             int* out_exit_code) {
    if (!config_path || !out_exit_code) return fail(SB_ERROR_INVALID_ARGUMENT, "null argument");
    return guarded([&] {
        harness::RunOverrides overrides;
        if (options) {
            if (options->out_dir) overrides.out_dir = options->out_dir;
            if (options->has_seed) overrides.seed = options->seed;
            if (options->has_epsilon) overrides.epsilon = options->epsilon;
            overrides.quiet = options->quiet != 0;
        }
        *out_exit_code = harness::run_config_file(config_path, overrides);
        return SB_OK;
    });
}

}  // extern "C"
