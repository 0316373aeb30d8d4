/*
 * C interface to the setbellman solver library.
 *
 * Objects are created behind opaque handles and every call reports an
 * sb_status. On failure, sb_last_error() returns a thread-local message
 * describing what went wrong (valid until the next failing call on the
 * same thread). Output buffers are caller-allocated; their required sizes
 * follow from the state and action counts of the handle.
 */

#ifndef SETBELLMAN_H
#define SETBELLMAN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sb_status {
    SB_OK = 0,
    SB_ERROR_INVALID_ARGUMENT = 1, /* null handle or bad scalar argument */
    SB_ERROR_PARSE = 2,            /* malformed JSON; message names the field */
    SB_ERROR_VALIDATION = 3,       /* input violates a documented invariant */
    SB_ERROR_DIMENSION = 4,        /* mismatched shapes */
    SB_ERROR_IO = 5,               /* file could not be read or written */
    SB_ERROR_INTERNAL = 6          /* numerical routine failed a self-check */
} sb_status;

typedef struct sb_mdp_t sb_mdp_t;
typedef struct sb_interval_mdp_t sb_interval_mdp_t;

/* Library version string, e.g. "0.1.0". */
const char* sb_version(void);

/* Thread-local detail message for the most recent failure on this thread. */
const char* sb_last_error(void);

/* Frees strings returned through char** output parameters. */
void sb_string_free(char* s);

/* ---- discounted MDPs ---------------------------------------------------- */

/* Parses the MDP JSON document (num_states, num_actions, discount, kernel,
 * cost). The handle must be released with sb_mdp_free. */
sb_status sb_mdp_parse_json(const char* json_text, sb_mdp_t** out_mdp);
sb_status sb_mdp_load_file(const char* path, sb_mdp_t** out_mdp);
void sb_mdp_free(sb_mdp_t* mdp);

int sb_mdp_num_states(const sb_mdp_t* mdp);
int sb_mdp_num_actions(const sb_mdp_t* mdp);
double sb_mdp_discount(const sb_mdp_t* mdp);

/* Writes a JSON array of human-readable violation messages to *out_report
 * (empty array when the MDP is valid). Free with sb_string_free. */
sb_status sb_mdp_validate(const sb_mdp_t* mdp, char** out_report);

/* out_value must hold num_states doubles; v must hold num_states doubles. */
sb_status sb_mdp_bellman_apply(const sb_mdp_t* mdp, const double* v, double* out_value);

/* Greedy action per state for the given value function; out_actions must
 * hold num_states ints. */
sb_status sb_mdp_greedy_actions(const sb_mdp_t* mdp, const double* v, int* out_actions);

/* Stationary value of the deterministic policy given by actions (one index
 * per state); out_value must hold num_states doubles. */
sb_status sb_mdp_policy_evaluation(const sb_mdp_t* mdp, const int* actions, double* out_value);

/* Value iteration from v0 (NULL starts from zero). Stops once the step
 * certifies an epsilon/2 error bound, or after max_iters sweeps with
 * *out_converged = 0. */
sb_status sb_mdp_value_iteration(const sb_mdp_t* mdp, const double* v0, double epsilon,
                                 long max_iters, double* out_value, long* out_iterations,
                                 int* out_converged);

/* ---- interval-cost MDP families ----------------------------------------- */

/* Parses the interval MDP JSON document (cost_lo / cost_hi instead of
 * cost). The handle must be released with sb_imdp_free. */
sb_status sb_imdp_parse_json(const char* json_text, sb_interval_mdp_t** out_imdp);
sb_status sb_imdp_load_file(const char* path, sb_interval_mdp_t** out_imdp);
void sb_imdp_free(sb_interval_mdp_t* imdp);

int sb_imdp_num_states(const sb_interval_mdp_t* imdp);
int sb_imdp_num_actions(const sb_interval_mdp_t* imdp);

/* Bounds of the fixed-point box computed from the endpoint costs; out_lo
 * and out_hi must each hold num_states doubles. */
sb_status sb_imdp_fixed_point_box(const sb_interval_mdp_t* imdp, double epsilon, double* out_lo,
                                  double* out_hi);

/* Set-based value iteration from the degenerate box at zero. */
sb_status sb_imdp_set_value_iteration(const sb_interval_mdp_t* imdp, double epsilon,
                                      long max_iters, double* out_lo, double* out_hi,
                                      long* out_iterations, int* out_converged);

/* Certifies the deterministic policy (one action index per state) against
 * the cost box; *out_certified is 1 when the policy solves the operator
 * equation at both endpoint costs. out_residual_{lo,hi} may be NULL. */
sb_status sb_imdp_certify_policy(const sb_interval_mdp_t* imdp, const int* actions,
                                 int* out_certified, double* out_residual_lo,
                                 double* out_residual_hi);

/* ---- experiment driver --------------------------------------------------- */

typedef struct sb_run_options {
    const char* out_dir;    /* NULL keeps the config's own output directory */
    int has_seed;           /* nonzero applies the seed override */
    uint64_t seed;
    int has_epsilon;        /* nonzero applies the epsilon override */
    double epsilon;
    int quiet;              /* nonzero suppresses per-run progress lines */
} sb_run_options;

/* Runs the config file (one object or an array of runs). *out_exit_code
 * receives 0 on success, 2 on validation failures and 1 on runtime
 * failures, matching the CLI contract. */
sb_status sb_run_config_file(const char* config_path, const sb_run_options* options,
                             int* out_exit_code);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SETBELLMAN_H */
