#pragma once

#include <string>
#include <vector>

#include "setbellman/interval.hpp"

namespace setbellman {

/// Finite discounted MDP.
///
/// The transition kernel is an S x (S*A) matrix whose column s*A + a is the
/// distribution over successor states for the state-action pair (s, a); each
/// column sums to one. Costs are S x A and the discount lies in (0, 1).
class Mdp {
public:
    Mdp(Matrix kernel, Matrix cost, double discount);

    int num_states() const { return static_cast<int>(cost_.rows()); }
    int num_actions() const { return static_cast<int>(cost_.cols()); }
    const Matrix& kernel() const { return kernel_; }
    const Matrix& cost() const { return cost_; }
    double discount() const { return discount_; }

    /// Probability of landing in next_state from (state, action).
    double transition(int next_state, int state, int action) const {
        return kernel_(next_state, static_cast<Eigen::Index>(state) * num_actions() + action);
    }

    Mdp with_cost(Matrix cost) const { return {kernel_, std::move(cost), discount_}; }

private:
    Matrix kernel_;
    Matrix cost_;
    double discount_;
};

/// Tolerance for column stochasticity and policy row sums.
inline constexpr double kStochasticTolerance = 1e-9;

/// Checks column stochasticity, entry signs and the discount range.
/// Returns one message per violation naming the offending column or entry;
/// an empty report means the MDP is valid.
std::vector<std::string> validate_mdp(const Mdp& mdp);

/// Rescales every kernel column to sum exactly to one. Never applied
/// implicitly; columns with non-positive sums are rejected.
Mdp renormalize_kernel(const Mdp& mdp);

/// State-to-action-distribution map, stored as a row-stochastic S x A matrix.
class Policy {
public:
    explicit Policy(Matrix probs);

    /// Point-mass policy choosing actions[s] at state s.
    static Policy deterministic(const std::vector<int>& actions, int num_actions);

    const Matrix& probs() const { return probs_; }
    int num_states() const { return static_cast<int>(probs_.rows()); }
    int num_actions() const { return static_cast<int>(probs_.cols()); }

    /// True when every row has exactly one entry equal to one.
    bool is_deterministic() const;

    /// Chosen action per state; requires a deterministic policy.
    std::vector<int> actions() const;

private:
    Matrix probs_;
};

/// S x (S*A) matrix with block row s holding the policy row s at columns
/// s*A .. s*A + A - 1 and zeros elsewhere.
Matrix policy_matrix(const Policy& policy);

/// Expected immediate cost per state, nu[s] = sum_a policy(s,a) * cost(s,a).
Vector stationary_cost(const Policy& policy, const Matrix& cost);

/// One application of the dynamic programming operator:
/// out[s] = min_a cost(s,a) + discount * sum_{s'} kernel(s',(s,a)) * v[s'].
Vector bellman_apply(const Mdp& mdp, const Vector& v);

/// Deterministic policy choosing, per state, the lowest-indexed action that
/// attains the minimum in the operator above.
Policy greedy_policy(const Mdp& mdp, const Vector& v);

/// Stationary value of a policy via the direct linear solve of
/// (I - discount * M_pi * P^T) V = nu(pi). The solve residual is checked
/// against 1e-9 and a failure raises solve_error.
Vector policy_evaluation(const Mdp& mdp, const Policy& policy);

struct ValueIterationResult {
    Vector value;
    long iterations = 0;
    bool converged = false;
};

/// Iterates the operator from v0 and stops once the sup-norm step falls
/// below epsilon * (1 - discount) / (2 * discount), which certifies that the
/// returned value lies within epsilon / 2 of the fixed point. Hitting
/// max_iters first yields converged = false.
ValueIterationResult value_iteration(const Mdp& mdp, const Vector& v0, double epsilon,
                                     long max_iters = 1000000);

struct OptimalityCertificate {
    bool certified = false;
    /// Sup-norm self-consistency residuals of the policy value at the two
    /// endpoint costs.
    double residual_lo = 0.0;
    double residual_hi = 0.0;
    Vector value_lo;
    Vector value_hi;
};

/// Absolute tolerance on the self-consistency residual used by the
/// interval-cost certificate.
inline constexpr double kCertifyTolerance = 1e-8;

/// Certifies a deterministic policy against a cost box by checking that its
/// stationary value solves the operator equation at both endpoint costs.
OptimalityCertificate certify_interval_optimality(const Matrix& kernel, double discount,
                                                  const Policy& policy, const Matrix& cost_lo,
                                                  const Matrix& cost_hi);

}  // namespace setbellman
