#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "setbellman/set_bellman.hpp"

namespace setbellman {

/// Two-player stochastic game in which the transition kernel depends on
/// player one's actions only. Both players share the state space and the
/// action count A, and each discounts with its own factor.
///
/// Costs couple through the matching structure
///   D1[s,a,b] = base_cost[s,a] + coupling[s,a] * [a == b]
///   D2[s,b,a] = base_cost[s,b] - coupling[s,b] * [b == a]
/// so player one pays a surcharge exactly where player two picks the same
/// action, and player two collects it as a rebate on its own cost.
class SingleControllerGame {
public:
    SingleControllerGame(Matrix kernel, Matrix base_cost, Matrix coupling, double discount_p1,
                         double discount_p2);

    int num_states() const { return static_cast<int>(base_cost_.rows()); }
    int num_actions() const { return static_cast<int>(base_cost_.cols()); }
    int num_actions_p1() const { return num_actions(); }
    int num_actions_p2() const { return num_actions(); }
    const Matrix& kernel() const { return kernel_; }
    const Matrix& base_cost() const { return base_cost_; }
    const Matrix& coupling() const { return coupling_; }
    double discount_p1() const { return discount_p1_; }
    double discount_p2() const { return discount_p2_; }

    double d1(int s, int a, int b) const {
        return base_cost_(s, a) + (a == b ? coupling_(s, a) : 0.0);
    }
    double d2(int s, int b, int a) const {
        return base_cost_(s, b) - (b == a ? coupling_(s, b) : 0.0);
    }

private:
    Matrix kernel_;
    Matrix base_cost_;
    Matrix coupling_;
    double discount_p1_;
    double discount_p2_;
};

/// Player one's cost matrix once player two commits to pi2:
/// C1[s,a] = sum_b pi2(s,b) * D1[s,a,b] = base_cost[s,a] + coupling[s,a] * pi2(s,a).
Matrix player_one_cost(const SingleControllerGame& game, const Policy& pi2);

/// Player one's kernel under pi2. Because the kernel ignores player two's
/// actions, the mixture over b collapses back to the shared kernel for any
/// row-stochastic pi2.
Matrix player_one_kernel(const SingleControllerGame& game, const Policy& pi2);

/// Player two's cost matrix once player one commits to pi1:
/// C2[s,b] = base_cost[s,b] - coupling[s,b] * pi1(s,b).
Matrix player_two_cost(const SingleControllerGame& game, const Policy& pi1);

/// Entrywise hull of player one's feasible costs over all opponent
/// policies: entry (s,a) spans [min_b D1[s,a,b], max_b D1[s,a,b]].
IntervalMatrix interval_over_approx(const SingleControllerGame& game);

/// Player two's policy rule, queried once per iteration with player one's
/// latest policy.
class OpponentStrategy {
public:
    virtual ~OpponentStrategy() = default;

    /// Restores the initial internal state for a fresh run.
    virtual void reset(std::uint64_t seed) = 0;
    virtual Policy respond(const SingleControllerGame& game, const Policy& pi1) = 0;
    virtual std::string kind() const = 0;
};

enum class ValueInit { Zero, Uniform01 };

/// Opponent running value iteration on ([S],[A],P,C2(pi1),gamma) toward
/// minimizing its own discounted cost; plays the greedy action, ties to the
/// lowest index.
std::unique_ptr<OpponentStrategy> make_min_vi(double gamma, ValueInit init = ValueInit::Zero);

/// Mirror of min_vi that maximizes instead, with the arg-max greedy rule.
std::unique_ptr<OpponentStrategy> make_max_vi(double gamma, ValueInit init = ValueInit::Zero);

/// Opponent that plays the same policy every iteration.
std::unique_ptr<OpponentStrategy> make_fixed(Policy pi2);

/// Opponent drawing an independent uniform deterministic policy each turn.
std::unique_ptr<OpponentStrategy> make_uniform_random();

/// Per-iteration trace of the two-player iteration together with the
/// synchronized box iterate built from the feasible-cost hull.
struct GameTrajectory {
    std::vector<Vector> values;              // player one's V^0 .. V^K
    std::vector<Policy> p1_policies;         // pi1^1 .. pi1^K
    std::vector<Policy> p2_policies;         // pi2^0 .. pi2^{K-1} as used per step
    std::vector<Matrix> realized_costs;      // C^k materialized per step
    std::vector<IntervalVector> boxes;       // box iterate per step
    std::vector<double> dist_to_fixed_box;
    IntervalVector fixed_box;
    std::string opponent_kind;
    /// Non-empty when the opponent failed mid-run; the record holds the
    /// iterations completed before the failure.
    std::string error;
};

/// Runs the coupled iteration: materialize player one's cost from pi2,
/// apply the operator with a greedy policy extraction, then let the
/// opponent answer the new policy. Both initial policies point at action 0.
/// The seed feeds the opponent's reset.
GameTrajectory two_player_vi(const SingleControllerGame& game, OpponentStrategy& opponent,
                             const Vector& v0, int num_iters, std::uint64_t seed,
                             double epsilon = kDefaultEpsilon);

struct ContainmentReport {
    std::vector<bool> contained;  // V^k inside the box iterate, per step
    bool all_contained = false;
    long first_violation = -1;
    /// Max distance to the reference box over the last tenth of the run.
    double tail_distance = 0.0;
    bool pass = false;
    double containment_tol = 0.0;
    double tail_tol = 0.0;
};

ContainmentReport containment_report(const GameTrajectory& traj, const IntervalVector& fixed_box,
                                     double containment_tol = 1e-9, double tail_tol = 1e-3);

}  // namespace setbellman
