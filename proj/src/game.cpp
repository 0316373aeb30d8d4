#include "setbellman/game.hpp"

#include <algorithm>
#include <utility>

#include "setbellman/errors.hpp"

namespace setbellman {

SingleControllerGame::SingleControllerGame(Matrix kernel, Matrix base_cost, Matrix coupling,
                                           double discount_p1, double discount_p2)
    : kernel_(std::move(kernel)),
      base_cost_(std::move(base_cost)),
      coupling_(std::move(coupling)),
      discount_p1_(discount_p1),
      discount_p2_(discount_p2) {
    static_cast<void>(Mdp(kernel_, base_cost_, discount_p1_));
    if (!(discount_p2_ > 0.0 && discount_p2_ < 1.0)) {
        throw validation_error("game: player two's discount must lie strictly between 0 and 1");
    }
    if (coupling_.rows() != base_cost_.rows() || coupling_.cols() != base_cost_.cols()) {
        throw dimension_error("game: coupling shape differs from the base cost");
    }
    if ((coupling_.array() < 0.0).any()) {
        throw validation_error("game: coupling entries must be non-negative");
    }
}

namespace {

void check_policy_shape(const SingleControllerGame& game, const Policy& policy,
                        const char* what) {
    if (policy.num_states() != game.num_states() || policy.num_actions() != game.num_actions()) {
        throw dimension_error(std::string(what) + ": policy shape differs from the game");
    }
}

}  // namespace

Matrix player_one_cost(const SingleControllerGame& game, const Policy& pi2) {
    check_policy_shape(game, pi2, "player_one_cost");
    return game.base_cost() + (game.coupling().array() * pi2.probs().array()).matrix();
}

Matrix player_one_kernel(const SingleControllerGame& game, const Policy& pi2) {
    check_policy_shape(game, pi2, "player_one_kernel");
    // sum_b pi2(s,b) * Q[s',(s,a),b] with Q independent of b: the mixture
    // multiplies each (s,a) column by the row mass of pi2, which is one.
    Matrix result = game.kernel();
    const int a_count = game.num_actions();
    for (int s = 0; s < game.num_states(); ++s) {
        const double mass = pi2.probs().row(s).sum();
        result.middleCols(static_cast<Eigen::Index>(s) * a_count, a_count) *= mass;
    }
    return result;
}

Matrix player_two_cost(const SingleControllerGame& game, const Policy& pi1) {
    check_policy_shape(game, pi1, "player_two_cost");
    return game.base_cost() - (game.coupling().array() * pi1.probs().array()).matrix();
}

IntervalMatrix interval_over_approx(const SingleControllerGame& game) {
    const int s_count = game.num_states();
    const int a_count = game.num_actions();
    Matrix lo(s_count, a_count);
    Matrix hi(s_count, a_count);
    for (int s = 0; s < s_count; ++s) {
        for (int a = 0; a < a_count; ++a) {
            double mn = game.d1(s, a, 0);
            double mx = mn;
            for (int b = 1; b < a_count; ++b) {
                mn = std::min(mn, game.d1(s, a, b));
                mx = std::max(mx, game.d1(s, a, b));
            }
            lo(s, a) = mn;
            hi(s, a) = mx;
        }
    }
    return {std::move(lo), std::move(hi)};
}

namespace {

class ViOpponent : public OpponentStrategy {
public:
    ViOpponent(double gamma, ValueInit init, bool maximize)
        : gamma_(gamma), init_(init), maximize_(maximize) {
        if (!(gamma_ > 0.0 && gamma_ < 1.0)) {
            throw validation_error("vi opponent: discount must lie strictly between 0 and 1");
        }
    }

    void reset(std::uint64_t seed) override {
        seed_ = seed;
        value_.resize(0);
    }

    Policy respond(const SingleControllerGame& game, const Policy& pi1) override {
        ensure_value(game.num_states());
        const Matrix cost = player_two_cost(game, pi1);
        // One sweep of the operator on ([S],[A],P,C2,gamma), taking the
        // kernel over the opponent's own action index.
        const Vector continuation = game.kernel().transpose() * value_;  // length S*A
        const int a_count = game.num_actions();
        Vector next(game.num_states());
        std::vector<int> chosen(static_cast<std::size_t>(game.num_states()), 0);
        for (int s = 0; s < game.num_states(); ++s) {
            int best = 0;
            double best_q = q(cost, continuation, s, 0, a_count);
            for (int b = 1; b < a_count; ++b) {
                const double qb = q(cost, continuation, s, b, a_count);
                const bool better = maximize_ ? qb > best_q : qb < best_q;
                if (better) {
                    best = b;
                    best_q = qb;
                }
            }
            next[s] = best_q;
            chosen[static_cast<std::size_t>(s)] = best;
        }
        value_ = std::move(next);
        return Policy::deterministic(chosen, a_count);
    }

    std::string kind() const override { return maximize_ ? "max_vi" : "min_vi"; }

private:
    double q(const Matrix& cost, const Vector& continuation, int s, int b, int a_count) const {
        return cost(s, b) + gamma_ * continuation[static_cast<Eigen::Index>(s) * a_count + b];
    }

    void ensure_value(int num_states) {
        if (value_.size() == num_states) return;
        if (init_ == ValueInit::Zero) {
            value_ = Vector::Zero(num_states);
        } else {
            Rng rng(derive_seed(seed_, 0x0b9dULL));
            value_.resize(num_states);
            for (int s = 0; s < num_states; ++s) value_[s] = rng.uniform01();
        }
    }

    double gamma_;
    ValueInit init_;
    bool maximize_;
    Vector value_;
    std::uint64_t seed_ = 0;
};

class FixedOpponent : public OpponentStrategy {
public:
    explicit FixedOpponent(Policy pi2) : pi2_(std::move(pi2)) {}
    void reset(std::uint64_t) override {}
    Policy respond(const SingleControllerGame& game, const Policy&) override {
        check_policy_shape(game, pi2_, "fixed opponent");
        return pi2_;
    }
    std::string kind() const override { return "fixed"; }

private:
    Policy pi2_;
};

class UniformRandomOpponent : public OpponentStrategy {
public:
    UniformRandomOpponent() : rng_(0) {}
    void reset(std::uint64_t seed) override { rng_ = Rng(derive_seed(seed, 0x5eedULL)); }
    Policy respond(const SingleControllerGame& game, const Policy&) override {
        std::vector<int> chosen(static_cast<std::size_t>(game.num_states()));
        for (auto& a : chosen) {
            a = static_cast<int>(rng_.below(static_cast<std::uint64_t>(game.num_actions())));
        }
        return Policy::deterministic(chosen, game.num_actions());
    }
    std::string kind() const override { return "uniform_random"; }

private:
    Rng rng_;
};

}  // namespace

std::unique_ptr<OpponentStrategy> make_min_vi(double gamma, ValueInit init) {
    return std::make_unique<ViOpponent>(gamma, init, false);
}

std::unique_ptr<OpponentStrategy> make_max_vi(double gamma, ValueInit init) {
    return std::make_unique<ViOpponent>(gamma, init, true);
}

std::unique_ptr<OpponentStrategy> make_fixed(Policy pi2) {
    return std::make_unique<FixedOpponent>(std::move(pi2));
}

std::unique_ptr<OpponentStrategy> make_uniform_random() {
    return std::make_unique<UniformRandomOpponent>();
}

GameTrajectory two_player_vi(const SingleControllerGame& game, OpponentStrategy& opponent,
                             const Vector& v0, int num_iters, std::uint64_t seed,
                             double epsilon) {
    if (num_iters < 1) {
        throw validation_error("two_player_vi: num_iters must be at least 1");
    }
    if (v0.size() != game.num_states()) {
        throw dimension_error("two_player_vi: v0 length differs from state count");
    }
    const IntervalMdp imdp(game.kernel(), interval_over_approx(game), game.discount_p1());

    GameTrajectory traj{{}, {}, {}, {}, {}, {}, fixed_point_box(imdp, epsilon), opponent.kind(),
                        {}};
    opponent.reset(seed);

    const std::vector<int> zeros(static_cast<std::size_t>(game.num_states()), 0);
    Policy pi1 = Policy::deterministic(zeros, game.num_actions());
    Policy pi2 = pi1;

    Vector value = v0;
    IntervalVector box = IntervalVector::degenerate(v0);
    traj.values.push_back(value);
    traj.boxes.push_back(box);
    traj.dist_to_fixed_box.push_back(point_to_box_distance(value, traj.fixed_box));

    for (int k = 0; k < num_iters; ++k) {
        const Matrix cost = player_one_cost(game, pi2);
        const Mdp mdp(game.kernel(), cost, game.discount_p1());
        pi1 = greedy_policy(mdp, value);
        value = bellman_apply(mdp, value);
        box = set_bellman_apply(imdp, box);
        traj.p2_policies.push_back(pi2);
        traj.realized_costs.push_back(cost);
        traj.p1_policies.push_back(pi1);
        traj.values.push_back(value);
        traj.boxes.push_back(box);
        traj.dist_to_fixed_box.push_back(point_to_box_distance(value, traj.fixed_box));
        try {
            pi2 = opponent.respond(game, pi1);
        } catch (const std::exception& e) {
            // Opponent failures terminate the run, keeping the partial record.
            traj.error = e.what();
            break;
        }
    }
    return traj;
}

ContainmentReport containment_report(const GameTrajectory& traj, const IntervalVector& fixed_box,
                                     double containment_tol, double tail_tol) {
    if (traj.values.empty()) {
        throw validation_error("containment_report: empty trajectory");
    }
    ContainmentReport report;
    report.containment_tol = containment_tol;
    report.tail_tol = tail_tol;
    report.all_contained = true;
    for (std::size_t k = 0; k < traj.values.size(); ++k) {
        const bool inside = traj.boxes[k].contains(traj.values[k], containment_tol);
        report.contained.push_back(inside);
        if (!inside && report.first_violation < 0) {
            report.first_violation = static_cast<long>(k);
            report.all_contained = false;
        }
    }
    const std::size_t n = traj.values.size();
    const std::size_t tail = std::max<std::size_t>(1, n / 10);
    report.tail_distance = 0.0;
    for (std::size_t k = n - tail; k < n; ++k) {
        report.tail_distance =
            std::max(report.tail_distance, point_to_box_distance(traj.values[k], fixed_box));
    }
    report.pass = report.all_contained && report.tail_distance <= tail_tol;
    return report;
}

}  // namespace setbellman
