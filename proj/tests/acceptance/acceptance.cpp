// Acceptance suite: one self-contained check per shipped guarantee, each
// printed as a single pass/fail line. Exit code equals the number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "setbellman/game.hpp"
#include "setbellman/gridworld.hpp"
#include "setbellman/interval.hpp"
#include "setbellman/mdp.hpp"
#include "setbellman/rng.hpp"
#include "setbellman/set_bellman.hpp"

using namespace setbellman;

namespace {

struct CriterionResult {
    bool pass = false;
    std::string detail;
};

double inf_norm(const Vector& v) { return v.lpNorm<Eigen::Infinity>(); }

Matrix random_matrix(int rows, int cols, Rng& rng, double lo, double hi) {
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) m(r, c) = rng.uniform(lo, hi);
    }
    return m;
}

Matrix random_kernel(int num_states, int num_actions, Rng& rng) {
    Matrix kernel(num_states, num_states * num_actions);
    for (int col = 0; col < num_states * num_actions; ++col) {
        double sum = 0.0;
        for (int s = 0; s < num_states; ++s) {
            const double e = -std::log(1.0 - rng.uniform01());
            kernel(s, col) = e;
            sum += e;
        }
        kernel.col(col) /= sum;
    }
    return kernel;
}

Vector random_vector(int n, Rng& rng, double lo, double hi) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = rng.uniform(lo, hi);
    return v;
}

// ---------------------------------------------------------------------------
// 1. Single-state two-action family: finite cost set {[0,1],[0,2],[1,1]} has
//    fixed points {0, 10} and the interval hull solve returns [0, 10].
// ---------------------------------------------------------------------------
CriterionResult criterion_1() {
    Matrix kernel(1, 2);
    kernel << 1.0, 1.0;
    Matrix lo(1, 2), hi(1, 2);
    lo << 0.0, 1.0;
    hi << 1.0, 2.0;
    const IntervalMdp imdp(kernel, IntervalMatrix(lo, hi), 0.9);

    std::vector<Matrix> costs;
    Matrix c(1, 2);
    c << 0.0, 1.0;
    costs.push_back(c);
    c << 0.0, 2.0;
    costs.push_back(c);
    c << 1.0, 1.0;
    costs.push_back(c);

    const PointSet points = fixed_points_for_costs(imdp, costs, 1e-8);
    const std::vector<double> expected = {0.0, 0.0, 10.0};
    double worst = 0.0;
    for (std::size_t i = 0; i < points.points.size(); ++i) {
        worst = std::max(worst, std::abs(points.points[i][0] - expected[i]));
    }

    const IntervalVector box = fixed_point_box(imdp, 1e-7);
    worst = std::max(worst, std::abs(box.lo()[0] - 0.0));
    worst = std::max(worst, std::abs(box.hi()[0] - 10.0));

    return {worst <= 1e-6, "max deviation " + std::to_string(worst)};
}

// ---------------------------------------------------------------------------
// 2. Stopping rule soundness: a converged value iteration lies within eps/2
//    of the stationary value of its own greedy policy. 200 random MDPs.
// ---------------------------------------------------------------------------
CriterionResult criterion_2() {
    Rng rng(0xACC2);
    int violations = 0;
    double worst_ratio = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int s = 1 + static_cast<int>(rng.below(10));
        const int a = 1 + static_cast<int>(rng.below(5));
        const double gamma = rng.uniform(0.5, 0.95);
        const double cost_lo = trial % 2 == 0 ? 0.0 : -1.0;
        const Mdp mdp(random_kernel(s, a, rng), random_matrix(s, a, rng, cost_lo, 1.0), gamma);
        const double epsilon = std::pow(10.0, rng.uniform(-7.0, -3.0));
        const Vector v0 = random_vector(s, rng, -5.0, 5.0);

        const ValueIterationResult r = value_iteration(mdp, v0, epsilon);
        if (!r.converged) {
            ++violations;
            continue;
        }
        const Vector greedy_value = policy_evaluation(mdp, greedy_policy(mdp, r.value));
        const double distance = inf_norm(r.value - greedy_value);
        worst_ratio = std::max(worst_ratio, distance / (epsilon / 2.0));
        if (distance > epsilon / 2.0) ++violations;
    }
    return {violations == 0, "violations " + std::to_string(violations) +
                                 ", worst distance/(eps/2) " + std::to_string(worst_ratio)};
}

// ---------------------------------------------------------------------------
// 3. Set-operator contraction: Hausdorff distance shrinks by the discount on
//    500 random box pairs.
// ---------------------------------------------------------------------------
CriterionResult criterion_3() {
    Rng rng(0xACC3);
    int violations = 0;
    double worst_excess = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        const int s = 1 + static_cast<int>(rng.below(6));
        const int a = 1 + static_cast<int>(rng.below(4));
        const Matrix lo = random_matrix(s, a, rng, 0.0, 1.0);
        const Matrix width = random_matrix(s, a, rng, 0.0, 1.0);
        const IntervalMdp imdp(random_kernel(s, a, rng), IntervalMatrix(lo, lo + width),
                               rng.uniform(0.3, 0.95));

        const auto draw_box = [&] {
            Vector blo(s), bhi(s);
            for (int i = 0; i < s; ++i) {
                blo[i] = rng.uniform(-5.0, 5.0);
                bhi[i] = blo[i] + rng.uniform(0.0, 4.0);
            }
            return IntervalVector(blo, bhi);
        };
        const IntervalVector x = draw_box();
        const IntervalVector y = draw_box();
        const double image = hausdorff_interval(set_bellman_apply(imdp, x),
                                                set_bellman_apply(imdp, y));
        const double bound = imdp.discount() * hausdorff_interval(x, y) + 1e-9;
        worst_excess = std::max(worst_excess, image - bound);
        if (image > bound) ++violations;
    }
    return {violations == 0, "violations " + std::to_string(violations)};
}

// ---------------------------------------------------------------------------
// 4. Interval primitives against sampling oracles: the interval minimum
//    equals the hull of pointwise minima, and the box Hausdorff distance
//    matches a grid-sampled point-set computation.
// ---------------------------------------------------------------------------
CriterionResult criterion_4() {
    Rng rng(0xACC4);
    int violations = 0;

    const int grid = 100;
    for (int trial = 0; trial < 1000; ++trial) {
        const double alo = rng.uniform(-5.0, 5.0);
        const Interval x{alo, alo + rng.uniform(0.0, 4.0)};
        const double blo = rng.uniform(-5.0, 5.0);
        const Interval y{blo, blo + rng.uniform(0.0, 4.0)};
        const Interval result = interval_min(x, y);

        double hull_lo = std::numeric_limits<double>::infinity();
        double hull_hi = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < grid; ++i) {
            const double u = x.lo + (x.hi - x.lo) * i / (grid - 1);
            for (int j = 0; j < grid; ++j) {
                const double v = y.lo + (y.hi - y.lo) * j / (grid - 1);
                const double m = std::min(u, v);
                hull_lo = std::min(hull_lo, m);
                hull_hi = std::max(hull_hi, m);
            }
        }
        if (std::abs(result.lo - hull_lo) > 1e-6 || std::abs(result.hi - hull_hi) > 1e-6) {
            ++violations;
        }
    }

    const int per_axis = 7;
    for (int trial = 0; trial < 100; ++trial) {
        Vector xlo(3), xhi(3), ylo(3), yhi(3);
        for (int d = 0; d < 3; ++d) {
            xlo[d] = rng.uniform(-3.0, 3.0);
            xhi[d] = xlo[d] + rng.uniform(0.0, 3.0);
            ylo[d] = rng.uniform(-3.0, 3.0);
            yhi[d] = ylo[d] + rng.uniform(0.0, 3.0);
        }
        const IntervalVector x(xlo, xhi), y(ylo, yhi);

        const auto sample = [&](const IntervalVector& box) {
            PointSet set;
            for (int i = 0; i < per_axis; ++i) {
                for (int j = 0; j < per_axis; ++j) {
                    for (int k = 0; k < per_axis; ++k) {
                        Vector p(3);
                        const int idx[3] = {i, j, k};
                        for (int d = 0; d < 3; ++d) {
                            const double w = box.hi()[d] - box.lo()[d];
                            p[d] = box.lo()[d] + w * idx[d] / (per_axis - 1);
                        }
                        set.points.push_back(p);
                    }
                }
            }
            return set;
        };
        double spacing = 0.0;
        for (int d = 0; d < 3; ++d) {
            spacing = std::max(spacing, (x.hi()[d] - x.lo()[d]) / (per_axis - 1));
            spacing = std::max(spacing, (y.hi()[d] - y.lo()[d]) / (per_axis - 1));
        }
        const double exact = hausdorff_interval(x, y);
        const double sampled = hausdorff_point_set(sample(x), sample(y));
        if (std::abs(exact - sampled) > 2.0 * spacing) ++violations;
    }

    return {violations == 0, "violations " + std::to_string(violations)};
}

// ---------------------------------------------------------------------------
// 5. Containment of sampled fixed points: for 50 random interval families,
//    every per-cost fixed point (50 draws plus both endpoints) lies in the
//    epsilon-inflated fixed-point box.
// ---------------------------------------------------------------------------
CriterionResult criterion_5() {
    Rng rng(0xACC5);
    const double epsilon = 1e-6;
    int violations = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const int s = 1 + static_cast<int>(rng.below(6));
        const int a = 1 + static_cast<int>(rng.below(4));
        const Matrix lo = random_matrix(s, a, rng, 0.0, 1.0);
        const Matrix width = random_matrix(s, a, rng, 0.0, 1.0);
        const IntervalMdp imdp(random_kernel(s, a, rng), IntervalMatrix(lo, lo + width),
                               rng.uniform(0.4, 0.95));
        const IntervalVector cover = inflate(fixed_point_box(imdp, epsilon), epsilon);
        const PointSet points = sampled_fixed_points(imdp, 50, rng.next(), epsilon);
        for (const Vector& p : points.points) {
            if (!cover.contains(p)) ++violations;
        }
    }
    return {violations == 0, "violations " + std::to_string(violations)};
}

// ---------------------------------------------------------------------------
// 6. Grid game containment: on the 3x3 grid with seeded costs, player one's
//    value stays inside the synchronized box iterate at every step for
//    min-vi opponents across a discount sweep, a max-vi opponent and a
//    uniform-random opponent, over 100 iterations and 10 seeds; the tail
//    distance to the fixed-point box stays below 1e-3.
// ---------------------------------------------------------------------------
struct GameRun {
    std::string kind;
    double gamma2 = 0.0;
    std::uint64_t seed = 0;
    GameTrajectory traj;
    ContainmentReport report;
};

std::vector<GameRun> run_grid_games() {
    std::vector<GameRun> runs;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const GridSpec spec{3, 3, 0.7, seed};
        const auto [cost, coupling] = sample_cost_matrices(spec, 9, kGridActions);
        const SingleControllerGame game(build_grid_kernel(spec), cost, coupling, 0.7, 0.7);

        const auto simulate = [&](OpponentStrategy& opponent, double gamma2,
                                  const Vector& v0) {
            GameRun run;
            run.kind = opponent.kind();
            run.gamma2 = gamma2;
            run.seed = seed;
            run.traj = two_player_vi(game, opponent, v0, 100, seed);
            run.report = containment_report(run.traj, run.traj.fixed_box);
            return run;
        };

        const Vector zero = Vector::Zero(9);
        for (int g = 1; g <= 9; ++g) {
            const double gamma2 = g / 10.0;
            auto opponent = make_min_vi(gamma2);
            runs.push_back(simulate(*opponent, gamma2, zero));
        }
        {
            auto opponent = make_max_vi(0.7);
            runs.push_back(simulate(*opponent, 0.7, zero));
        }
        {
            auto opponent = make_uniform_random();
            runs.push_back(simulate(*opponent, 0.0, zero));
        }
        {
            // Random initialization variant with matched discounts.
            auto opponent = make_min_vi(0.7, ValueInit::Uniform01);
            Rng v0_rng(derive_seed(seed, 0x7017ULL));
            Vector v0(9);
            for (int i = 0; i < 9; ++i) v0[i] = v0_rng.uniform01();
            GameRun run = simulate(*opponent, 0.7, v0);
            run.kind = "min_vi_rand_init";
            runs.push_back(run);
        }
    }
    return runs;
}

CriterionResult criterion_6(const std::vector<GameRun>& runs) {
    int containment_violations = 0;
    double worst_tail = 0.0;
    for (const GameRun& run : runs) {
        if (!run.report.all_contained) ++containment_violations;
        worst_tail = std::max(worst_tail, run.report.tail_distance);
    }
    const bool pass = containment_violations == 0 && worst_tail <= 1e-3;
    return {pass, std::to_string(runs.size()) + " runs, containment violations " +
                      std::to_string(containment_violations) + ", worst tail distance " +
                      std::to_string(worst_tail)};
}

// ---------------------------------------------------------------------------
// 7. Tightness witnesses: some max-vi run pins player one to the lower box
//    endpoint, and some min-vi run cycles without converging while staying
//    contained.
// ---------------------------------------------------------------------------
CriterionResult criterion_7(const std::vector<GameRun>& runs) {
    bool lower_bound_hit = false;
    double best_lower_gap = std::numeric_limits<double>::infinity();
    bool cycle_found = false;
    double best_cycle_step = 0.0;

    for (const GameRun& run : runs) {
        const std::size_t n = run.traj.values.size();
        const std::size_t tail = std::max<std::size_t>(1, n / 10);
        if (run.kind == "max_vi") {
            double gap = 0.0;
            for (std::size_t k = n - tail; k < n; ++k) {
                gap = std::max(gap, inf_norm(run.traj.values[k] - run.traj.fixed_box.lo()));
            }
            best_lower_gap = std::min(best_lower_gap, gap);
            lower_bound_hit = lower_bound_hit || gap <= 1e-2;
        }
        if (run.kind == "min_vi" || run.kind == "min_vi_rand_init") {
            double step = 0.0;
            for (std::size_t k = n - tail; k + 1 < n; ++k) {
                step = std::max(step, inf_norm(run.traj.values[k + 1] - run.traj.values[k]));
            }
            best_cycle_step = std::max(best_cycle_step, step);
            cycle_found = cycle_found || (step > 1e-6 && run.report.all_contained);
        }
    }
    const bool pass = lower_bound_hit && cycle_found;
    return {pass, "best max-vi lower-endpoint gap " + std::to_string(best_lower_gap) +
                      ", largest contained min-vi tail step " + std::to_string(best_cycle_step)};
}

// ---------------------------------------------------------------------------
// 8. Interval-optimality certificate: on 100 random instances accepted by
//    the two-endpoint certificate, the certified policy must stay optimal at
//    100 costs sampled uniformly in the box.
// ---------------------------------------------------------------------------
CriterionResult criterion_8() {
    Rng rng(0xACC8);
    int certified_instances = 0;
    int violations = 0;
    std::string witness;
    int attempts = 0;

    while (certified_instances < 100 && attempts < 20000) {
        ++attempts;
        const int s = 1 + static_cast<int>(rng.below(4));
        const int a = 2 + static_cast<int>(rng.below(2));
        const double gamma = rng.uniform(0.4, 0.9);
        const Matrix kernel = random_kernel(s, a, rng);
        const Matrix cost = random_matrix(s, a, rng, 0.0, 1.0);
        const Mdp base(kernel, cost, gamma);

        const ValueIterationResult vi = value_iteration(base, Vector::Zero(s), 1e-10);
        if (!vi.converged) continue;
        const Policy policy = greedy_policy(base, vi.value);

        const double width = rng.uniform(0.0, 0.3);
        const Matrix margin = random_matrix(s, a, rng, 0.0, width);
        const Matrix lo = cost - margin;
        const Matrix hi = cost + margin;
        const OptimalityCertificate cert =
            certify_interval_optimality(kernel, gamma, policy, lo, hi);
        if (!cert.certified) continue;
        ++certified_instances;

        for (int sample = 0; sample < 100; ++sample) {
            Matrix drawn(s, a);
            for (int i = 0; i < s; ++i) {
                for (int j = 0; j < a; ++j) drawn(i, j) = rng.uniform(lo(i, j), hi(i, j));
            }
            const Mdp probe(kernel, drawn, gamma);
            const ValueIterationResult solved = value_iteration(probe, Vector::Zero(s), 1e-9);
            if (!solved.converged) {
                ++violations;
                continue;
            }
            const Vector policy_value = policy_evaluation(probe, policy);
            if (inf_norm(policy_value - solved.value) > 1e-6) {
                ++violations;
                if (witness.empty()) {
                    witness = " (first witness: instance " +
                              std::to_string(certified_instances) + ", S=" + std::to_string(s) +
                              ", A=" + std::to_string(a) + ", policy value off by " +
                              std::to_string(inf_norm(policy_value - solved.value)) + ")";
                }
            }
        }
    }

    const bool pass = certified_instances == 100 && violations == 0;
    return {pass, "certified instances " + std::to_string(certified_instances) +
                      ", sampled-cost violations " + std::to_string(violations) + witness};
}

int report(int index, const char* name, const CriterionResult& result, double seconds,
           double budget_seconds) {
    const bool in_budget = budget_seconds <= 0.0 || seconds < budget_seconds;
    const bool pass = result.pass && in_budget;
    std::printf("[%s] criterion %d: %s (%s; %.2f s%s)\n", pass ? "PASS" : "FAIL", index, name,
                result.detail.c_str(), seconds,
                in_budget ? "" : ", over the runtime budget");
    std::fflush(stdout);
    return pass ? 0 : 1;
}

template <typename F>
int timed(int index, const char* name, double budget_seconds, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    const CriterionResult result = f();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report(index, name, result, seconds, budget_seconds);
}

}  // namespace

int main() {
    int failures = 0;
    failures += timed(1, "single-state finite cost family: fixed points {0,10}, hull box [0,10]",
                      1.0, criterion_1);
    failures += timed(2, "converged value iteration lies within eps/2 of its greedy policy value",
                      30.0, criterion_2);
    failures += timed(3, "set operator contracts the Hausdorff distance on random box pairs",
                      0.0, criterion_3);
    failures += timed(4, "interval minimum and box Hausdorff agree with sampling oracles", 0.0,
                      criterion_4);
    failures += timed(5, "sampled per-cost fixed points lie in the inflated fixed-point box",
                      0.0, criterion_5);

    const auto games_start = std::chrono::steady_clock::now();
    const std::vector<GameRun> runs = run_grid_games();
    const double games_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - games_start).count();

    {
        const auto start = std::chrono::steady_clock::now();
        const CriterionResult result = criterion_6(runs);
        const double seconds =
            games_seconds +
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += report(6, "grid game values stay inside the box iterates with a small tail",
                           result, seconds, 120.0);
    }
    failures += timed(7, "max-vi pins the lower endpoint and some min-vi run cycles contained",
                      0.0, [&] { return criterion_7(runs); });
    failures += timed(8, "two-endpoint certificates keep the policy optimal across the box", 0.0,
                      criterion_8);

    std::printf("%d of 8 criteria failed\n", failures);
    return failures;
}
