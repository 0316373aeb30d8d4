#pragma once

#include <cstdint>
#include <vector>

#include "setbellman/interval.hpp"
#include "setbellman/mdp.hpp"
#include "setbellman/rng.hpp"

namespace setbellman {

/// MDP family sharing one kernel and discount, with costs ranging over an
/// entrywise interval box.
class IntervalMdp {
public:
    IntervalMdp(Matrix kernel, IntervalMatrix cost_box, double discount);

    int num_states() const { return static_cast<int>(cost_box_.rows()); }
    int num_actions() const { return static_cast<int>(cost_box_.cols()); }
    const Matrix& kernel() const { return kernel_; }
    const IntervalMatrix& cost_box() const { return cost_box_; }
    double discount() const { return discount_; }

    /// Endpoint MDPs at the lower and upper cost bounds.
    Mdp lower() const { return {kernel_, cost_box_.lo(), discount_}; }
    Mdp upper() const { return {kernel_, cost_box_.hi(), discount_}; }

private:
    Matrix kernel_;
    IntervalMatrix cost_box_;
    double discount_;
};

/// Image of a value box under the set-based operator. For interval cost
/// sets the image is again a box, spanned by the classic operator applied
/// at the endpoint costs to the endpoint values.
IntervalVector set_bellman_apply(const IntervalMdp& imdp, const IntervalVector& vbox);

struct SetVISolution {
    IntervalVector box;
    long iterations = 0;
    /// Equals the requested epsilon when the stopping rule fired, which
    /// certifies a Hausdorff distance of at most epsilon / 2 to the fixed
    /// point box; zero when max_iters was reached first.
    double certified_epsilon = 0.0;
    bool converged = false;
};

/// Iterates the set-based operator from v0 and stops once the Hausdorff
/// step d satisfies d * 2 * discount / (1 - discount) < epsilon.
SetVISolution set_value_iteration(const IntervalMdp& imdp, const IntervalVector& v0,
                                  double epsilon, long max_iters = 1000000);

/// Fixed point box assembled from two independent value iterations run at
/// the endpoint costs, both started from zero. Raises solve_error when an
/// endpoint iteration fails to converge.
IntervalVector fixed_point_box(const IntervalMdp& imdp, double epsilon,
                               long max_iters = 1000000);

/// Widens the box by epsilon on both sides of every coordinate. Applied to
/// an epsilon-certified iterate this yields a guaranteed over-approximation
/// of the fixed point box.
IntervalVector inflate(const IntervalVector& vbox, double epsilon);

/// Default certification tolerance used by the experiment drivers.
inline constexpr double kDefaultEpsilon = 1e-6;

/// Fixed points of the classic operator for costs drawn uniformly from the
/// box. Both endpoint costs are always included ahead of the num_samples
/// draws; sample i uses the generator seeded with derive_seed(seed, i).
PointSet sampled_fixed_points(const IntervalMdp& imdp, int num_samples, std::uint64_t seed,
                              double epsilon);

/// Fixed points of the classic operator for an explicit finite cost list.
PointSet fixed_points_for_costs(const IntervalMdp& imdp, const std::vector<Matrix>& costs,
                                double epsilon);

/// Rule for drawing the per-step cost used by random-cost iterations.
class CostSampler {
public:
    enum class Kind { UniformBox, FiniteList, Vertex };

    static CostSampler uniform_box() { return CostSampler(Kind::UniformBox, {}); }
    static CostSampler finite_list(std::vector<Matrix> costs);
    static CostSampler vertex() { return CostSampler(Kind::Vertex, {}); }

    Kind kind() const { return kind_; }
    const std::vector<Matrix>& costs() const { return costs_; }

    Matrix sample(const IntervalMatrix& box, Rng& rng) const;

private:
    CostSampler(Kind kind, std::vector<Matrix> costs) : kind_(kind), costs_(std::move(costs)) {}

    Kind kind_;
    std::vector<Matrix> costs_;
};

/// Trace of a random-cost iteration together with the synchronized box
/// iterate started from the degenerate box at v0.
struct TrajectoryRecord {
    std::vector<Vector> values;              // V^0 .. V^K
    std::vector<IntervalVector> boxes;       // box iterate per step
    std::vector<double> dist_to_fixed_box;   // sup-norm distance of V^k to the fixed box
    IntervalVector fixed_box;
};

/// Iterates V^{k+1} = f_{C^k}(V^k) with C^k drawn by the sampler. Step k
/// draws from the generator seeded with derive_seed(seed, k).
TrajectoryRecord random_cost_trajectory(const IntervalMdp& imdp, const Vector& v0, int num_steps,
                                        std::uint64_t seed, const CostSampler& sampler,
                                        double epsilon = kDefaultEpsilon);

}  // namespace setbellman
