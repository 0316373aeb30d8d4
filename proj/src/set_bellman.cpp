#include "setbellman/set_bellman.hpp"

#include <utility>

#include "setbellman/errors.hpp"

namespace setbellman {

IntervalMdp::IntervalMdp(Matrix kernel, IntervalMatrix cost_box, double discount)
    : kernel_(std::move(kernel)), cost_box_(std::move(cost_box)), discount_(discount) {
    // Shape and range checks are shared with the single-cost constructor.
    static_cast<void>(Mdp(kernel_, cost_box_.lo(), discount_));
}

IntervalVector set_bellman_apply(const IntervalMdp& imdp, const IntervalVector& vbox) {
    if (vbox.size() != imdp.num_states()) {
        throw dimension_error("set_bellman_apply: value box length differs from state count");
    }
    Vector lo = bellman_apply(imdp.lower(), vbox.lo());
    Vector hi = bellman_apply(imdp.upper(), vbox.hi());
    return {std::move(lo), std::move(hi)};
}

SetVISolution set_value_iteration(const IntervalMdp& imdp, const IntervalVector& v0,
                                  double epsilon, long max_iters) {
    const double gamma = imdp.discount();
    const double blowup = 2.0 * gamma / (1.0 - gamma);
    IntervalVector box = v0;
    for (long k = 0; k < max_iters; ++k) {
        IntervalVector next = set_bellman_apply(imdp, box);
        const double step = hausdorff_interval(next, box);
        box = std::move(next);
        if (step * blowup < epsilon) {
            return {std::move(box), k + 1, epsilon, true};
        }
    }
    return {std::move(box), max_iters, 0.0, false};
}

IntervalVector fixed_point_box(const IntervalMdp& imdp, double epsilon, long max_iters) {
    const Vector zero = Vector::Zero(imdp.num_states());
    ValueIterationResult lo = value_iteration(imdp.lower(), zero, epsilon, max_iters);
    ValueIterationResult hi = value_iteration(imdp.upper(), zero, epsilon, max_iters);
    if (!lo.converged || !hi.converged) {
        throw solve_error("fixed_point_box: endpoint value iteration did not converge");
    }
    // The endpoint iterations stop at different counts, so a coordinate of a
    // nearly degenerate box can invert by less than the certified error.
    for (Eigen::Index i = 0; i < lo.value.size(); ++i) {
        if (lo.value[i] > hi.value[i]) {
            if (lo.value[i] - hi.value[i] > epsilon) {
                throw solve_error("fixed_point_box: endpoint values inverted beyond tolerance");
            }
            hi.value[i] = lo.value[i];
        }
    }
    return {std::move(lo.value), std::move(hi.value)};
}

IntervalVector inflate(const IntervalVector& vbox, double epsilon) {
    if (epsilon < 0.0) {
        throw validation_error("inflate: negative margin");
    }
    return {Vector(vbox.lo().array() - epsilon), Vector(vbox.hi().array() + epsilon)};
}

namespace {

Vector solve_at_cost(const IntervalMdp& imdp, const Matrix& cost, double epsilon) {
    const Mdp mdp(imdp.kernel(), cost, imdp.discount());
    ValueIterationResult r = value_iteration(mdp, Vector::Zero(imdp.num_states()), epsilon);
    if (!r.converged) {
        throw solve_error("sampled fixed point: value iteration did not converge");
    }
    return std::move(r.value);
}

Matrix uniform_cost(const IntervalMatrix& box, Rng& rng) {
    Matrix c(box.rows(), box.cols());
    for (Eigen::Index s = 0; s < box.rows(); ++s) {
        for (Eigen::Index a = 0; a < box.cols(); ++a) {
            c(s, a) = rng.uniform(box.lo()(s, a), box.hi()(s, a));
        }
    }
    return c;
}

}  // namespace

PointSet sampled_fixed_points(const IntervalMdp& imdp, int num_samples, std::uint64_t seed,
                              double epsilon) {
    if (num_samples < 1) {
        throw validation_error("sampled_fixed_points: num_samples must be at least 1");
    }
    PointSet result;
    result.points.push_back(solve_at_cost(imdp, imdp.cost_box().lo(), epsilon));
    result.points.push_back(solve_at_cost(imdp, imdp.cost_box().hi(), epsilon));
    for (int i = 0; i < num_samples; ++i) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        result.points.push_back(solve_at_cost(imdp, uniform_cost(imdp.cost_box(), rng), epsilon));
    }
    return result;
}

PointSet fixed_points_for_costs(const IntervalMdp& imdp, const std::vector<Matrix>& costs,
                                double epsilon) {
    if (costs.empty()) {
        throw validation_error("fixed_points_for_costs: empty cost list");
    }
    PointSet result;
    for (const Matrix& cost : costs) {
        result.points.push_back(solve_at_cost(imdp, cost, epsilon));
    }
    return result;
}

CostSampler CostSampler::finite_list(std::vector<Matrix> costs) {
    if (costs.empty()) {
        throw validation_error("cost sampler: empty cost list");
    }
    return CostSampler(Kind::FiniteList, std::move(costs));
}

Matrix CostSampler::sample(const IntervalMatrix& box, Rng& rng) const {
    switch (kind_) {
        case Kind::UniformBox:
            return uniform_cost(box, rng);
        case Kind::FiniteList: {
            const std::size_t i = static_cast<std::size_t>(rng.below(costs_.size()));
            const Matrix& c = costs_[i];
            if (c.rows() != box.rows() || c.cols() != box.cols()) {
                throw dimension_error("cost sampler: listed cost shape differs from the box");
            }
            return c;
        }
        case Kind::Vertex: {
            Matrix c(box.rows(), box.cols());
            for (Eigen::Index s = 0; s < box.rows(); ++s) {
                for (Eigen::Index a = 0; a < box.cols(); ++a) {
                    c(s, a) = (rng.below(2) == 0) ? box.lo()(s, a) : box.hi()(s, a);
                }
            }
            return c;
        }
    }
    throw validation_error("cost sampler: unknown kind");
}

TrajectoryRecord random_cost_trajectory(const IntervalMdp& imdp, const Vector& v0, int num_steps,
                                        std::uint64_t seed, const CostSampler& sampler,
                                        double epsilon) {
    if (num_steps < 1) {
        throw validation_error("random_cost_trajectory: num_steps must be at least 1");
    }
    if (v0.size() != imdp.num_states()) {
        throw dimension_error("random_cost_trajectory: v0 length differs from state count");
    }
    TrajectoryRecord record{{}, {}, {}, fixed_point_box(imdp, epsilon)};
    Vector value = v0;
    IntervalVector box = IntervalVector::degenerate(v0);
    record.values.push_back(value);
    record.boxes.push_back(box);
    record.dist_to_fixed_box.push_back(point_to_box_distance(value, record.fixed_box));
    for (int k = 0; k < num_steps; ++k) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(k)));
        const Matrix cost = sampler.sample(imdp.cost_box(), rng);
        value = bellman_apply(Mdp(imdp.kernel(), cost, imdp.discount()), value);
        box = set_bellman_apply(imdp, box);
        record.values.push_back(value);
        record.boxes.push_back(box);
        record.dist_to_fixed_box.push_back(point_to_box_distance(value, record.fixed_box));
    }
    return record;
}

}  // namespace setbellman
