#include "setbellman/mdp.hpp"

#include <cmath>

#include "setbellman/errors.hpp"

namespace setbellman {

Mdp::Mdp(Matrix kernel, Matrix cost, double discount)
    : kernel_(std::move(kernel)), cost_(std::move(cost)), discount_(discount) {
    const Eigen::Index s = cost_.rows();
    const Eigen::Index a = cost_.cols();
    if (s <= 0 || a <= 0) {
        throw validation_error("mdp: state and action counts must be positive");
    }
    if (kernel_.rows() != s || kernel_.cols() != s * a) {
        throw dimension_error("mdp: kernel must be S x (S*A) to match the cost matrix");
    }
    if (!(discount_ > 0.0 && discount_ < 1.0)) {
        throw validation_error("mdp: discount must lie strictly between 0 and 1");
    }
    if (!cost_.allFinite()) {
        throw validation_error("mdp: cost entries must be finite");
    }
}

std::vector<std::string> validate_mdp(const Mdp& mdp) {
    std::vector<std::string> report;
    const int s_count = mdp.num_states();
    const int a_count = mdp.num_actions();
    const Matrix& kernel = mdp.kernel();
    for (int s = 0; s < s_count; ++s) {
        for (int a = 0; a < a_count; ++a) {
            const Eigen::Index col = static_cast<Eigen::Index>(s) * a_count + a;
            double sum = 0.0;
            for (int next = 0; next < s_count; ++next) {
                const double p = kernel(next, col);
                if (p < 0.0) {
                    report.push_back("kernel entry (" + std::to_string(next) + ", (" +
                                     std::to_string(s) + "," + std::to_string(a) +
                                     ")) is negative: " + std::to_string(p));
                }
                sum += p;
            }
            if (std::abs(sum - 1.0) > kStochasticTolerance) {
                report.push_back("kernel column (" + std::to_string(s) + "," + std::to_string(a) +
                                 ") sums to " + std::to_string(sum) + ", expected 1");
            }
        }
    }
    if (!(mdp.discount() > 0.0 && mdp.discount() < 1.0)) {
        report.push_back("discount " + std::to_string(mdp.discount()) + " outside (0, 1)");
    }
    return report;
}

Mdp renormalize_kernel(const Mdp& mdp) {
    Matrix kernel = mdp.kernel();
    for (Eigen::Index col = 0; col < kernel.cols(); ++col) {
        const double sum = kernel.col(col).sum();
        if (sum <= 0.0) {
            throw validation_error("renormalize_kernel: column " + std::to_string(col) +
                                   " has non-positive mass");
        }
        kernel.col(col) /= sum;
    }
    return {std::move(kernel), mdp.cost(), mdp.discount()};
}

Policy::Policy(Matrix probs) : probs_(std::move(probs)) {
    if (probs_.rows() <= 0 || probs_.cols() <= 0) {
        throw validation_error("policy: empty probability matrix");
    }
    for (Eigen::Index s = 0; s < probs_.rows(); ++s) {
        double sum = 0.0;
        for (Eigen::Index a = 0; a < probs_.cols(); ++a) {
            const double p = probs_(s, a);
            if (p < 0.0 || p > 1.0) {
                throw validation_error("policy: entry (" + std::to_string(s) + "," +
                                       std::to_string(a) + ") outside [0, 1]");
            }
            sum += p;
        }
        if (std::abs(sum - 1.0) > kStochasticTolerance) {
            throw validation_error("policy: row " + std::to_string(s) + " sums to " +
                                   std::to_string(sum));
        }
    }
}

Policy Policy::deterministic(const std::vector<int>& actions, int num_actions) {
    Matrix probs = Matrix::Zero(static_cast<Eigen::Index>(actions.size()), num_actions);
    for (std::size_t s = 0; s < actions.size(); ++s) {
        if (actions[s] < 0 || actions[s] >= num_actions) {
            throw validation_error("policy: action index " + std::to_string(actions[s]) +
                                   " out of range at state " + std::to_string(s));
        }
        probs(static_cast<Eigen::Index>(s), actions[s]) = 1.0;
    }
    return Policy(std::move(probs));
}

bool Policy::is_deterministic() const {
    for (Eigen::Index s = 0; s < probs_.rows(); ++s) {
        int ones = 0;
        for (Eigen::Index a = 0; a < probs_.cols(); ++a) {
            if (probs_(s, a) == 1.0) {
                ++ones;
            } else if (probs_(s, a) != 0.0) {
                return false;
            }
        }
        if (ones != 1) return false;
    }
    return true;
}

std::vector<int> Policy::actions() const {
    if (!is_deterministic()) {
        throw validation_error("policy: actions() requires a deterministic policy");
    }
    std::vector<int> result(static_cast<std::size_t>(probs_.rows()));
    for (Eigen::Index s = 0; s < probs_.rows(); ++s) {
        for (Eigen::Index a = 0; a < probs_.cols(); ++a) {
            if (probs_(s, a) == 1.0) result[static_cast<std::size_t>(s)] = static_cast<int>(a);
        }
    }
    return result;
}

Matrix policy_matrix(const Policy& policy) {
    const Eigen::Index s_count = policy.probs().rows();
    const Eigen::Index a_count = policy.probs().cols();
    Matrix m = Matrix::Zero(s_count, s_count * a_count);
    for (Eigen::Index s = 0; s < s_count; ++s) {
        m.block(s, s * a_count, 1, a_count) = policy.probs().row(s);
    }
    return m;
}

Vector stationary_cost(const Policy& policy, const Matrix& cost) {
    if (policy.probs().rows() != cost.rows() || policy.probs().cols() != cost.cols()) {
        throw dimension_error("stationary_cost: policy and cost shapes differ");
    }
    return (policy.probs().array() * cost.array()).rowwise().sum();
}

namespace {

/// Action values cost(s,a) + discount * sum_{s'} kernel(s',(s,a)) * v[s'],
/// laid out as an S x A matrix.
Matrix action_values(const Mdp& mdp, const Vector& v) {
    if (v.size() != mdp.num_states()) {
        throw dimension_error("bellman: value function length differs from state count");
    }
    const Vector continuation = mdp.kernel().transpose() * v;  // length S*A, index s*A + a
    using RowMajorMap = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                                       Eigen::RowMajor>>;
    RowMajorMap cont(continuation.data(), mdp.num_states(), mdp.num_actions());
    return mdp.cost() + mdp.discount() * cont;
}

}  // namespace

Vector bellman_apply(const Mdp& mdp, const Vector& v) {
    return action_values(mdp, v).rowwise().minCoeff();
}

Policy greedy_policy(const Mdp& mdp, const Vector& v) {
    const Matrix q = action_values(mdp, v);
    std::vector<int> chosen(static_cast<std::size_t>(mdp.num_states()), 0);
    for (Eigen::Index s = 0; s < q.rows(); ++s) {
        int best = 0;
        for (Eigen::Index a = 1; a < q.cols(); ++a) {
            if (q(s, a) < q(s, best)) best = static_cast<int>(a);
        }
        chosen[static_cast<std::size_t>(s)] = best;
    }
    return Policy::deterministic(chosen, mdp.num_actions());
}

Vector policy_evaluation(const Mdp& mdp, const Policy& policy) {
    if (policy.num_states() != mdp.num_states() || policy.num_actions() != mdp.num_actions()) {
        throw dimension_error("policy_evaluation: policy shape differs from the MDP");
    }
    const Matrix chain = policy_matrix(policy) * mdp.kernel().transpose();  // S x S
    const Vector nu = stationary_cost(policy, mdp.cost());
    const Eigen::Index n = mdp.num_states();
    const Matrix system = Matrix::Identity(n, n) - mdp.discount() * chain;
    const Vector value = system.partialPivLu().solve(nu);
    const double residual = (system * value - nu).lpNorm<Eigen::Infinity>();
    if (!(residual <= 1e-9)) {
        throw solve_error("policy_evaluation: linear solve residual " + std::to_string(residual));
    }
    return value;
}

ValueIterationResult value_iteration(const Mdp& mdp, const Vector& v0, double epsilon,
                                     long max_iters) {
    if (v0.size() != mdp.num_states()) {
        throw dimension_error("value_iteration: initial value length differs from state count");
    }
    const double gamma = mdp.discount();
    const double threshold = epsilon * (1.0 - gamma) / (2.0 * gamma);
    Vector value = v0;
    for (long k = 0; k < max_iters; ++k) {
        Vector next = bellman_apply(mdp, value);
        const double step = (next - value).lpNorm<Eigen::Infinity>();
        value = std::move(next);
        if (step < threshold) {
            return {std::move(value), k + 1, true};
        }
    }
    return {std::move(value), max_iters, false};
}

OptimalityCertificate certify_interval_optimality(const Matrix& kernel, double discount,
                                                  const Policy& policy, const Matrix& cost_lo,
                                                  const Matrix& cost_hi) {
    if (cost_lo.rows() != cost_hi.rows() || cost_lo.cols() != cost_hi.cols()) {
        throw dimension_error("certify_interval_optimality: cost bound shapes differ");
    }
    if ((cost_lo.array() > cost_hi.array()).any()) {
        throw validation_error("certify_interval_optimality: inverted cost interval");
    }
    if (!policy.is_deterministic()) {
        throw validation_error("certify_interval_optimality: policy must be deterministic");
    }
    const Mdp lower(kernel, cost_lo, discount);
    const Mdp upper(kernel, cost_hi, discount);

    OptimalityCertificate cert;
    cert.value_lo = policy_evaluation(lower, policy);
    cert.value_hi = policy_evaluation(upper, policy);
    cert.residual_lo = (bellman_apply(lower, cert.value_lo) - cert.value_lo).lpNorm<Eigen::Infinity>();
    cert.residual_hi = (bellman_apply(upper, cert.value_hi) - cert.value_hi).lpNorm<Eigen::Infinity>();
    cert.certified = cert.residual_lo <= kCertifyTolerance && cert.residual_hi <= kCertifyTolerance;
    return cert;
}

}  // namespace setbellman
