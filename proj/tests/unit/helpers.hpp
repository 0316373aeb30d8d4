#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "setbellman/game.hpp"
#include "setbellman/mdp.hpp"
#include "setbellman/rng.hpp"
#include "setbellman/set_bellman.hpp"

namespace testutil {

using namespace setbellman;

inline Matrix random_matrix(int rows, int cols, Rng& rng, double lo = 0.0, double hi = 1.0) {
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) m(r, c) = rng.uniform(lo, hi);
    }
    return m;
}

inline Vector random_vector(int n, Rng& rng, double lo = -1.0, double hi = 1.0) {
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = rng.uniform(lo, hi);
    return v;
}

/// Column-stochastic kernel via normalized exponentials, so every column is
/// uniform on the probability simplex.
inline Matrix random_kernel(int num_states, int num_actions, Rng& rng) {
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

inline Mdp random_mdp(Rng& rng, int max_states = 6, int max_actions = 4, double gamma_lo = 0.3,
                      double gamma_hi = 0.95, double cost_lo = 0.0, double cost_hi = 1.0) {
    const int s = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_states)));
    const int a = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_actions)));
    return {random_kernel(s, a, rng), random_matrix(s, a, rng, cost_lo, cost_hi),
            rng.uniform(gamma_lo, gamma_hi)};
}

inline IntervalMdp random_interval_mdp(Rng& rng, int max_states = 6, int max_actions = 4,
                                       double gamma_lo = 0.3, double gamma_hi = 0.95,
                                       double max_width = 1.0) {
    const int s = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_states)));
    const int a = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_actions)));
    const Matrix lo = random_matrix(s, a, rng);
    const Matrix width = random_matrix(s, a, rng, 0.0, max_width);
    return {random_kernel(s, a, rng), IntervalMatrix(lo, lo + width),
            rng.uniform(gamma_lo, gamma_hi)};
}

inline IntervalVector random_box(int n, Rng& rng, double center_range = 5.0,
                                 double max_width = 4.0) {
    Vector lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        lo[i] = rng.uniform(-center_range, center_range);
        hi[i] = lo[i] + rng.uniform(0.0, max_width);
    }
    return {std::move(lo), std::move(hi)};
}

/// Single-state two-action chain: kernel [[1, 1]], discount 0.9.
inline Mdp single_state_mdp(double cost0, double cost1, double gamma = 0.9) {
    Matrix kernel(1, 2);
    kernel << 1.0, 1.0;
    Matrix cost(1, 2);
    cost << cost0, cost1;
    return {kernel, cost, gamma};
}

inline IntervalMdp single_state_hull(double lo0, double lo1, double hi0, double hi1,
                                     double gamma = 0.9) {
    Matrix kernel(1, 2);
    kernel << 1.0, 1.0;
    Matrix lo(1, 2), hi(1, 2);
    lo << lo0, lo1;
    hi << hi0, hi1;
    return {kernel, IntervalMatrix(lo, hi), gamma};
}

inline Policy random_policy(int num_states, int num_actions, Rng& rng, bool deterministic) {
    if (deterministic) {
        std::vector<int> actions(static_cast<std::size_t>(num_states));
        for (auto& a : actions) {
            a = static_cast<int>(rng.below(static_cast<std::uint64_t>(num_actions)));
        }
        return Policy::deterministic(actions, num_actions);
    }
    Matrix probs(num_states, num_actions);
    for (int s = 0; s < num_states; ++s) {
        double sum = 0.0;
        for (int a = 0; a < num_actions; ++a) {
            probs(s, a) = -std::log(1.0 - rng.uniform01());
            sum += probs(s, a);
        }
        probs.row(s) /= sum;
    }
    return Policy(probs);
}

inline double inf_norm(const Vector& v) { return v.lpNorm<Eigen::Infinity>(); }

}  // namespace testutil
