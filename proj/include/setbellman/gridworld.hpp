#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "setbellman/interval.hpp"

namespace setbellman {

/// Rectangular grid with 4-connected adjacency. States are numbered
/// row-major; the four actions are ordered [left, right, up, down], where
/// "up" decreases the row index.
struct GridSpec {
    int rows = 3;
    int cols = 3;
    /// Probability of reaching the target neighbor under a feasible action.
    double stick_prob = 0.7;
    std::uint64_t seed = 0;
};

inline constexpr int kGridActions = 4;

enum GridAction { kLeft = 0, kRight = 1, kUp = 2, kDown = 3 };

/// Neighboring state indices of s (4-connected, in-grid only).
std::vector<int> grid_neighbors(const GridSpec& spec, int state);

/// Transition kernel of the grid MDP, sized S x (S*4).
///
/// A feasible action (its target cell lies on the grid) reaches the target
/// with stick_prob and spreads the rest uniformly over the other neighbors;
/// an infeasible action spreads uniformly over all neighbors. A cell with a
/// single neighbor sends all feasible-action mass to it, since there is no
/// other neighbor to carry the remainder.
Matrix build_grid_kernel(const GridSpec& spec);

/// Base cost and coupling matrices with entries drawn i.i.d. uniform [0,1]
/// from the generator seeded with spec.seed; deterministic given the seed.
std::pair<Matrix, Matrix> sample_cost_matrices(const GridSpec& spec, int num_states,
                                               int num_actions);

}  // namespace setbellman
