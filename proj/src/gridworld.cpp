#include "setbellman/gridworld.hpp"

#include "setbellman/errors.hpp"
#include "setbellman/rng.hpp"

namespace setbellman {

namespace {

void check_spec(const GridSpec& spec) {
    if (spec.rows < 1 || spec.cols < 1 || spec.rows * spec.cols < 2) {
        throw validation_error("grid: needs at least two cells");
    }
    if (!(spec.stick_prob > 0.0 && spec.stick_prob <= 1.0)) {
        throw validation_error("grid: stick_prob must lie in (0, 1]");
    }
}

// Target cell of (state, action), or -1 when the move leaves the grid.
int target_of(const GridSpec& spec, int state, int action) {
    const int r = state / spec.cols;
    const int c = state % spec.cols;
    switch (action) {
        case kLeft: return c > 0 ? state - 1 : -1;
        case kRight: return c + 1 < spec.cols ? state + 1 : -1;
        case kUp: return r > 0 ? state - spec.cols : -1;
        case kDown: return r + 1 < spec.rows ? state + spec.cols : -1;
        default: throw validation_error("grid: unknown action index");
    }
}

}  // namespace

std::vector<int> grid_neighbors(const GridSpec& spec, int state) {
    check_spec(spec);
    std::vector<int> neighbors;
    for (int action = 0; action < kGridActions; ++action) {
        const int t = target_of(spec, state, action);
        if (t >= 0) neighbors.push_back(t);
    }
    return neighbors;
}

Matrix build_grid_kernel(const GridSpec& spec) {
    check_spec(spec);
    const int s_count = spec.rows * spec.cols;
    Matrix kernel = Matrix::Zero(s_count, static_cast<Eigen::Index>(s_count) * kGridActions);
    for (int s = 0; s < s_count; ++s) {
        const std::vector<int> neighbors = grid_neighbors(spec, s);
        const int degree = static_cast<int>(neighbors.size());
        for (int a = 0; a < kGridActions; ++a) {
            const Eigen::Index col = static_cast<Eigen::Index>(s) * kGridActions + a;
            const int target = target_of(spec, s, a);
            if (target >= 0) {
                if (degree == 1) {
                    kernel(target, col) = 1.0;
                    continue;
                }
                kernel(target, col) = spec.stick_prob;
                const double rest = (1.0 - spec.stick_prob) / (degree - 1);
                for (int n : neighbors) {
                    if (n != target) kernel(n, col) = rest;
                }
            } else {
                for (int n : neighbors) {
                    kernel(n, col) = 1.0 / degree;
                }
            }
        }
    }
    return kernel;
}

std::pair<Matrix, Matrix> sample_cost_matrices(const GridSpec& spec, int num_states,
                                               int num_actions) {
    if (num_states < 1 || num_actions < 1) {
        throw validation_error("sample_cost_matrices: sizes must be positive");
    }
    Rng rng(spec.seed);
    Matrix base(num_states, num_actions);
    Matrix coupling(num_states, num_actions);
    for (int s = 0; s < num_states; ++s) {
        for (int a = 0; a < num_actions; ++a) base(s, a) = rng.uniform01();
    }
    for (int s = 0; s < num_states; ++s) {
        for (int a = 0; a < num_actions; ++a) coupling(s, a) = rng.uniform01();
    }
    return {std::move(base), std::move(coupling)};
}

}  // namespace setbellman
