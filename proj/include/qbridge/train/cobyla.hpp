#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "qbridge/errors.hpp"

namespace qbridge::train {

class NonFiniteObjective : public Error {
  public:
    using Error::Error;
};

using Objective = std::function<double(const std::vector<double>&)>;

struct OptimizerConfig {
    int max_evals = 1000;
    double initial_step = 0.5; // trust-region radius at the start
    double final_step = 1e-4;  // radius at which the search stops
};

struct OptimizerResult {
    std::vector<double> best_parameters;
    double best_objective = 0.0;
    int evaluations = 0;
    bool converged = false;
    // (evaluation index, best objective seen so far); non-increasing values.
    std::vector<std::pair<int, double>> trace;
};

// Derivative-free minimization by linear approximation inside a shrinking
// trust region: keep a simplex of dim+1 points, interpolate a linear model
// of the objective through it, step the radius toward the model minimizer,
// and repair or rebuild the simplex when its geometry degenerates.
// Deterministic for a given starting point and config.
OptimizerResult minimize_derivative_free(const Objective& objective, std::vector<double> x0,
                                         const OptimizerConfig& config = {});

} // namespace qbridge::train
