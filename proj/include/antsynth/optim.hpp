#pragma once

#include <functional>
#include <vector>

namespace antsynth {

/// Objective over the unit box [0,1]^M, smaller is better.
using Objective = std::function<double(const std::vector<double>&)>;

/// Shared result contract for every optimizer in this library.
struct OptResult {
    std::vector<double> best_vector;
    double best_fitness = 0.0;
    std::vector<double> history; ///< best-so-far after each iteration, non-increasing
    long long evaluation_count = 0;
    double wall_time_s = 0.0;
};

} // namespace antsynth
