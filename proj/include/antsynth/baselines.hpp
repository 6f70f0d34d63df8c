#pragma once

#include "antsynth/optim.hpp"

#include <cstdint>

namespace antsynth {

/// Global-best PSO with constriction-style defaults and reflecting box walls.
struct PsoParams {
    int swarm_size = 40;
    double inertia = 0.729;
    double cognitive = 1.49445;
    double social = 1.49445;
    double velocity_clamp = 0.2; ///< box units per coordinate
    int max_iterations = 500;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Real-coded GA: tournament selection, arithmetic crossover, gaussian
/// mutation, one elite.
struct GaParams {
    int population = 40;
    int tournament_size = 2;
    double crossover_rate = 0.9;
    double mutation_rate = 0.1;  ///< per gene
    double mutation_sigma = 0.05;
    int elitism = 1;
    int max_iterations = 500;
    std::uint64_t seed = 0;

    void validate() const;
};

OptResult pso_optimize(const Objective& objective, std::size_t dimension,
                       const PsoParams& params);

OptResult ga_optimize(const Objective& objective, std::size_t dimension,
                      const GaParams& params);

} // namespace antsynth
