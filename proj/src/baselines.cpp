#include "antsynth/baselines.hpp"

#include "antsynth/errors.hpp"
#include "antsynth/rng.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace antsynth {

namespace {

void require(bool ok, const char* message)
{
    if (!ok)
        throw InvalidInput(message);
}

/// Bounce off the box walls, flipping the velocity on each reflection.
void reflect_into_box(double& x, double& v)
{
    while (x < 0.0 || x > 1.0) {
        x = x < 0.0 ? -x : 2.0 - x;
        v = -v;
    }
}

double clamp01(double x)
{
    return std::min(1.0, std::max(0.0, x));
}

} // namespace

void PsoParams::validate() const
{
    require(swarm_size >= 4, "PsoParams: swarm_size must be at least 4");
    require(inertia >= 0.0 && inertia <= 1.0, "PsoParams: inertia must lie in [0, 1]");
    require(cognitive >= 0.0 && social >= 0.0, "PsoParams: acceleration must be non-negative");
    require(velocity_clamp > 0.0, "PsoParams: velocity_clamp must be positive");
    require(max_iterations >= 0, "PsoParams: max_iterations must be non-negative");
}

void GaParams::validate() const
{
    require(population >= 4, "GaParams: population must be at least 4");
    require(tournament_size >= 1 && tournament_size <= population,
            "GaParams: tournament_size out of range");
    require(crossover_rate >= 0.0 && crossover_rate <= 1.0,
            "GaParams: crossover_rate must lie in [0, 1]");
    require(mutation_rate >= 0.0 && mutation_rate <= 1.0,
            "GaParams: mutation_rate must lie in [0, 1]");
    require(mutation_sigma >= 0.0, "GaParams: mutation_sigma must be non-negative");
    require(elitism >= 0 && elitism <= 1, "GaParams: elitism must be 0 or 1");
    require(max_iterations >= 0, "GaParams: max_iterations must be non-negative");
}

OptResult pso_optimize(const Objective& objective, std::size_t dimension,
                       const PsoParams& params)
{
    params.validate();
    require(dimension > 0, "pso_optimize: dimension must be positive");

    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(params.seed);
    const auto n = static_cast<std::size_t>(params.swarm_size);
    const double vmax = params.velocity_clamp;

    std::vector<std::vector<double>> position(n), velocity(n), pbest(n);
    std::vector<double> fitness(n), pbest_fitness(n);

    OptResult result;
    std::size_t gbest = 0;
    for (std::size_t i = 0; i < n; ++i) {
        position[i].resize(dimension);
        velocity[i].resize(dimension);
        for (std::size_t j = 0; j < dimension; ++j) {
            position[i][j] = uniform01(rng);
            velocity[i][j] = (2.0 * uniform01(rng) - 1.0) * vmax;
        }
        fitness[i] = objective(position[i]);
        ++result.evaluation_count;
        pbest[i] = position[i];
        pbest_fitness[i] = fitness[i];
        if (pbest_fitness[i] < pbest_fitness[gbest])
            gbest = i;
    }
    std::vector<double> gbest_position = pbest[gbest];
    double gbest_fitness = pbest_fitness[gbest];

    result.history.reserve(static_cast<std::size_t>(params.max_iterations));
    for (int iter = 0; iter < params.max_iterations; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < dimension; ++j) {
                const double r1 = uniform01(rng);
                const double r2 = uniform01(rng);
                double v = params.inertia * velocity[i][j] +
                           params.cognitive * r1 * (pbest[i][j] - position[i][j]) +
                           params.social * r2 * (gbest_position[j] - position[i][j]);
                v = std::min(vmax, std::max(-vmax, v));
                double x = position[i][j] + v;
                reflect_into_box(x, v);
                velocity[i][j] = v;
                position[i][j] = x;
            }
            fitness[i] = objective(position[i]);
            ++result.evaluation_count;
            if (fitness[i] < pbest_fitness[i]) {
                pbest_fitness[i] = fitness[i];
                pbest[i] = position[i];
                if (fitness[i] < gbest_fitness) {
                    gbest_fitness = fitness[i];
                    gbest_position = position[i];
                }
            }
        }
        result.history.push_back(gbest_fitness);
    }

    result.best_vector = std::move(gbest_position);
    result.best_fitness = gbest_fitness;
    result.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

OptResult ga_optimize(const Objective& objective, std::size_t dimension,
                      const GaParams& params)
{
    params.validate();
    require(dimension > 0, "ga_optimize: dimension must be positive");

    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(params.seed);
    const auto n = static_cast<std::size_t>(params.population);

    std::vector<std::vector<double>> population(n);
    std::vector<double> fitness(n);

    OptResult result;
    for (std::size_t i = 0; i < n; ++i) {
        population[i].resize(dimension);
        for (auto& x : population[i])
            x = uniform01(rng);
        fitness[i] = objective(population[i]);
        ++result.evaluation_count;
    }

    auto best_index = [&]() {
        std::size_t best = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (fitness[i] < fitness[best])
                best = i;
        return best;
    };
    auto tournament = [&]() {
        std::size_t winner = static_cast<std::size_t>(rng() % n);
        for (int t = 1; t < params.tournament_size; ++t) {
            const std::size_t challenger = static_cast<std::size_t>(rng() % n);
            if (fitness[challenger] < fitness[winner])
                winner = challenger;
        }
        return winner;
    };

    std::size_t best = best_index();
    std::vector<double> elite = population[best];
    double elite_fitness = fitness[best];

    result.history.reserve(static_cast<std::size_t>(params.max_iterations));
    for (int iter = 0; iter < params.max_iterations; ++iter) {
        std::vector<std::vector<double>> offspring(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& a = population[tournament()];
            const auto& b = population[tournament()];
            std::vector<double> child(dimension);
            if (uniform01(rng) < params.crossover_rate) {
                const double u = uniform01(rng);
                for (std::size_t j = 0; j < dimension; ++j)
                    child[j] = u * a[j] + (1.0 - u) * b[j];
            } else {
                child = a;
            }
            for (std::size_t j = 0; j < dimension; ++j)
                if (uniform01(rng) < params.mutation_rate)
                    child[j] = clamp01(child[j] + params.mutation_sigma * gaussian(rng));
            offspring[i] = std::move(child);
        }

        for (std::size_t i = 0; i < n; ++i) {
            population[i] = std::move(offspring[i]);
            fitness[i] = objective(population[i]);
            ++result.evaluation_count;
        }

        // Full generational replacement; the elite re-enters in place of the
        // worst offspring when the generation failed to keep it.
        if (params.elitism > 0) {
            std::size_t worst = 0;
            for (std::size_t i = 1; i < n; ++i)
                if (fitness[i] > fitness[worst])
                    worst = i;
            if (elite_fitness < fitness[worst]) {
                population[worst] = elite;
                fitness[worst] = elite_fitness;
            }
        }

        best = best_index();
        if (fitness[best] < elite_fitness) {
            elite = population[best];
            elite_fitness = fitness[best];
        }
        result.history.push_back(elite_fitness);
    }

    result.best_vector = std::move(elite);
    result.best_fitness = elite_fitness;
    result.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

} // namespace antsynth
