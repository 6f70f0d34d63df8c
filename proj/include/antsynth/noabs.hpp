#pragma once

#include "antsynth/optim.hpp"
#include "antsynth/rng.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace antsynth {

/// NOABS: ant-bridge metaheuristic over [0,1]^M. Foragers explore by
/// pheromone-guided sampling around an elite archive; bridges exploit by
/// chaining interpolated candidates between two anchor solutions. A bridge is
/// built only when its ants-per-distance benefit rate beats the detour rate,
/// and it survives only while the member loads balance.
struct NoabsParams {
    int colony_size = 40;           ///< N, total ants per iteration
    int archive_size = 10;          ///< K, pheromone archive entries
    double alpha = 17.02;           ///< forager/builder conversion coefficient
    double detour_factor = 2.0;     ///< kappa, detour length as multiple of the gap
    double span_per_ant = 0.1;      ///< box-diagonal fraction one bridge ant spans
    double jitter_sigma = 0.02;     ///< gaussian jitter of bridge members, box units
    double capacity_fraction = 1.0; ///< per-ant load capacity on the normalized scale
    double collapse_tolerance = 0.05; ///< force-residual tolerance for a standing bridge
    double collapse_hazard = 0.2;   ///< collapse probability = mean(load) * hazard
    double tie_epsilon = 0.02;      ///< relative rho window for the longer-path rule
    double pheromone_q = 0.3;       ///< archive rank weight decay
    double forager_min_std = 1e-3;  ///< sampling std floor per coordinate
    int max_iterations = 500;
    std::uint64_t seed = 0;

    void validate() const; // throws InvalidInput
};

struct Candidate {
    std::vector<double> position;
    double fitness = 0.0;
};

/// Population bookkeeping: ranked elite archive (the pheromone trail),
/// best-ever solution, and the generator every random draw flows through.
struct ColonyState {
    int colony_size = 0;
    std::vector<Candidate> archive;        ///< ascending fitness
    Candidate gbest;
    std::vector<double> pheromone_weights; ///< rank-based, sums to 1
    int iteration = 0;
    std::uint64_t seed = 0;
    Rng rng;
};

/// Economics of bridging the gap between two anchor solutions.
struct BridgeProposal {
    std::size_t anchor_a = 0;
    std::size_t anchor_b = 0;
    double span = 0.0;          ///< D, Euclidean anchor distance
    double detour_factor = 0.0; ///< kappa
    double trail_length = 0.0;  ///< L_T = D
    double detour_length = 0.0; ///< L_A = kappa * D
    int num_bridge_ants = 0;    ///< n_b
    double rate_without = 0.0;  ///< N / (L_T + L_A)
    double rate_with = 0.0;     ///< rho = (N - n_b/alpha) / D
    bool accepted = false;
};

struct Bridge {
    std::vector<std::vector<double>> members;
    std::vector<double> span_positions; ///< t_i along the unit span
    std::vector<double> loads;          ///< rank-normalized member fitness, (0,1]
    double capacity = 1.0;
    bool stands = false;
};

/// Static force balance of the loaded bridge treated as a simply supported
/// unit-span beam.
struct StabilityReport {
    bool stands = false;
    double reaction_a = 0.0; ///< support reaction at t = 0
    double reaction_b = 0.0; ///< support reaction at t = 1
    double sum_fx = 0.0;
    double sum_fy = 0.0;
    double sum_moment = 0.0;
};

/// Ants-per-distance rate without a bridge: N / (L_T + L_A).
double benefit_rate_no_bridge(double num_ants, double trail_length, double detour_length);

/// Foragers left once n_b ants are bound into the bridge: N - n_b / alpha.
/// Throws InfeasibleBridgeError when the result is not positive.
double effective_foragers(double num_ants, double num_bridge_ants, double alpha);

/// Benefit rate with the bridge present: (N - n_b/alpha) / f.
double bridge_rate(double num_ants, double num_bridge_ants, double alpha, double shortest_distance);

BridgeProposal propose_bridge(const std::vector<double>& anchor_a,
                              const std::vector<double>& anchor_b,
                              const NoabsParams& params);

/// Interpolated members a + t_i (b - a) + jitter, t_i = i/(n_b+1), clamped
/// to the box. Loads stay empty until member fitness is known.
Bridge form_bridge(const BridgeProposal& proposal,
                   const std::vector<double>& anchor_a,
                   const std::vector<double>& anchor_b,
                   const NoabsParams& params,
                   Rng& rng);

/// Load of each member from the rank of its fitness among members: the worst
/// member carries 1, a lone member carries the full unit load.
std::vector<double> rank_normalized_loads(const std::vector<double>& member_fitness);

StabilityReport check_stability(const Bridge& bridge, const NoabsParams& params, Rng& rng);

/// Archive weights: exp(-rank / (q * K)), normalized.
std::vector<double> pheromone_weights(std::size_t archive_size, double q);

std::vector<std::vector<double>> forager_step(const ColonyState& colony,
                                              std::size_t count,
                                              const NoabsParams& params,
                                              Rng& rng);

struct AnchorSelection {
    std::size_t index_a = 0;
    std::size_t index_b = 0;
    BridgeProposal proposal;
};

/// Default anchors are the two best distinct archive members; a later pair
/// replaces them only when its rate ties within tie_epsilon and it spans a
/// longer gap.
std::optional<AnchorSelection> select_anchor_pair(const ColonyState& colony,
                                                  const NoabsParams& params);

OptResult noabs_optimize(const Objective& objective, std::size_t dimension,
                         const NoabsParams& params);

} // namespace antsynth
