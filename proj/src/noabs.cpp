#include "antsynth/noabs.hpp"

#include "antsynth/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

namespace antsynth {

namespace {

void require(bool ok, const char* message)
{
    if (!ok)
        throw InvalidInput(message);
}

double euclidean(const std::vector<double>& a, const std::vector<double>& b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

double clamp01(double x)
{
    return std::min(1.0, std::max(0.0, x));
}

std::vector<double> uniform_vector(std::size_t dimension, Rng& rng)
{
    std::vector<double> x(dimension);
    for (auto& v : x)
        v = uniform01(rng);
    return x;
}

/// Insert into the ascending archive; older entries win fitness ties.
void archive_insert(std::vector<Candidate>& archive, std::size_t capacity, Candidate candidate)
{
    auto pos = std::upper_bound(archive.begin(), archive.end(), candidate.fitness,
                                [](double f, const Candidate& c) { return f < c.fitness; });
    archive.insert(pos, std::move(candidate));
    if (archive.size() > capacity)
        archive.pop_back();
}

} // namespace

void NoabsParams::validate() const
{
    require(colony_size >= 4, "NoabsParams: colony_size must be at least 4");
    require(archive_size >= 2, "NoabsParams: archive_size must be at least 2");
    require(alpha > 0.0, "NoabsParams: alpha must be positive");
    require(detour_factor > 0.0, "NoabsParams: detour_factor must be positive");
    require(span_per_ant > 0.0, "NoabsParams: span_per_ant must be positive");
    require(jitter_sigma >= 0.0, "NoabsParams: jitter_sigma must be non-negative");
    require(capacity_fraction > 0.0, "NoabsParams: capacity_fraction must be positive");
    require(collapse_tolerance > 0.0, "NoabsParams: collapse_tolerance must be positive");
    require(collapse_hazard >= 0.0 && collapse_hazard <= 1.0,
            "NoabsParams: collapse_hazard must lie in [0, 1]");
    require(tie_epsilon >= 0.0, "NoabsParams: tie_epsilon must be non-negative");
    require(pheromone_q > 0.0, "NoabsParams: pheromone_q must be positive");
    require(forager_min_std > 0.0, "NoabsParams: forager_min_std must be positive");
    require(max_iterations >= 0, "NoabsParams: max_iterations must be non-negative");
}

double benefit_rate_no_bridge(double num_ants, double trail_length, double detour_length)
{
    require(num_ants > 0.0, "benefit_rate_no_bridge: N must be positive");
    require(trail_length >= 0.0 && detour_length >= 0.0,
            "benefit_rate_no_bridge: lengths must be non-negative");
    const double total = trail_length + detour_length;
    require(total > 0.0, "benefit_rate_no_bridge: total distance must be positive");
    return num_ants / total;
}

double effective_foragers(double num_ants, double num_bridge_ants, double alpha)
{
    require(num_ants > 0.0, "effective_foragers: N must be positive");
    require(num_bridge_ants >= 0.0, "effective_foragers: n_b must be non-negative");
    require(alpha > 0.0, "effective_foragers: alpha must be positive");
    const double remaining = num_ants - num_bridge_ants / alpha;
    if (remaining <= 0.0)
        throw InfeasibleBridgeError("effective_foragers: bridge consumes the whole colony");
    return remaining;
}

double bridge_rate(double num_ants, double num_bridge_ants, double alpha,
                   double shortest_distance)
{
    require(shortest_distance > 0.0, "bridge_rate: distance must be positive");
    return effective_foragers(num_ants, num_bridge_ants, alpha) / shortest_distance;
}

BridgeProposal propose_bridge(const std::vector<double>& anchor_a,
                              const std::vector<double>& anchor_b,
                              const NoabsParams& params)
{
    params.validate();
    require(!anchor_a.empty() && anchor_a.size() == anchor_b.size(),
            "propose_bridge: anchors must share a positive dimension");

    const double span = euclidean(anchor_a, anchor_b);
    if (span == 0.0)
        throw InvalidInput("propose_bridge: degenerate anchors (zero separation)");

    BridgeProposal p;
    p.span = span;
    p.detour_factor = params.detour_factor;
    p.trail_length = span;
    p.detour_length = params.detour_factor * span;

    const double box_diagonal = std::sqrt(static_cast<double>(anchor_a.size()));
    const double span_per_ant = params.span_per_ant * box_diagonal;
    const int cap = params.colony_size / 2;
    const int wanted = static_cast<int>(std::ceil(span / span_per_ant));
    p.num_bridge_ants = std::max(1, std::min(wanted, cap));

    p.rate_without = benefit_rate_no_bridge(params.colony_size, p.trail_length, p.detour_length);
    p.rate_with = bridge_rate(params.colony_size, p.num_bridge_ants, params.alpha, span);
    p.accepted = p.rate_with > p.rate_without;
    return p;
}

Bridge form_bridge(const BridgeProposal& proposal,
                   const std::vector<double>& anchor_a,
                   const std::vector<double>& anchor_b,
                   const NoabsParams& params,
                   Rng& rng)
{
    if (!proposal.accepted)
        throw InvalidInput("form_bridge: proposal was not accepted");
    require(anchor_a.size() == anchor_b.size() && !anchor_a.empty(),
            "form_bridge: anchors must share a positive dimension");

    const int n_b = proposal.num_bridge_ants;
    Bridge bridge;
    bridge.capacity = params.capacity_fraction;
    bridge.members.reserve(static_cast<std::size_t>(n_b));
    bridge.span_positions.reserve(static_cast<std::size_t>(n_b));

    for (int i = 1; i <= n_b; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n_b + 1);
        std::vector<double> member(anchor_a.size());
        for (std::size_t j = 0; j < member.size(); ++j) {
            double x = anchor_a[j] + t * (anchor_b[j] - anchor_a[j]);
            if (params.jitter_sigma > 0.0)
                x += params.jitter_sigma * gaussian(rng);
            member[j] = clamp01(x);
        }
        bridge.members.push_back(std::move(member));
        bridge.span_positions.push_back(t);
    }
    return bridge;
}

std::vector<double> rank_normalized_loads(const std::vector<double>& member_fitness)
{
    require(!member_fitness.empty(), "rank_normalized_loads: no members");
    const std::size_t n = member_fitness.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (member_fitness[a] != member_fitness[b])
            return member_fitness[a] < member_fitness[b];
        return a < b;
    });

    std::vector<double> loads(n);
    for (std::size_t rank = 0; rank < n; ++rank)
        loads[order[rank]] = static_cast<double>(rank + 1) / static_cast<double>(n);
    return loads;
}

StabilityReport check_stability(const Bridge& bridge, const NoabsParams& params, Rng& rng)
{
    if (bridge.members.empty())
        throw InvalidInput("check_stability: empty bridge");
    require(bridge.loads.size() == bridge.members.size() &&
                bridge.span_positions.size() == bridge.members.size(),
            "check_stability: loads not populated");

    // Simply supported unit-span beam: reactions from the moment balance
    // about each support, then the residuals of the balance equations.
    double reaction_a = 0.0;
    double reaction_b = 0.0;
    double total_load = 0.0;
    double moment_about_a = 0.0;
    for (std::size_t i = 0; i < bridge.loads.size(); ++i) {
        const double w = bridge.loads[i];
        const double x = bridge.span_positions[i];
        reaction_a += w * (1.0 - x);
        reaction_b += w * x;
        total_load += w;
        moment_about_a += w * x;
    }

    StabilityReport report;
    report.reaction_a = reaction_a;
    report.reaction_b = reaction_b;
    report.sum_fx = 0.0; // no lateral loads in this model
    report.sum_fy = std::abs(reaction_a + reaction_b - total_load);
    report.sum_moment = std::abs(reaction_b * 1.0 - moment_about_a);

    const double max_load = *std::max_element(bridge.loads.begin(), bridge.loads.end());
    const double mean_load = total_load / static_cast<double>(bridge.loads.size());
    const double collapse_probability = mean_load * params.collapse_hazard;

    const bool capacity_ok = max_load <= bridge.capacity;
    const bool balanced = report.sum_fy <= params.collapse_tolerance &&
                          report.sum_moment <= params.collapse_tolerance;
    const bool survives_chance = uniform01(rng) >= collapse_probability;
    report.stands = capacity_ok && balanced && survives_chance;
    return report;
}

std::vector<double> pheromone_weights(std::size_t archive_size, double q)
{
    require(archive_size > 0, "pheromone_weights: empty archive");
    require(q > 0.0, "pheromone_weights: q must be positive");
    std::vector<double> w(archive_size);
    double sum = 0.0;
    for (std::size_t rank = 0; rank < archive_size; ++rank) {
        w[rank] = std::exp(-static_cast<double>(rank) /
                           (q * static_cast<double>(archive_size)));
        sum += w[rank];
    }
    for (auto& v : w)
        v /= sum;
    return w;
}

std::vector<std::vector<double>> forager_step(const ColonyState& colony,
                                              std::size_t count,
                                              const NoabsParams& params,
                                              Rng& rng)
{
    require(!colony.archive.empty(), "forager_step: empty archive");
    require(colony.pheromone_weights.size() == colony.archive.size(),
            "forager_step: weights out of sync with the archive");

    const std::size_t k = colony.archive.size();
    const std::size_t dim = colony.archive.front().position.size();

    // Coordinate-wise mean absolute deviation across the archive sets the
    // sampling width; the floor keeps exploration alive once the archive
    // has converged.
    std::vector<double> std_dev(dim);
    for (std::size_t j = 0; j < dim; ++j) {
        double mean = 0.0;
        for (const auto& c : colony.archive)
            mean += c.position[j];
        mean /= static_cast<double>(k);
        double mad = 0.0;
        for (const auto& c : colony.archive)
            mad += std::abs(c.position[j] - mean);
        mad /= static_cast<double>(k);
        std_dev[j] = std::max(params.forager_min_std, mad);
    }

    std::vector<std::vector<double>> foragers;
    foragers.reserve(count);
    for (std::size_t f = 0; f < count; ++f) {
        std::vector<double> x(dim);
        for (std::size_t j = 0; j < dim; ++j) {
            // pick an archive member by pheromone weight, then sample around it
            const double u = uniform01(rng);
            double acc = 0.0;
            std::size_t pick = k - 1;
            for (std::size_t r = 0; r < k; ++r) {
                acc += colony.pheromone_weights[r];
                if (u < acc) {
                    pick = r;
                    break;
                }
            }
            x[j] = clamp01(colony.archive[pick].position[j] + std_dev[j] * gaussian(rng));
        }
        foragers.push_back(std::move(x));
    }
    return foragers;
}

std::optional<AnchorSelection> select_anchor_pair(const ColonyState& colony,
                                                  const NoabsParams& params)
{
    const auto& archive = colony.archive;
    std::optional<AnchorSelection> incumbent;
    for (std::size_t i = 0; i < archive.size(); ++i) {
        for (std::size_t j = i + 1; j < archive.size(); ++j) {
            const double span = euclidean(archive[i].position, archive[j].position);
            if (span == 0.0)
                continue;
            BridgeProposal proposal =
                propose_bridge(archive[i].position, archive[j].position, params);
            proposal.anchor_a = i;
            proposal.anchor_b = j;
            if (!incumbent) {
                incumbent = AnchorSelection{i, j, proposal};
                continue;
            }
            // The first valid pair (the two best members) stays unless a
            // later pair ties on rate and spans a longer gap.
            const double hi = std::max(proposal.rate_with, incumbent->proposal.rate_with);
            const double rel = std::abs(proposal.rate_with - incumbent->proposal.rate_with) / hi;
            if (rel <= params.tie_epsilon && proposal.span > incumbent->proposal.span)
                incumbent = AnchorSelection{i, j, proposal};
        }
    }
    return incumbent;
}

OptResult noabs_optimize(const Objective& objective, std::size_t dimension,
                         const NoabsParams& params)
{
    params.validate();
    require(dimension > 0, "noabs_optimize: dimension must be positive");

    const auto t0 = std::chrono::steady_clock::now();
    const auto n = static_cast<std::size_t>(params.colony_size);
    const auto k = static_cast<std::size_t>(params.archive_size);

    ColonyState colony;
    colony.colony_size = params.colony_size;
    colony.seed = params.seed;
    colony.rng.seed(params.seed);

    OptResult result;

    auto evaluate = [&](std::vector<double> x) {
        Candidate c;
        c.fitness = objective(x);
        c.position = std::move(x);
        ++result.evaluation_count;
        return c;
    };

    for (std::size_t i = 0; i < n; ++i)
        archive_insert(colony.archive, k, evaluate(uniform_vector(dimension, colony.rng)));
    colony.pheromone_weights = pheromone_weights(colony.archive.size(), params.pheromone_q);
    colony.gbest = colony.archive.front();

    result.history.reserve(static_cast<std::size_t>(params.max_iterations));
    for (int iter = 0; iter < params.max_iterations; ++iter) {
        colony.iteration = iter + 1;

        // Bridge phase: members are generated and evaluated first because the
        // stability test needs their loads.
        std::size_t bridge_ants = 0;
        std::size_t restart_count = 0;
        std::vector<Candidate> evaluated_members;
        if (auto selection = select_anchor_pair(colony, params);
            selection && selection->proposal.accepted) {
            const auto& a = colony.archive[selection->index_a].position;
            const auto& b = colony.archive[selection->index_b].position;
            Bridge bridge = form_bridge(selection->proposal, a, b, params, colony.rng);
            bridge_ants = bridge.members.size();

            std::vector<double> member_fitness;
            member_fitness.reserve(bridge_ants);
            for (const auto& member : bridge.members) {
                evaluated_members.push_back(evaluate(member));
                member_fitness.push_back(evaluated_members.back().fitness);
            }
            bridge.loads = rank_normalized_loads(member_fitness);
            const auto report = check_stability(bridge, params, colony.rng);
            if (!report.stands) {
                // Collapse discards the members and reseeds the same head
                // count uniformly, taken out of this iteration's forager
                // budget so every iteration costs exactly N evaluations.
                evaluated_members.clear();
                restart_count = std::min(bridge_ants, n - bridge_ants);
            }
        }

        const std::size_t forager_count = n - bridge_ants - restart_count;
        auto foragers = forager_step(colony, forager_count, params, colony.rng);
        std::vector<std::vector<double>> restarts;
        restarts.reserve(restart_count);
        for (std::size_t r = 0; r < restart_count; ++r)
            restarts.push_back(uniform_vector(dimension, colony.rng));

        for (auto& c : evaluated_members)
            archive_insert(colony.archive, k, std::move(c));
        for (auto& x : foragers)
            archive_insert(colony.archive, k, evaluate(std::move(x)));
        for (auto& x : restarts)
            archive_insert(colony.archive, k, evaluate(std::move(x)));

        colony.pheromone_weights = pheromone_weights(colony.archive.size(), params.pheromone_q);
        colony.gbest = colony.archive.front();
        result.history.push_back(colony.gbest.fitness);
    }

    result.best_vector = colony.gbest.position;
    result.best_fitness = colony.gbest.fitness;
    result.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

} // namespace antsynth
