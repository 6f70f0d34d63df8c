#include "antsynth/mask.hpp"

#include "antsynth/errors.hpp"

#include <algorithm>
#include <cmath>

namespace antsynth {

PatternMask build_mask(const std::vector<double>& theta_deg, const MaskSpec& spec)
{
    if (theta_deg.size() < 2)
        throw ConfigError("mask: grid needs at least two points");
    if (spec.main_lo_deg > spec.main_hi_deg)
        throw ConfigError("mask: empty main sector (main_sector low > high)");
    if (spec.main_lo_deg < 0.0 || spec.main_hi_deg > 180.0)
        throw ConfigError("mask: main_sector must lie within [0, 180]");
    if (spec.sll_ceiling_db > 0.0)
        throw ConfigError("mask: sll_ceiling_db must be <= 0");
    for (const auto& ns : spec.null_sectors) {
        if (ns.half_width_deg <= 0.0)
            throw ConfigError("mask: null_sector half width must be positive");
        if (ns.depth_db > 0.0)
            throw ConfigError("mask: null_sector depth must be <= 0");
        if (ns.center_deg + ns.half_width_deg >= spec.main_lo_deg &&
            ns.center_deg - ns.half_width_deg <= spec.main_hi_deg)
            throw ConfigError("mask: null_sector overlaps the main sector");
    }

    PatternMask mask;
    mask.theta_deg = theta_deg;
    mask.afd_db.resize(theta_deg.size());

    bool main_hit = false;
    for (std::size_t i = 0; i < theta_deg.size(); ++i) {
        const double theta = theta_deg[i];
        if (theta >= spec.main_lo_deg && theta <= spec.main_hi_deg) {
            mask.afd_db[i] = 0.0;
            main_hit = true;
            continue;
        }
        double ceiling = spec.sll_ceiling_db;
        for (const auto& ns : spec.null_sectors)
            if (std::abs(theta - ns.center_deg) <= ns.half_width_deg)
                ceiling = std::min(ceiling, ns.depth_db);
        mask.afd_db[i] = ceiling;
    }
    if (!main_hit)
        throw ConfigError("mask: empty main sector (no grid point inside)");
    return mask;
}

double fitness(const RadiationPattern& pattern, const PatternMask& mask)
{
    const auto& theta = pattern.theta_deg;
    if (theta.size() != mask.theta_deg.size())
        throw InvalidInput("fitness: pattern and mask grids differ in length");
    for (std::size_t i = 0; i < theta.size(); ++i)
        if (std::abs(theta[i] - mask.theta_deg[i]) > 1e-9)
            throw InvalidInput("fitness: pattern and mask grids differ");

    double integral = 0.0;
    double prev = std::max(0.0, pattern.af_db[0] - mask.afd_db[0]);
    for (std::size_t i = 1; i < theta.size(); ++i) {
        const double cur = std::max(0.0, pattern.af_db[i] - mask.afd_db[i]);
        integral += 0.5 * (prev + cur) * (theta[i] - theta[i - 1]);
        prev = cur;
    }
    return integral;
}

Objective make_objective(const ArrayGeometry& geometry,
                         const MaskSpec& mask_spec,
                         double grid_step_deg,
                         double floor_db)
{
    geometry.validate();
    if (floor_db >= 0.0)
        throw InvalidInput("make_objective: floor_db must be negative");

    auto theta = uniform_grid(grid_step_deg);
    PatternMask mask = build_mask(theta, mask_spec);
    auto basis = detail::cosine_basis(geometry, theta);
    const std::size_t m = geometry.num_pairs;

    // The basis table is shared by every evaluation; the pattern math is the
    // same code path compute_pattern takes for zero phases.
    return [theta = std::move(theta), mask = std::move(mask), basis = std::move(basis),
            m, floor_db](const std::vector<double>& amplitudes) -> double {
        if (amplitudes.size() != m)
            throw InvalidInput("objective: amplitude vector has wrong dimension");
        bool all_zero = true;
        for (double a : amplitudes) {
            if (a < 0.0 || a > 1.0)
                throw InvalidInput("objective: amplitudes must lie in [0, 1]");
            if (a != 0.0)
                all_zero = false;
        }
        if (all_zero)
            return kZeroExcitationFitness;

        RadiationPattern pattern;
        pattern.theta_deg = theta;
        detail::pattern_from_basis(basis, m, amplitudes, floor_db, pattern);
        return fitness(pattern, mask);
    };
}

} // namespace antsynth
