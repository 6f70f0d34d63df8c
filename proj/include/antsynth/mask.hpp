#pragma once

#include "antsynth/array_model.hpp"
#include "antsynth/optim.hpp"

#include <vector>

namespace antsynth {

/// Angular sector where the desired pattern must stay below depth_db.
struct NullSector {
    double center_deg = 0.0;
    double half_width_deg = 1.0;
    double depth_db = -60.0;
};

/// Piecewise description of the desired pattern: 0 dB over the main-beam
/// sector, a flat side-lobe ceiling elsewhere, and null sectors that deepen
/// the ceiling locally (min wins where sectors overlap).
struct MaskSpec {
    double main_lo_deg = 84.0;
    double main_hi_deg = 96.0;
    double sll_ceiling_db = -20.0;
    std::vector<NullSector> null_sectors;
};

struct PatternMask {
    std::vector<double> theta_deg;
    std::vector<double> afd_db;
};

PatternMask build_mask(const std::vector<double>& theta_deg, const MaskSpec& spec);

/// One-sided violation integral: trapezoid rule over theta of
/// max(0, af_db - afd_db), in dB*degrees. Zero exactly when the pattern is
/// pointwise compliant on the grid.
double fitness(const RadiationPattern& pattern, const PatternMask& mask);

/// Objective value assigned to the all-zero amplitude vector, whose pattern
/// has no defined normalization.
inline constexpr double kZeroExcitationFitness = 1e9;

/// Deterministic amplitudes -> compute_pattern -> fitness mapping, total over
/// the box [0,1]^M.
Objective make_objective(const ArrayGeometry& geometry,
                         const MaskSpec& mask,
                         double grid_step_deg = kDefaultGridStepDeg,
                         double floor_db = kDefaultFloorDb);

} // namespace antsynth
