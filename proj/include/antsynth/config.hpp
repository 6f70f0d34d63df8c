#pragma once

#include "antsynth/baselines.hpp"
#include "antsynth/mask.hpp"
#include "antsynth/noabs.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace antsynth {

/// A full experiment setup, as loaded from an INI-style config file.
/// Sections: top-level keys, [mask], [optimizer]. The seed is mandatory so
/// every run is reproducible by construction.
struct ExperimentConfig {
    int num_elements = 20;
    double spacing_wavelengths = 0.5;
    double grid_step_deg = 0.25;
    double floor_db = -120.0;

    MaskSpec mask;

    std::string optimizer_name = "noabs";
    int population = 40;
    NoabsParams noabs;
    PsoParams pso;
    GaParams ga;

    std::uint64_t seed = 0;
    bool seed_set = false;
    int iterations = 500;
    std::string output_dir = "antsynth_out";

    void validate() const; // throws ConfigError naming the offending key
};

inline const std::vector<std::string> kOptimizerNames = {"noabs", "pso", "ga"};

ExperimentConfig load_config(const std::string& path);

/// Same as load_config but from a stream; source_name appears in error
/// messages ("name:line: ...").
ExperimentConfig parse_config(std::istream& in, const std::string& source_name);

} // namespace antsynth
