#pragma once

#include "antsynth/config.hpp"
#include "antsynth/optim.hpp"

#include <optional>
#include <string>
#include <vector>

namespace antsynth {

struct NullDepthReport {
    double angle_deg = 0.0;
    double depth_db = 0.0;
};

/// Everything a finished run reports. Every number except wall_time_s is
/// recomputable from the persisted best vector and the config.
struct RunSummary {
    double best_fitness = 0.0;
    std::optional<double> sll_db;          ///< absent for degenerate single-lobe patterns
    std::vector<NullDepthReport> null_depths;
    double main_lobe_low_deg = 0.0;
    double main_lobe_high_deg = 0.0;
    long long evaluation_count = 0;
    double wall_time_s = 0.0;
    std::uint64_t seed = 0;
    std::vector<double> best_vector;
    std::vector<double> history;
};

struct ComparisonRow {
    std::string name;
    double best_fitness = 0.0;
    std::optional<double> sll_db;
    std::optional<double> worst_null_db;   ///< shallowest null over the mask sectors
    long long evaluation_count = 0;
    double wall_time_s = 0.0;
};

/// Deterministic per-optimizer sub-seed for comparison runs.
std::uint64_t sub_seed(std::uint64_t base_seed, const std::string& optimizer_name);

/// Builds the objective from the config and runs the named optimizer.
OptResult run_optimizer(const ExperimentConfig& config, const std::string& name,
                        std::uint64_t seed, const Objective& objective,
                        std::size_t dimension);

/// Full synthesis run. Persists pattern.csv, convergence.csv,
/// best_vector.json and summary.json into config.output_dir.
RunSummary run_experiment(const ExperimentConfig& config);

/// Runs every named optimizer under equal budgets plus the uniform-excitation
/// baseline (always row 0) and persists comparison.csv.
std::vector<ComparisonRow> compare(const ExperimentConfig& config,
                                   const std::vector<std::string>& optimizer_names);

/// Re-emits pattern.csv for a stored amplitudes vector.
void write_pattern_for_vector(const ExperimentConfig& config,
                              const std::vector<double>& amplitudes,
                              const std::string& csv_path);

} // namespace antsynth
