#include "antsynth/experiment.hpp"

#include "antsynth/errors.hpp"
#include "antsynth/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <tuple>

namespace antsynth {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

/// Shortest-exact decimal for doubles; CSV must round-trip bit for bit.
std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ofstream open_output(const fs::path& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    return out;
}

json config_echo(const ExperimentConfig& cfg)
{
    json mask{{"main_sector", {cfg.mask.main_lo_deg, cfg.mask.main_hi_deg}},
              {"sll_ceiling_db", cfg.mask.sll_ceiling_db}};
    mask["null_sectors"] = json::array();
    for (const auto& ns : cfg.mask.null_sectors)
        mask["null_sectors"].push_back({{"center_deg", ns.center_deg},
                                        {"half_width_deg", ns.half_width_deg},
                                        {"depth_db", ns.depth_db}});
    return json{{"num_elements", cfg.num_elements},
                {"spacing_wavelengths", cfg.spacing_wavelengths},
                {"grid_step_deg", cfg.grid_step_deg},
                {"floor_db", cfg.floor_db},
                {"mask", mask},
                {"optimizer", cfg.optimizer_name},
                {"population", cfg.population},
                {"iterations", cfg.iterations},
                {"seed", cfg.seed},
                {"output_dir", cfg.output_dir}};
}

void write_pattern_csv(const fs::path& path, const RadiationPattern& pattern)
{
    auto out = open_output(path);
    out << "theta_deg,af_linear,af_db\n";
    for (std::size_t i = 0; i < pattern.theta_deg.size(); ++i)
        out << fmt(pattern.theta_deg[i]) << ',' << fmt(pattern.af_linear[i]) << ','
            << fmt(pattern.af_db[i]) << '\n';
}

void write_convergence_csv(const fs::path& path, const std::vector<double>& history)
{
    auto out = open_output(path);
    out << "iteration,best_fitness\n";
    for (std::size_t i = 0; i < history.size(); ++i)
        out << (i + 1) << ',' << fmt(history[i]) << '\n';
}

ArrayGeometry geometry_from(const ExperimentConfig& cfg)
{
    return ArrayGeometry::uniform(static_cast<std::size_t>(cfg.num_elements / 2),
                                  cfg.spacing_wavelengths);
}

/// Pattern metrics for one amplitude vector under the config's setup.
struct PatternReport {
    std::optional<double> sll_db;
    std::vector<NullDepthReport> null_depths;
    double main_lo = 0.0;
    double main_hi = 0.0;
    RadiationPattern pattern;
};

PatternReport report_pattern(const ExperimentConfig& cfg, const std::vector<double>& amplitudes)
{
    PatternReport r;
    r.pattern = compute_pattern(geometry_from(cfg), Excitation::amplitude_only(amplitudes),
                                cfg.grid_step_deg, cfg.floor_db);
    try {
        r.sll_db = side_lobe_level(r.pattern);
    } catch (const NoSideLobesError&) {
        r.sll_db.reset();
    }
    for (const auto& ns : cfg.mask.null_sectors)
        r.null_depths.push_back({ns.center_deg, null_depth(r.pattern, ns.center_deg)});
    std::tie(r.main_lo, r.main_hi) = main_lobe_bounds(r.pattern);
    return r;
}

} // namespace

std::uint64_t sub_seed(std::uint64_t base_seed, const std::string& optimizer_name)
{
    return base_seed ^ fnv1a64(optimizer_name);
}

OptResult run_optimizer(const ExperimentConfig& config, const std::string& name,
                        std::uint64_t seed, const Objective& objective,
                        std::size_t dimension)
{
    if (name == "noabs") {
        NoabsParams p = config.noabs;
        p.colony_size = config.population;
        p.max_iterations = config.iterations;
        p.seed = seed;
        return noabs_optimize(objective, dimension, p);
    }
    if (name == "pso") {
        PsoParams p = config.pso;
        p.swarm_size = config.population;
        p.max_iterations = config.iterations;
        p.seed = seed;
        return pso_optimize(objective, dimension, p);
    }
    if (name == "ga") {
        GaParams p = config.ga;
        p.population = config.population;
        p.max_iterations = config.iterations;
        p.seed = seed;
        return ga_optimize(objective, dimension, p);
    }
    throw ConfigError("unknown optimizer '" + name + "'");
}

RunSummary run_experiment(const ExperimentConfig& config)
{
    config.validate();
    const ArrayGeometry geometry = geometry_from(config);
    const Objective objective =
        make_objective(geometry, config.mask, config.grid_step_deg, config.floor_db);

    OptResult opt = run_optimizer(config, config.optimizer_name, config.seed, objective,
                                  geometry.num_pairs);

    RunSummary summary;
    summary.best_fitness = opt.best_fitness;
    summary.evaluation_count = opt.evaluation_count;
    summary.wall_time_s = opt.wall_time_s;
    summary.seed = config.seed;
    summary.best_vector = opt.best_vector;
    summary.history = opt.history;

    const PatternReport report = report_pattern(config, opt.best_vector);
    summary.sll_db = report.sll_db;
    summary.null_depths = report.null_depths;
    summary.main_lobe_low_deg = report.main_lo;
    summary.main_lobe_high_deg = report.main_hi;

    const fs::path dir(config.output_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw std::runtime_error("cannot create output_dir '" + dir.string() + "'");

    write_pattern_csv(dir / "pattern.csv", report.pattern);
    write_convergence_csv(dir / "convergence.csv", opt.history);

    {
        auto out = open_output(dir / "best_vector.json");
        out << json{{"amplitudes", opt.best_vector}}.dump(2) << '\n';
    }
    {
        // wall time is the one machine-dependent number; it stays out of the
        // persisted summary so identical runs produce identical files
        json j{{"best_fitness", summary.best_fitness},
               {"sll_db", summary.sll_db ? json(*summary.sll_db) : json(nullptr)},
               {"main_lobe_bounds",
                {{"theta_low_deg", summary.main_lobe_low_deg},
                 {"theta_high_deg", summary.main_lobe_high_deg}}},
               {"evaluation_count", summary.evaluation_count},
               {"seed", summary.seed},
               {"config", config_echo(config)}};
        j["null_depths"] = json::array();
        for (const auto& nd : summary.null_depths)
            j["null_depths"].push_back(
                {{"angle_deg", nd.angle_deg}, {"depth_db", nd.depth_db}});
        auto out = open_output(dir / "summary.json");
        out << j.dump(2) << '\n';
    }
    return summary;
}

std::vector<ComparisonRow> compare(const ExperimentConfig& config,
                                   const std::vector<std::string>& optimizer_names)
{
    config.validate();
    if (optimizer_names.size() < 2)
        throw ConfigError("compare needs at least two optimizer names");
    for (const auto& name : optimizer_names)
        if (std::find(kOptimizerNames.begin(), kOptimizerNames.end(), name) ==
            kOptimizerNames.end())
            throw ConfigError("unknown optimizer '" + name + "'");

    // Every optimizer spends population evaluations per iteration plus the
    // initial population, and they all share the config's population and
    // iteration counts, so the budgets match by construction.
    const long long budget =
        static_cast<long long>(config.population) * config.iterations + config.population;

    const ArrayGeometry geometry = geometry_from(config);
    const Objective objective =
        make_objective(geometry, config.mask, config.grid_step_deg, config.floor_db);

    auto worst_null = [](const std::vector<NullDepthReport>& depths) -> std::optional<double> {
        std::optional<double> worst;
        for (const auto& nd : depths)
            if (!worst || nd.depth_db > *worst)
                worst = nd.depth_db;
        return worst;
    };

    std::vector<ComparisonRow> rows;

    // Row 0: uniform excitation, the analytically anchored reference.
    {
        const std::vector<double> uniform(geometry.num_pairs, 1.0);
        const PatternReport report = report_pattern(config, uniform);
        rows.push_back({"uniform", objective(uniform), report.sll_db,
                        worst_null(report.null_depths), 1, 0.0});
    }

    for (const auto& name : optimizer_names) {
        OptResult opt = run_optimizer(config, name, sub_seed(config.seed, name), objective,
                                      geometry.num_pairs);
        if (std::llabs(opt.evaluation_count - budget) >
            static_cast<long long>(config.population))
            throw ConfigError("optimizer '" + name + "' missed the evaluation budget (" +
                              std::to_string(opt.evaluation_count) + " vs " +
                              std::to_string(budget) + ")");
        const PatternReport report = report_pattern(config, opt.best_vector);
        rows.push_back({name, opt.best_fitness, report.sll_db,
                        worst_null(report.null_depths), opt.evaluation_count,
                        opt.wall_time_s});
    }

    const fs::path dir(config.output_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw std::runtime_error("cannot create output_dir '" + dir.string() + "'");
    auto out = open_output(dir / "comparison.csv");
    out << "optimizer,best_fitness,sll_db,worst_null_db,evaluation_count,wall_time_s\n";
    for (const auto& row : rows) {
        out << row.name << ',' << fmt(row.best_fitness) << ','
            << (row.sll_db ? fmt(*row.sll_db) : "nan") << ','
            << (row.worst_null_db ? fmt(*row.worst_null_db) : "nan") << ','
            << row.evaluation_count << ',' << fmt(row.wall_time_s) << '\n';
    }
    return rows;
}

void write_pattern_for_vector(const ExperimentConfig& config,
                              const std::vector<double>& amplitudes,
                              const std::string& csv_path)
{
    const PatternReport report = report_pattern(config, amplitudes);
    const fs::path path(csv_path);
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
    }
    write_pattern_csv(path, report.pattern);
}

} // namespace antsynth
