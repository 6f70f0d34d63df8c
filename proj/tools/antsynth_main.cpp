#include "antsynth/errors.hpp"
#include "antsynth/experiment.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitRuntimeError = 3;

std::vector<std::string> split_names(const std::string& csv)
{
    std::vector<std::string> names;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            names.push_back(item);
    return names;
}

std::vector<double> read_amplitudes(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw antsynth::ConfigError("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw antsynth::ConfigError("'" + path + "' is not valid JSON: " + e.what());
    }
    if (!j.contains("amplitudes") || !j["amplitudes"].is_array())
        throw antsynth::ConfigError("'" + path + "' has no \"amplitudes\" array");
    return j["amplitudes"].get<std::vector<double>>();
}

void print_summary(const antsynth::RunSummary& summary)
{
    std::printf("best fitness     %.6g dB*deg\n", summary.best_fitness);
    if (summary.sll_db)
        std::printf("side lobe level  %.2f dB\n", *summary.sll_db);
    else
        std::printf("side lobe level  n/a (no side lobes)\n");
    for (const auto& nd : summary.null_depths)
        std::printf("null @ %.2f deg  %.2f dB\n", nd.angle_deg, nd.depth_db);
    std::printf("main lobe        [%.2f, %.2f] deg\n", summary.main_lobe_low_deg,
                summary.main_lobe_high_deg);
    std::printf("evaluations      %lld\n", summary.evaluation_count);
    std::printf("wall time        %.3f s\n", summary.wall_time_s);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Linear antenna array synthesis with the NOABS ant-bridge optimizer"};
    app.require_subcommand(1);

    std::string config_path;
    std::string optimizers = "noabs,pso,ga";
    std::string vector_path;

    auto* run = app.add_subcommand("run", "Run one synthesis experiment");
    run->add_option("config", config_path, "experiment config file")->required();

    auto* cmp = app.add_subcommand("compare", "Run several optimizers under equal budgets");
    cmp->add_option("config", config_path, "experiment config file")->required();
    cmp->add_option("--optimizers", optimizers, "comma-separated optimizer names")
        ->capture_default_str();

    auto* pat = app.add_subcommand("pattern", "Re-emit pattern.csv for a stored best vector");
    pat->add_option("best_vector", vector_path, "best_vector.json from a previous run")
        ->required();
    pat->add_option("config", config_path, "experiment config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    try {
        const antsynth::ExperimentConfig config = antsynth::load_config(config_path);
        if (run->parsed()) {
            const auto summary = antsynth::run_experiment(config);
            print_summary(summary);
            std::printf("artifacts in     %s\n", config.output_dir.c_str());
        } else if (cmp->parsed()) {
            const auto rows = antsynth::compare(config, split_names(optimizers));
            std::printf("%-10s %14s %10s %14s %8s %10s\n", "optimizer", "best_fitness",
                        "sll_db", "worst_null_db", "evals", "wall_s");
            for (const auto& row : rows)
                std::printf("%-10s %14.6g %10s %14s %8lld %10.3f\n", row.name.c_str(),
                            row.best_fitness,
                            row.sll_db ? std::to_string(*row.sll_db).c_str() : "n/a",
                            row.worst_null_db ? std::to_string(*row.worst_null_db).c_str()
                                              : "n/a",
                            row.evaluation_count, row.wall_time_s);
            std::printf("comparison.csv in %s\n", config.output_dir.c_str());
        } else if (pat->parsed()) {
            const auto amplitudes = read_amplitudes(vector_path);
            const std::string out = config.output_dir + "/pattern.csv";
            antsynth::write_pattern_for_vector(config, amplitudes, out);
            std::printf("pattern written to %s\n", out.c_str());
        }
    } catch (const antsynth::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfigError;
    } catch (const antsynth::InvalidInput& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitRuntimeError;
    }
    return kExitOk;
}
