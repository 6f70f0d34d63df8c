#include "antsynth/config.hpp"

#include "antsynth/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace antsynth {

namespace {

std::string trim(const std::string& s)
{
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

struct Entry {
    std::string section;
    std::string key;
    std::string value;
    int line = 0;
};

[[noreturn]] void fail_at(const std::string& source, int line, const std::string& message)
{
    throw ConfigError(source + ":" + std::to_string(line) + ": " + message);
}

[[noreturn]] void fail(const std::string& message)
{
    throw ConfigError(message);
}

std::vector<Entry> tokenize(std::istream& in, const std::string& source)
{
    std::vector<Entry> entries;
    std::string section;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        const std::string text = trim(raw);
        if (text.empty())
            continue;
        if (text.front() == '[') {
            if (text.back() != ']')
                fail_at(source, line, "unterminated section header");
            section = trim(text.substr(1, text.size() - 2));
            if (section.empty())
                fail_at(source, line, "empty section name");
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            fail_at(source, line, "expected 'key = value'");
        Entry e;
        e.section = section;
        e.key = trim(text.substr(0, eq));
        e.value = trim(text.substr(eq + 1));
        e.line = line;
        if (e.key.empty())
            fail_at(source, line, "missing key before '='");
        if (e.value.empty())
            fail_at(source, line, "missing value for key '" + e.key + "'");
        entries.push_back(std::move(e));
    }
    return entries;
}

double parse_double(const Entry& e, const std::string& source)
{
    std::istringstream ss(e.value);
    double v = 0.0;
    if (!(ss >> v) || !(ss >> std::ws).eof())
        fail_at(source, e.line, "key '" + e.key + "': expected a number, got '" + e.value + "'");
    return v;
}

long long parse_int(const Entry& e, const std::string& source)
{
    std::istringstream ss(e.value);
    long long v = 0;
    if (!(ss >> v) || !(ss >> std::ws).eof())
        fail_at(source, e.line, "key '" + e.key + "': expected an integer, got '" + e.value + "'");
    return v;
}

std::uint64_t parse_u64(const Entry& e, const std::string& source)
{
    std::istringstream ss(e.value);
    std::uint64_t v = 0;
    if (!(ss >> v) || !(ss >> std::ws).eof())
        fail_at(source, e.line,
                "key '" + e.key + "': expected an unsigned integer, got '" + e.value + "'");
    return v;
}

std::vector<double> parse_doubles(const Entry& e, const std::string& source, std::size_t count)
{
    std::istringstream ss(e.value);
    std::vector<double> out;
    double v = 0.0;
    while (ss >> v)
        out.push_back(v);
    if (!(ss >> std::ws).eof() || out.size() != count)
        fail_at(source, e.line,
                "key '" + e.key + "': expected " + std::to_string(count) +
                    " numbers, got '" + e.value + "'");
    return out;
}

std::string join_names()
{
    std::string all;
    for (const auto& n : kOptimizerNames)
        all += (all.empty() ? "" : ", ") + n;
    return all;
}

} // namespace

ExperimentConfig parse_config(std::istream& in, const std::string& source_name)
{
    ExperimentConfig cfg;
    bool mask_main_set = false;
    std::set<std::pair<std::string, std::string>> seen;

    for (const Entry& e : tokenize(in, source_name)) {
        // null_sector is the only repeatable key
        if (e.key != "null_sector" && !seen.insert({e.section, e.key}).second)
            fail_at(source_name, e.line, "duplicate key '" + e.key + "'");

        if (e.section.empty()) {
            if (e.key == "num_elements")
                cfg.num_elements = static_cast<int>(parse_int(e, source_name));
            else if (e.key == "spacing_wavelengths")
                cfg.spacing_wavelengths = parse_double(e, source_name);
            else if (e.key == "grid_step_deg")
                cfg.grid_step_deg = parse_double(e, source_name);
            else if (e.key == "floor_db")
                cfg.floor_db = parse_double(e, source_name);
            else if (e.key == "seed") {
                cfg.seed = parse_u64(e, source_name);
                cfg.seed_set = true;
            } else if (e.key == "iterations")
                cfg.iterations = static_cast<int>(parse_int(e, source_name));
            else if (e.key == "output_dir")
                cfg.output_dir = e.value;
            else
                fail_at(source_name, e.line, "unknown key '" + e.key + "'");
        } else if (e.section == "mask") {
            if (e.key == "main_sector") {
                const auto v = parse_doubles(e, source_name, 2);
                cfg.mask.main_lo_deg = v[0];
                cfg.mask.main_hi_deg = v[1];
                mask_main_set = true;
            } else if (e.key == "sll_ceiling_db")
                cfg.mask.sll_ceiling_db = parse_double(e, source_name);
            else if (e.key == "null_sector") {
                const auto v = parse_doubles(e, source_name, 3);
                cfg.mask.null_sectors.push_back({v[0], v[1], v[2]});
            } else
                fail_at(source_name, e.line, "unknown key '" + e.key + "' in [mask]");
        } else if (e.section == "optimizer") {
            if (e.key == "name")
                cfg.optimizer_name = e.value;
            else if (e.key == "population")
                cfg.population = static_cast<int>(parse_int(e, source_name));
            // NOABS knobs
            else if (e.key == "archive_size")
                cfg.noabs.archive_size = static_cast<int>(parse_int(e, source_name));
            else if (e.key == "alpha")
                cfg.noabs.alpha = parse_double(e, source_name);
            else if (e.key == "detour_factor")
                cfg.noabs.detour_factor = parse_double(e, source_name);
            else if (e.key == "span_per_ant")
                cfg.noabs.span_per_ant = parse_double(e, source_name);
            else if (e.key == "jitter_sigma")
                cfg.noabs.jitter_sigma = parse_double(e, source_name);
            else if (e.key == "capacity_fraction")
                cfg.noabs.capacity_fraction = parse_double(e, source_name);
            else if (e.key == "collapse_tolerance")
                cfg.noabs.collapse_tolerance = parse_double(e, source_name);
            else if (e.key == "collapse_hazard")
                cfg.noabs.collapse_hazard = parse_double(e, source_name);
            else if (e.key == "tie_epsilon")
                cfg.noabs.tie_epsilon = parse_double(e, source_name);
            else if (e.key == "pheromone_q")
                cfg.noabs.pheromone_q = parse_double(e, source_name);
            // PSO knobs
            else if (e.key == "inertia")
                cfg.pso.inertia = parse_double(e, source_name);
            else if (e.key == "cognitive")
                cfg.pso.cognitive = parse_double(e, source_name);
            else if (e.key == "social")
                cfg.pso.social = parse_double(e, source_name);
            else if (e.key == "velocity_clamp")
                cfg.pso.velocity_clamp = parse_double(e, source_name);
            // GA knobs
            else if (e.key == "tournament_size")
                cfg.ga.tournament_size = static_cast<int>(parse_int(e, source_name));
            else if (e.key == "crossover_rate")
                cfg.ga.crossover_rate = parse_double(e, source_name);
            else if (e.key == "mutation_rate")
                cfg.ga.mutation_rate = parse_double(e, source_name);
            else if (e.key == "mutation_sigma")
                cfg.ga.mutation_sigma = parse_double(e, source_name);
            else if (e.key == "elitism")
                cfg.ga.elitism = static_cast<int>(parse_int(e, source_name));
            else
                fail_at(source_name, e.line, "unknown key '" + e.key + "' in [optimizer]");
        } else {
            fail_at(source_name, e.line, "unknown section [" + e.section + "]");
        }
    }
    (void)mask_main_set;

    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail("cannot open config file '" + path + "'");
    return parse_config(in, path);
}

void ExperimentConfig::validate() const
{
    if (num_elements < 4 || num_elements % 2 != 0)
        fail("num_elements must be an even integer >= 4 (got " +
             std::to_string(num_elements) + ")");
    if (spacing_wavelengths <= 0.0)
        fail("spacing_wavelengths must be positive");
    if (grid_step_deg <= 0.0)
        fail("grid_step_deg must be positive");
    const double cells = 180.0 / grid_step_deg;
    if (std::abs(cells - std::round(cells)) > 1e-9 * cells)
        fail("grid_step_deg must divide 180 evenly");
    if (floor_db >= 0.0)
        fail("floor_db must be negative");
    if (!seed_set)
        fail("seed is required (runs must be reproducible by construction)");
    if (iterations < 1)
        fail("iterations must be at least 1");
    if (population < 4)
        fail("population must be at least 4");
    if (std::find(kOptimizerNames.begin(), kOptimizerNames.end(), optimizer_name) ==
        kOptimizerNames.end())
        fail("unknown optimizer '" + optimizer_name + "' (valid names: " + join_names() + ")");
    if (output_dir.empty())
        fail("output_dir must not be empty");
    // mask sector sanity is revalidated by build_mask against the actual grid
    if (mask.main_lo_deg > mask.main_hi_deg)
        fail("mask main_sector is empty (low > high)");
    if (mask.main_lo_deg < 0.0 || mask.main_hi_deg > 180.0)
        fail("mask main_sector must lie within [0, 180]");
}

} // namespace antsynth
