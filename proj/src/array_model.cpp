#include "antsynth/array_model.hpp"

#include "antsynth/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace antsynth {

namespace {

double deg2rad(double deg)
{
    return deg * kPi / 180.0;
}

void require(bool ok, const std::string& message)
{
    if (!ok)
        throw InvalidInput(message);
}

} // namespace

ArrayGeometry ArrayGeometry::uniform(std::size_t num_pairs, double spacing_wavelengths)
{
    require(num_pairs > 0, "ArrayGeometry::uniform: num_pairs must be positive");
    require(spacing_wavelengths > 0.0, "ArrayGeometry::uniform: spacing must be positive");

    ArrayGeometry g;
    g.num_pairs = num_pairs;
    g.positions.resize(num_pairs);
    for (std::size_t n = 0; n < num_pairs; ++n)
        g.positions[n] = (2.0 * static_cast<double>(n + 1) - 1.0) * spacing_wavelengths / 2.0;
    g.wave_number = kTwoPi;
    g.validate();
    return g;
}

void ArrayGeometry::validate() const
{
    require(num_pairs > 0, "ArrayGeometry: num_pairs must be positive");
    require(positions.size() == num_pairs, "ArrayGeometry: positions size != num_pairs");
    require(wave_number > 0.0, "ArrayGeometry: wave_number must be positive");
    double prev = 0.0;
    for (double d : positions) {
        require(d > prev, "ArrayGeometry: positions must be strictly increasing and positive");
        prev = d;
    }
}

Excitation Excitation::amplitude_only(std::vector<double> amplitudes)
{
    Excitation e;
    e.phases.assign(amplitudes.size(), 0.0);
    e.amplitudes = std::move(amplitudes);
    return e;
}

void RadiationPattern::validate() const
{
    require(!theta_deg.empty(), "RadiationPattern: empty grid");
    require(af_linear.size() == theta_deg.size() && af_db.size() == theta_deg.size(),
            "RadiationPattern: grid arrays disagree in length");
    require(peak_index < theta_deg.size(), "RadiationPattern: peak_index out of range");
    require(af_db[peak_index] == 0.0, "RadiationPattern: peak is not normalized to 0 dB");
    for (std::size_t i = 0; i < af_db.size(); ++i) {
        require(af_linear[i] >= 0.0, "RadiationPattern: negative |AF|");
        require(af_db[i] <= 0.0 && af_db[i] >= floor_db,
                "RadiationPattern: af_db outside [floor_db, 0]");
    }
}

std::vector<double> uniform_grid(double step_deg)
{
    require(step_deg > 0.0, "uniform_grid: step must be positive");
    const double cells = 180.0 / step_deg;
    const double rounded = std::round(cells);
    require(rounded >= 1.0 && std::abs(cells - rounded) <= 1e-9 * cells,
            "uniform_grid: step must divide 180 evenly");

    const auto n = static_cast<std::size_t>(rounded);
    std::vector<double> theta(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        theta[i] = 180.0 * static_cast<double>(i) / static_cast<double>(n);
    return theta;
}

static void check_excitation(const ArrayGeometry& geometry, const Excitation& excitation)
{
    geometry.validate();
    require(excitation.amplitudes.size() == geometry.num_pairs &&
                excitation.phases.size() == geometry.num_pairs,
            "excitation dimensions do not match the geometry");
    for (double a : excitation.amplitudes)
        require(a >= 0.0 && a <= 1.0, "amplitudes must lie in [0, 1]");
}

std::complex<double> array_factor(const ArrayGeometry& geometry,
                                  const Excitation& excitation,
                                  double theta_deg)
{
    check_excitation(geometry, excitation);
    require(theta_deg >= 0.0 && theta_deg <= 180.0, "theta must lie in [0, 180] degrees");

    const double cos_theta = std::cos(deg2rad(theta_deg));
    double re = 0.0;
    double im = 0.0;
    for (std::size_t n = 0; n < geometry.num_pairs; ++n) {
        const double c = std::cos(geometry.wave_number * geometry.positions[n] * cos_theta);
        const double a = excitation.amplitudes[n];
        const double phi = excitation.phases[n];
        re += a * std::cos(phi) * c;
        im += a * std::sin(phi) * c;
    }
    return {2.0 * re, 2.0 * im};
}

namespace detail {

std::vector<double> cosine_basis(const ArrayGeometry& geometry,
                                 const std::vector<double>& theta_deg)
{
    const std::size_t m = geometry.num_pairs;
    std::vector<double> basis(theta_deg.size() * m);
    for (std::size_t i = 0; i < theta_deg.size(); ++i) {
        const double cos_theta = std::cos(deg2rad(theta_deg[i]));
        for (std::size_t n = 0; n < m; ++n)
            basis[i * m + n] =
                std::cos(geometry.wave_number * geometry.positions[n] * cos_theta);
    }
    return basis;
}

void pattern_from_basis(const std::vector<double>& basis,
                        std::size_t num_pairs,
                        const std::vector<double>& amplitudes,
                        double floor_db,
                        RadiationPattern& out)
{
    const std::size_t points = out.theta_deg.size();
    out.af_linear.resize(points);
    out.af_db.resize(points);
    out.floor_db = floor_db;

    double peak = 0.0;
    std::size_t peak_index = 0;
    for (std::size_t i = 0; i < points; ++i) {
        double sum = 0.0;
        const double* row = basis.data() + i * num_pairs;
        for (std::size_t n = 0; n < num_pairs; ++n)
            sum += amplitudes[n] * row[n];
        const double lin = std::abs(2.0 * sum);
        out.af_linear[i] = lin;
        if (lin > peak) {
            peak = lin;
            peak_index = i;
        }
    }
    if (peak <= 0.0)
        throw InvalidInput("compute_pattern: all-zero excitation, normalization undefined");

    out.peak_index = peak_index;
    for (std::size_t i = 0; i < points; ++i) {
        const double db = 20.0 * std::log10(out.af_linear[i] / peak);
        out.af_db[i] = std::max(floor_db, db);
    }
}

} // namespace detail

RadiationPattern compute_pattern(const ArrayGeometry& geometry,
                                 const Excitation& excitation,
                                 double grid_step_deg,
                                 double floor_db)
{
    check_excitation(geometry, excitation);
    require(floor_db < 0.0, "compute_pattern: floor_db must be negative");

    RadiationPattern out;
    out.theta_deg = uniform_grid(grid_step_deg);

    const bool zero_phase = std::all_of(excitation.phases.begin(), excitation.phases.end(),
                                        [](double p) { return p == 0.0; });
    if (zero_phase) {
        const auto basis = detail::cosine_basis(geometry, out.theta_deg);
        detail::pattern_from_basis(basis, geometry.num_pairs, excitation.amplitudes,
                                   floor_db, out);
        return out;
    }

    const std::size_t points = out.theta_deg.size();
    out.af_linear.resize(points);
    out.af_db.resize(points);
    out.floor_db = floor_db;
    double peak = 0.0;
    std::size_t peak_index = 0;
    for (std::size_t i = 0; i < points; ++i) {
        const double lin = std::abs(array_factor(geometry, excitation, out.theta_deg[i]));
        out.af_linear[i] = lin;
        if (lin > peak) {
            peak = lin;
            peak_index = i;
        }
    }
    if (peak <= 0.0)
        throw InvalidInput("compute_pattern: all-zero excitation, normalization undefined");
    out.peak_index = peak_index;
    for (std::size_t i = 0; i < points; ++i)
        out.af_db[i] = std::max(floor_db, 20.0 * std::log10(out.af_linear[i] / peak));
    return out;
}

std::pair<std::size_t, std::size_t> main_lobe_bound_indices(const RadiationPattern& pattern)
{
    pattern.validate();
    const auto& db = pattern.af_db;

    // Walk down both skirts of the peak; the first non-decrease is the
    // bounding local minimum, the grid edge is the fallback.
    std::size_t lo = pattern.peak_index;
    while (lo > 0 && db[lo - 1] < db[lo])
        --lo;
    std::size_t hi = pattern.peak_index;
    while (hi + 1 < db.size() && db[hi + 1] < db[hi])
        ++hi;
    return {lo, hi};
}

std::pair<double, double> main_lobe_bounds(const RadiationPattern& pattern)
{
    const auto [lo, hi] = main_lobe_bound_indices(pattern);
    return {pattern.theta_deg[lo], pattern.theta_deg[hi]};
}

double side_lobe_level(const RadiationPattern& pattern)
{
    const auto [lo, hi] = main_lobe_bound_indices(pattern);
    const auto& db = pattern.af_db;

    bool found = false;
    double level = pattern.floor_db;
    for (std::size_t i = 1; i + 1 < db.size(); ++i) {
        if (i >= lo && i <= hi)
            continue;
        if (db[i] > db[i - 1] && db[i] > db[i + 1]) {
            level = std::max(level, db[i]);
            found = true;
        }
    }
    if (!found)
        throw NoSideLobesError("side_lobe_level: no side lobes outside the main lobe");
    return level;
}

double null_depth(const RadiationPattern& pattern, double angle_deg)
{
    pattern.validate();
    require(angle_deg >= 0.0 && angle_deg <= 180.0, "null_depth: angle outside [0, 180]");

    const auto& theta = pattern.theta_deg;
    const auto it = std::lower_bound(theta.begin(), theta.end(), angle_deg);
    std::size_t idx = static_cast<std::size_t>(it - theta.begin());
    if (idx == theta.size())
        idx = theta.size() - 1;
    else if (idx > 0 && angle_deg - theta[idx - 1] <= theta[idx] - angle_deg)
        --idx;
    return pattern.af_db[idx];
}

} // namespace antsynth
