#pragma once

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace antsynth {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kDefaultGridStepDeg = 0.25;
inline constexpr double kDefaultFloorDb = -120.0;

/// Geometry of a symmetric 2M-element linear array. Element n of the
/// optimized half sits at positions[n] wavelengths from the array centre and
/// is mirrored on the other side, so the array factor reduces to a cosine sum
/// over M terms. With positions in wavelengths the wave number is 2*pi.
struct ArrayGeometry {
    std::size_t num_pairs = 0;          ///< M
    std::vector<double> positions;      ///< strictly increasing, all > 0
    double wave_number = kTwoPi;        ///< rad per wavelength

    /// Uniform layout with element spacing s: d(n) = (2n - 1) * s / 2.
    static ArrayGeometry uniform(std::size_t num_pairs, double spacing_wavelengths);

    void validate() const; // throws InvalidInput
};

/// Per-pair complex feed coefficients. Phases default to zero; only the
/// amplitudes are searched.
struct Excitation {
    std::vector<double> amplitudes;     ///< in [0, 1]
    std::vector<double> phases;         ///< radians

    static Excitation amplitude_only(std::vector<double> amplitudes);
};

/// |AF| sampled on a uniform degree grid over [0, 180], with a dB view
/// normalized to the pattern peak and clamped at floor_db.
struct RadiationPattern {
    std::vector<double> theta_deg;
    std::vector<double> af_linear;
    std::vector<double> af_db;
    std::size_t peak_index = 0;
    double floor_db = kDefaultFloorDb;

    void validate() const; // throws InvalidInput
};

/// Uniform grid 0..180 degrees inclusive. step_deg must divide 180 evenly.
std::vector<double> uniform_grid(double step_deg);

/// Complex array factor AF(theta) = 2 * sum a(n) e^{j phi(n)} cos(beta d(n) cos theta).
std::complex<double> array_factor(const ArrayGeometry& geometry,
                                  const Excitation& excitation,
                                  double theta_deg);

RadiationPattern compute_pattern(const ArrayGeometry& geometry,
                                 const Excitation& excitation,
                                 double grid_step_deg = kDefaultGridStepDeg,
                                 double floor_db = kDefaultFloorDb);

/// Largest strict local maximum of af_db outside the main lobe.
/// Throws NoSideLobesError when the pattern has no secondary lobe.
double side_lobe_level(const RadiationPattern& pattern);

/// af_db at the grid point nearest to angle_deg.
double null_depth(const RadiationPattern& pattern, double angle_deg);

/// Nearest af_db local minima on either side of the peak; grid boundaries
/// when a side decreases monotonically.
std::pair<double, double> main_lobe_bounds(const RadiationPattern& pattern);
std::pair<std::size_t, std::size_t> main_lobe_bound_indices(const RadiationPattern& pattern);

namespace detail {

/// cos(beta * d(n) * cos(theta_i)) table, row-major [grid point][pair].
std::vector<double> cosine_basis(const ArrayGeometry& geometry,
                                 const std::vector<double>& theta_deg);

/// Zero-phase pattern evaluation against a precomputed basis. out.theta_deg
/// must already be set; fills af_linear/af_db/peak_index/floor_db.
void pattern_from_basis(const std::vector<double>& basis,
                        std::size_t num_pairs,
                        const std::vector<double>& amplitudes,
                        double floor_db,
                        RadiationPattern& out);

} // namespace detail

} // namespace antsynth
