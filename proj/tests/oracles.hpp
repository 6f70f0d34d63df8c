#pragma once

// Test-only reference implementations. Each one recomputes a quantity from
// its defining formula, independently of the library code paths it checks:
// long-double direct summation for the array factor, dense-grid scans for
// lobe structure, and midpoint-rule quadrature for the violation integral.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

inline constexpr long double kPiL = 3.14159265358979323846264338327950288L;

/// |AF(theta)| by direct term-by-term summation at long double precision.
inline double af_magnitude(const std::vector<double>& positions,
                           double wave_number,
                           const std::vector<double>& amplitudes,
                           const std::vector<double>& phases,
                           double theta_deg)
{
    const long double cos_theta = std::cos(static_cast<long double>(theta_deg) * kPiL / 180.0L);
    long double re = 0.0L;
    long double im = 0.0L;
    for (std::size_t n = 0; n < positions.size(); ++n) {
        const long double arg =
            static_cast<long double>(wave_number) * positions[n] * cos_theta;
        const long double term = std::cos(arg);
        re += static_cast<long double>(amplitudes[n]) * std::cos((long double)phases[n]) * term;
        im += static_cast<long double>(amplitudes[n]) * std::sin((long double)phases[n]) * term;
    }
    return static_cast<double>(2.0L * std::sqrt(re * re + im * im));
}

/// Normalized dB value at theta, referenced to the exact broadside peak of a
/// zero-phase non-negative pattern.
inline double af_db(const std::vector<double>& positions,
                    double wave_number,
                    const std::vector<double>& amplitudes,
                    double theta_deg,
                    double floor_db)
{
    const std::vector<double> zero_phases(amplitudes.size(), 0.0);
    const double peak = af_magnitude(positions, wave_number, amplitudes, zero_phases, 90.0);
    const double lin = af_magnitude(positions, wave_number, amplitudes, zero_phases, theta_deg);
    if (lin <= 0.0)
        return floor_db;
    return std::max(floor_db, 20.0 * std::log10(lin / peak));
}

struct DenseScan {
    double sll_db = 0.0;
    bool has_side_lobes = false;
    double first_null_low_deg = 0.0;
    double first_null_high_deg = 0.0;
};

/// Brute-force lobe structure on a dense grid (default 0.01 degrees).
inline DenseScan dense_scan(const std::vector<double>& positions,
                            double wave_number,
                            const std::vector<double>& amplitudes,
                            double step_deg = 0.01,
                            double floor_db = -120.0)
{
    const auto n = static_cast<std::size_t>(std::llround(180.0 / step_deg));
    std::vector<double> db(n + 1);
    std::size_t peak = 0;
    for (std::size_t i = 0; i <= n; ++i) {
        const double theta = 180.0 * static_cast<double>(i) / static_cast<double>(n);
        db[i] = af_db(positions, wave_number, amplitudes, theta, floor_db);
        if (db[i] > db[peak])
            peak = i;
    }

    std::size_t lo = peak;
    while (lo > 0 && db[lo - 1] < db[lo])
        --lo;
    std::size_t hi = peak;
    while (hi + 1 <= n && db[hi + 1] < db[hi])
        ++hi;

    DenseScan scan;
    scan.first_null_low_deg = 180.0 * static_cast<double>(lo) / static_cast<double>(n);
    scan.first_null_high_deg = 180.0 * static_cast<double>(hi) / static_cast<double>(n);
    for (std::size_t i = 1; i + 1 <= n; ++i) {
        if (i >= lo && i <= hi)
            continue;
        if (db[i] > db[i - 1] && db[i] > db[i + 1]) {
            if (!scan.has_side_lobes || db[i] > scan.sll_db)
                scan.sll_db = db[i];
            scan.has_side_lobes = true;
        }
    }
    return scan;
}

/// Midpoint-rule integral of max(0, af_db(theta) - mask_db(theta)) over
/// [0, 180] at fine resolution.
inline double violation_integral(const std::function<double(double)>& af_db_fn,
                                 const std::function<double(double)>& mask_db_fn,
                                 double step_deg = 0.01)
{
    const auto cells = static_cast<std::size_t>(std::llround(180.0 / step_deg));
    const double h = 180.0 / static_cast<double>(cells);
    double sum = 0.0;
    for (std::size_t i = 0; i < cells; ++i) {
        const double theta = (static_cast<double>(i) + 0.5) * h;
        sum += std::max(0.0, af_db_fn(theta) - mask_db_fn(theta));
    }
    return sum * h;
}

} // namespace oracle
