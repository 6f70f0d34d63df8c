#include "antsynth/array_model.hpp"
#include "antsynth/errors.hpp"
#include "antsynth/rng.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

using namespace antsynth;

namespace {

ArrayGeometry twenty_element()
{
    return ArrayGeometry::uniform(10, 0.5);
}

std::vector<double> random_amplitudes(std::size_t m, Rng& rng, double lo = 0.0, double hi = 1.0)
{
    std::vector<double> a(m);
    for (auto& v : a)
        v = lo + (hi - lo) * uniform01(rng);
    return a;
}

} // namespace

TEST_CASE("uniform geometry follows the (2n-1)s/2 layout")
{
    const auto g = twenty_element();
    REQUIRE(g.num_pairs == 10);
    CHECK(g.positions.front() == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(g.positions.back() == doctest::Approx(4.75).epsilon(1e-15));
    CHECK(g.wave_number == doctest::Approx(kTwoPi).epsilon(1e-15));
}

TEST_CASE("geometry validation rejects non-increasing positions")
{
    ArrayGeometry g;
    g.num_pairs = 2;
    g.positions = {0.5, 0.5};
    CHECK_THROWS_AS(g.validate(), InvalidInput);
    g.positions = {-0.1, 0.5};
    CHECK_THROWS_AS(g.validate(), InvalidInput);
}

TEST_CASE("broadside identity: AF(90) = 2 sum a(n)")
{
    const auto g = twenty_element();
    const auto e = Excitation::amplitude_only(std::vector<double>(10, 1.0));
    const auto af = array_factor(g, e, 90.0);
    CHECK(af.real() == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(af.imag() == doctest::Approx(0.0).epsilon(1e-12));

    Rng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const auto a = random_amplitudes(10, rng);
        double expected = 0.0;
        for (double v : a)
            expected += v;
        expected *= 2.0;
        const auto value = array_factor(g, Excitation::amplitude_only(a), 90.0);
        CHECK(std::abs(value) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("zero excitation gives a zero array factor")
{
    const auto g = twenty_element();
    const auto e = Excitation::amplitude_only(std::vector<double>(10, 0.0));
    CHECK(std::abs(array_factor(g, e, 37.5)) == 0.0);
}

TEST_CASE("dimension mismatch is rejected")
{
    const auto g = twenty_element();
    const auto e = Excitation::amplitude_only(std::vector<double>(7, 1.0));
    CHECK_THROWS_AS(array_factor(g, e, 10.0), InvalidInput);
    CHECK_THROWS_AS(compute_pattern(g, e), InvalidInput);
}

TEST_CASE("array factor matches the direct-summation reference at 80.26 degrees")
{
    const auto g = twenty_element();
    const std::vector<double> a(10, 1.0);
    const std::vector<double> phases(10, 0.0);
    const double impl = std::abs(array_factor(g, Excitation::amplitude_only(a), 80.26));
    const double ref = oracle::af_magnitude(g.positions, g.wave_number, a, phases, 80.26);
    CHECK(impl == doctest::Approx(ref).epsilon(0.005));
}

TEST_CASE("complex and real forms agree for zero phases")
{
    const auto g = twenty_element();
    Rng rng(7);
    const auto a = random_amplitudes(10, rng);
    for (double theta : {0.0, 12.25, 45.0, 80.26, 90.0, 133.75, 180.0}) {
        const double cos_theta = std::cos(theta * kPi / 180.0);
        double real_form = 0.0;
        for (std::size_t n = 0; n < a.size(); ++n)
            real_form += a[n] * std::cos(g.wave_number * g.positions[n] * cos_theta);
        real_form = std::abs(2.0 * real_form);
        const double mag = std::abs(array_factor(g, Excitation::amplitude_only(a), theta));
        CHECK(mag == doctest::Approx(real_form).epsilon(1e-12));
    }
}

TEST_CASE("uniform_grid rejects steps that do not divide 180")
{
    CHECK_THROWS_AS(uniform_grid(0.33), InvalidInput);
    CHECK_THROWS_AS(uniform_grid(-1.0), InvalidInput);
    const auto grid = uniform_grid(0.25);
    REQUIRE(grid.size() == 721);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() == 180.0);
    CHECK(grid[360] == 90.0);
}

TEST_CASE("compute_pattern invariants on the uniform array")
{
    const auto g = twenty_element();
    const auto e = Excitation::amplitude_only(std::vector<double>(10, 1.0));
    const auto p = compute_pattern(g, e);
    p.validate();

    CHECK(p.theta_deg[p.peak_index] == 90.0);
    CHECK(p.af_db[p.peak_index] == 0.0);

    // even symmetry about broadside
    const std::size_t n = p.theta_deg.size() - 1;
    for (std::size_t i = 0; i <= n; ++i)
        CHECK(std::abs(p.af_linear[i] - p.af_linear[n - i]) <= 1e-9);
}

TEST_CASE("pattern dB value matches the reference at 73 degrees")
{
    const auto g = twenty_element();
    const std::vector<double> a(10, 1.0);
    const auto p = compute_pattern(g, Excitation::amplitude_only(a));

    const auto it = std::find(p.theta_deg.begin(), p.theta_deg.end(), 73.0);
    REQUIRE(it != p.theta_deg.end());
    const auto idx = static_cast<std::size_t>(it - p.theta_deg.begin());
    const double ref = oracle::af_db(g.positions, g.wave_number, a, 73.0, p.floor_db);
    CHECK(std::abs(p.af_db[idx] - ref) <= 1e-9);
}

TEST_CASE("compute_pattern rejects all-zero excitation and bad floors")
{
    const auto g = twenty_element();
    CHECK_THROWS_AS(compute_pattern(g, Excitation::amplitude_only(std::vector<double>(10, 0.0))),
                    InvalidInput);
    CHECK_THROWS_AS(compute_pattern(g, Excitation::amplitude_only(std::vector<double>(10, 1.0)),
                                    0.25, 5.0),
                    InvalidInput);
}

TEST_CASE("normalized pattern is scale invariant in the amplitudes")
{
    const auto g = twenty_element();
    Rng rng(99);
    const auto a = random_amplitudes(10, rng, 0.2, 1.0);
    auto scaled = a;
    for (auto& v : scaled)
        v *= 0.37;
    const auto p1 = compute_pattern(g, Excitation::amplitude_only(a));
    const auto p2 = compute_pattern(g, Excitation::amplitude_only(scaled));
    for (std::size_t i = 0; i < p1.af_db.size(); ++i)
        CHECK(std::abs(p1.af_db[i] - p2.af_db[i]) <= 1e-12);
}

TEST_CASE("side lobe level of the uniform 20-element array")
{
    const auto g = twenty_element();
    const std::vector<double> a(10, 1.0);
    const auto p = compute_pattern(g, Excitation::amplitude_only(a));
    const double sll = side_lobe_level(p);

    CHECK(sll == doctest::Approx(-13.2).epsilon(0).scale(1).epsilon(0.03));
    CHECK(std::abs(sll - (-13.2)) <= 0.3);

    const auto scan = oracle::dense_scan(g.positions, g.wave_number, a);
    REQUIRE(scan.has_side_lobes);
    CHECK(std::abs(sll - scan.sll_db) <= 0.05);
}

TEST_CASE("two-element array has no side lobes")
{
    const auto g = ArrayGeometry::uniform(1, 0.5); // single pair at 0.25 wavelengths
    const auto p = compute_pattern(g, Excitation::amplitude_only({1.0}));
    CHECK_THROWS_AS(side_lobe_level(p), NoSideLobesError);
    const auto [lo, hi] = main_lobe_bounds(p);
    CHECK(lo == 0.0);
    CHECK(hi == 180.0);
}

TEST_CASE("SLL halves agree for a symmetric pattern")
{
    const auto g = twenty_element();
    Rng rng(5);
    const auto a = random_amplitudes(10, rng, 0.3, 1.0);
    const auto p = compute_pattern(g, Excitation::amplitude_only(a));
    const auto [lo, hi] = main_lobe_bound_indices(p);

    auto half_max = [&](std::size_t begin, std::size_t end) {
        double best = p.floor_db;
        bool found = false;
        for (std::size_t i = std::max<std::size_t>(begin, 1); i + 1 < p.af_db.size() && i < end;
             ++i) {
            if (i >= lo && i <= hi)
                continue;
            if (p.af_db[i] > p.af_db[i - 1] && p.af_db[i] > p.af_db[i + 1]) {
                best = std::max(best, p.af_db[i]);
                found = true;
            }
        }
        REQUIRE(found);
        return best;
    };
    const std::size_t mid = p.theta_deg.size() / 2;
    CHECK(half_max(0, mid) == doctest::Approx(half_max(mid, p.theta_deg.size())).epsilon(1e-9));
}

TEST_CASE("null depth clamps exact zeros to the floor")
{
    RadiationPattern p;
    p.theta_deg = {0.0, 60.0, 120.0, 180.0};
    p.af_linear = {1.0, 0.0, 0.5, 1.0};
    p.af_db = {0.0, -120.0, -6.0205999132796239, 0.0};
    p.peak_index = 0;
    p.floor_db = -120.0;

    CHECK(null_depth(p, 60.0) == -120.0);
    CHECK(null_depth(p, 0.0) == 0.0); // query at the peak
    CHECK_THROWS_AS(null_depth(p, 181.0), InvalidInput);
}

TEST_CASE("uniform array first null at 84.26 degrees is at least 40 dB down")
{
    const auto g = twenty_element();
    const auto p = compute_pattern(g, Excitation::amplitude_only(std::vector<double>(10, 1.0)));
    CHECK(null_depth(p, 84.26) <= -40.0);
    CHECK(null_depth(p, 90.0) == 0.0);
}

TEST_CASE("main lobe bounds sit at the first nulls of the uniform array")
{
    const auto g = twenty_element();
    const std::vector<double> a(10, 1.0);
    const auto p = compute_pattern(g, Excitation::amplitude_only(a));
    const auto [lo, hi] = main_lobe_bounds(p);

    // analytic first nulls at cos(theta) = +/- 1/10
    const double null_hi = std::acos(-0.1) * 180.0 / kPi;
    const double null_lo = std::acos(0.1) * 180.0 / kPi;
    CHECK(std::abs(lo - null_lo) <= 0.25);
    CHECK(std::abs(hi - null_hi) <= 0.25);

    // symmetric about broadside within a grid step
    CHECK(std::abs((lo + hi) / 2.0 - 90.0) <= 0.25);
}
