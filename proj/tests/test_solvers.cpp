#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polycc/errors.hpp"
#include "polycc/geometry.hpp"
#include "polycc/kernels.hpp"
#include "polycc/oracle.hpp"
#include "polycc/reduced.hpp"
#include "polycc/solvers.hpp"

using namespace polycc;

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);
}  // namespace

TEST_CASE("find_root basics") {
    const auto f = [](double x) { return x * x - 2.0; };
    const RootResult r = find_root(f, {1.0, 2.0}, 1e-12);
    CHECK(std::abs(r.value - kSqrt2) < 1e-12);
    CHECK(r.residual <= 1e-12);
    CHECK(r.value >= r.bracket.lo);
    CHECK(r.value <= r.bracket.hi);

    CHECK_THROWS_AS(find_root([](double x) { return x - 5.0; }, {0.0, 1.0}, 1e-12),
                    BracketError);
    CHECK_THROWS_AS(find_root([](double x) { return x - 0.1234567; }, {0.0, 1.0},
                              1e-15, 3),
                    ConvergenceError);
    CHECK_THROWS_AS(find_root(f, {2.0, 1.0}, 1e-12), std::invalid_argument);
    CHECK_THROWS_AS(find_root(f, {1.0, 2.0}, 0.0), std::invalid_argument);
}

TEST_CASE("find_root on the equal-ring balance") {
    const auto g = [](double h) { return vertical_balance(2, 0.0, h); };
    const RootResult r = find_root(g, {0.1, 10.0}, 1e-12);
    CHECK(std::abs(r.value - 2.0) < 1e-10);
}

TEST_CASE("find_root is deterministic") {
    const auto f = [](double x) { return std::cos(x) - x; };
    const RootResult a = find_root(f, {0.0, 1.0}, 1e-13);
    const RootResult b = find_root(f, {0.0, 1.0}, 1e-13);
    CHECK(a.value == b.value);
    CHECK(a.residual == b.residual);
    CHECK(a.iterations == b.iterations);
    CHECK(a.bracket.lo == b.bracket.lo);
    CHECK(a.bracket.hi == b.bracket.hi);
}

TEST_CASE("solve_h_equal closed forms for the 2-gon") {
    // twist 0: balance reduces to 2/h^3 - 1/4, root at h = 2 (planar square)
    const RootResult prism = solve_h_equal(2, 0.0);
    CHECK(std::abs(prism.value - 2.0) < 1e-10);
    // half twist: balance reduces to 2/(2+h^2)^{3/2} - 1/4, root at sqrt(2)
    // (regular tetrahedron with edge 2)
    const RootResult tetra = solve_h_equal(2, kPi / 2.0);
    CHECK(std::abs(tetra.value - kSqrt2) < 1e-10);

    CHECK_THROWS_AS(solve_h_equal(2, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(solve_h_equal(1, 0.0), std::invalid_argument);
}

TEST_CASE("solve_h_equal roots pass the oracle and are unique") {
    for (int n = 2; n <= 8; ++n) {
        for (double twist : {0.0, kPi / n}) {
            const RootResult r = solve_h_equal(n, twist);
            CHECK(r.residual <= 1e-10);
            // strict decrease brackets the root from both sides
            CHECK(vertical_balance(n, twist, r.value / 2.0) > 0.0);
            CHECK(vertical_balance(n, twist, 2.0 * r.value) < 0.0);
            const Configuration c =
                build_configuration({n, 1.0, 1.0, r.value, twist, 1.0});
            CHECK(central_residual(c).max_relative < 1e-9);
        }
    }
}

TEST_CASE("solve_spatial_pair reproduces the equal-ring roots at a = 1") {
    for (int n = 2; n <= 6; ++n) {
        for (double twist : {0.0, kPi / n}) {
            const SpatialPair pair = solve_spatial_pair(n, 1.0, twist);
            const RootResult direct = solve_h_equal(n, twist);
            CHECK(std::abs(pair.mass_ratio - 1.0) < 1e-9);
            CHECK(std::abs(pair.layer_distance - direct.value) < 1e-9);
        }
    }
}

TEST_CASE("solve_spatial_pair regression fixture away from a = 1") {
    // frozen on first solve; verified against the oracle below
    const SpatialPair pair = solve_spatial_pair(3, 1.2, kPi / 3.0);
    CHECK(pair.mass_ratio == doctest::Approx(2.7403031003428637).epsilon(1e-9));
    CHECK(pair.layer_distance == doctest::Approx(1.6282558873062301).epsilon(1e-9));

    const TwistedPairParams p{3, 1.2, pair.mass_ratio, pair.layer_distance,
                              kPi / 3.0, 1.0};
    CHECK(residuals_spatial(p).max_residual() < 1e-10);
    CHECK(central_residual(build_configuration(p)).max_relative < 1e-8);
    CHECK_THROWS_AS(solve_spatial_pair(3, 1.2, 0.5), std::invalid_argument);
}

TEST_CASE("solve_spatial_pair: half-twisted 2-gon exists only at a = 1") {
    // the cosine sum vanishes termwise, so unequal radii admit no spatial
    // pair; at a = 1 the root is the regular tetrahedron
    CHECK_THROWS_AS(solve_spatial_pair(2, 1.2, kPi / 2.0), NoSolutionError);
    CHECK_THROWS_AS(solve_spatial_pair(2, 0.8, kPi / 2.0), NoSolutionError);
    const SpatialPair tetra = solve_spatial_pair(2, 1.0, kPi / 2.0);
    CHECK(tetra.mass_ratio == 1.0);
    CHECK(std::abs(tetra.layer_distance - kSqrt2) < 1e-10);
}

TEST_CASE("scan_theta finds zeros only at 0 and pi/N") {
    const ThetaScanReport r = scan_theta(5, 0.7, 1.3, 1000);
    REQUIRE(r.zeros_found.size() == 2);
    CHECK(std::abs(r.zeros_found[0]) < 2.0 * kPi / 5.0 / 1000);
    CHECK(std::abs(r.zeros_found[1] - kPi / 5.0) < 2.0 * kPi / 5.0 / 1000);
    CHECK(r.min_positive > 0.0);
    for (std::size_t i = 1; i < r.samples.size(); ++i) {
        CHECK(r.samples[i].theta > r.samples[i - 1].theta);
    }
}

TEST_CASE("scan_theta drops the collision sample on the same circle") {
    const ThetaScanReport r = scan_theta(2, 1.0, 0.0, 500);
    CHECK(r.samples.size() == 499);  // theta = 0 excluded
    REQUIRE(r.zeros_found.size() == 1);
    CHECK(std::abs(r.zeros_found[0] - kPi / 2.0) < 2.0 * kPi / 2.0 / 500);
    CHECK(r.min_positive > 0.0);
}

TEST_CASE("tangential sum is antisymmetric about pi/N") {
    for (double delta : {0.01, 0.1, 0.3}) {
        const double plus = f_theta(3, 2.0, 0.5, kPi / 3.0 + delta);
        const double minus = f_theta(3, 2.0, 0.5, kPi / 3.0 - delta);
        CHECK(std::abs(plus + minus) < 1e-10);
    }
}

TEST_CASE("scan_theta zero set is stable under grid refinement") {
    for (int grid : {250, 500, 1000, 2000}) {
        const ThetaScanReport r = scan_theta(4, 1.6, 0.8, grid);
        const double period = 2.0 * kPi / 4.0;
        const double cell = period / grid;
        for (double z : r.zeros_found) {
            const double d0 = std::min(z, period - z);
            const double dh = std::abs(z - kPi / 4.0);
            CHECK(std::min(d0, dh) < 1.5 * cell);
        }
    }
}

TEST_CASE("scan_theta validates the grid") {
    CHECK_THROWS_AS(scan_theta(4, 1.0, 1.0, 8), std::invalid_argument);
}

TEST_CASE("scan_planar_a finds the two nested rings") {
    for (double b : {0.5, 1.0, 2.0}) {
        const auto roots = scan_planar_a(3, b);
        REQUIRE(roots.size() == 2);
        CHECK(roots[0].value < 1.0);
        CHECK(roots[1].value > 1.0);
        for (const RootResult& r : roots) {
            CHECK(std::abs(planar_mass_residual(3, b, r.value)) < 1e-10);
            const Configuration c =
                build_configuration({3, r.value, b, 0.0, 0.0, 1.0});
            CHECK(central_residual(c).max_relative < 1e-8);
        }
    }
    // equal masses: the two rings are mirror images under inversion
    const auto equal = scan_planar_a(2, 1.0);
    REQUIRE(equal.size() == 2);
    CHECK(std::abs(equal[1].value - 1.0 / equal[0].value) < 1e-8);
}

TEST_CASE("scan_planar_a round-trips the mass ratio") {
    const auto roots = scan_planar_a(4, 2.0);
    REQUIRE(roots.size() == 2);
    for (const RootResult& r : roots) {
        CHECK(cor110_planar_b(4, r.value, 0.0) == doctest::Approx(2.0).epsilon(1e-8));
    }
}

TEST_CASE("half-twist inequality value") {
    CHECK(std::abs(check_zz_inequality(2) - (1.0 / kSqrt2 - 0.25)) < 1e-12);
    for (int n = 2; n <= 50; ++n) {
        CHECK(check_zz_inequality(n) > 0.0);
    }
}
