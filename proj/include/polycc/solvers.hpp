#pragma once

#include <functional>
#include <vector>

namespace polycc {

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

struct RootResult {
    double value = 0.0;
    double residual = 0.0;  // |f(value)|
    int iterations = 0;
    Bracket bracket;        // final enclosing interval
};

struct ThetaSample {
    double theta = 0.0;
    double f = 0.0;
};

/// Result of sampling the tangential sum f over one twist period [0, 2 pi/N).
struct ThetaScanReport {
    std::vector<ThetaSample> samples;  // strictly increasing in theta
    double min_positive = 0.0;         // min of f over the open (0, pi/N) grid
    std::vector<double> zeros_found;   // ascending, within [0, 2 pi/N)
};

struct SpatialPair {
    double mass_ratio = 0.0;
    double layer_distance = 0.0;
    RootResult root;  // root of the compatibility function in h
};

/// Bisection on a sign-change bracket. Stops when |f| <= tol or the bracket
/// width drops below tol * max(1, |value|); deterministic for identical
/// inputs.
RootResult find_root(const std::function<double(double)>& f, Bracket bracket,
                     double tol, int max_iter = 200);

/// The scalar balance g(h) = Sc(h) + S0(h) - A for equal rings
/// (a = b = 1); strictly decreasing for h > 0, so its positive root is
/// unique. At h = 0 it is the twist = pi/N inequality value.
double vertical_balance(int n_gon, double twist, double layer_distance);

/// Unique h > 0 with vertical_balance(n_gon, twist, h) = 0, for twist in
/// {0, pi/N}. Starts from [1e-3, 1] and doubles the upper end until the
/// sign change appears.
RootResult solve_h_equal(int n_gon, double twist, double tol = 1e-12);

/// Solves the two spatial relations for (b, h) at fixed size ratio and
/// twist in {0, pi/N}: eliminates b through b = (A - S0)/(a Sc), root-finds
/// the compatibility residual Sc^2 - (A - S0)(A/a^3 - S0) in h, then
/// recovers b. Throws NoSolutionError when the compatibility function has
/// no sign change on (0, 1e3], NoPhysicalSolutionError when every root
/// yields b <= 0.
SpatialPair solve_spatial_pair(int n_gon, double size_ratio, double twist,
                               double tol = 1e-12);

/// Samples f on a uniform grid over [0, 2 pi/N); degenerate sample points
/// (singular denominators, e.g. theta = 0 at a = 1, h = 0) are dropped
/// automatically. Zeros are collected from near-zero samples and from
/// sign changes between grid-adjacent samples, interpolated linearly.
ThetaScanReport scan_theta(int n_gon, double size_ratio, double layer_distance,
                           int grid_size);

/// Residual of the planar mass-ratio relation at twist 0, h = 0:
/// b (S0 - a Sc - A/a^3) - (S0 - Sc/a - A). Its roots in a are the nested
/// planar configurations for the given mass ratio.
double planar_mass_residual(int n_gon, double mass_ratio, double size_ratio);

/// All roots in a of planar_mass_residual: scans a log-uniform grid over
/// [0.01, 100] with the band |a - 1| < 0.01 excluded (the relation is
/// singular at a = 1), then refines every sign change.
std::vector<RootResult> scan_planar_a(int n_gon, double mass_ratio,
                                      int grid_size = 10000);

/// Left side of the strict inequality satisfied by the half-twisted ring
/// sums: Sc + S0 - A at a = 1, h = 0, twist = pi/N. Positive for every N,
/// which is what pins the h -> 0 limit of the balance above zero.
double check_zz_inequality(int n_gon);

}  // namespace polycc
