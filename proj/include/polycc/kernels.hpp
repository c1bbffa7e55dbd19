#pragma once

namespace polycc {

enum class KernelWeight { unit, cosine, sine };

/// One trigonometric ring sum: over the N vertex angles theta_j, accumulate
///
///     w(theta_j + twist) / (1 + a^2 - 2 a cos(theta_j + twist) + x)^p
///
/// with weight w in {1, cos, sin}. The shift x plays the role of h^2; the
/// exponent covers the force sums (p = 3/2), the potential sums (p = 1/2)
/// and the higher kernels (p = (2n+3)/2).
struct KernelQuery {
    int n_gon = 0;
    double size_ratio = 1.0;  // a
    double shift = 0.0;       // x >= 0
    double twist = 0.0;       // theta, radians
    KernelWeight weight = KernelWeight::unit;
    double exponent = 1.5;    // p > 0
};

/// Ring self-interaction constant A = (1/4) sum_{j=1}^{N-1} csc(pi j / N).
/// Equals (1/N) times the pairwise inverse-distance sum over the unit
/// polygon's vertices.
double csc_sum_A(int n_gon);

double kernel_sum(const KernelQuery& q);

/// Tangential sum f(theta): the sine-weighted kernel at p = 3/2, x = h^2.
/// Odd about theta = 0, periodic with period 2 pi / N, vanishes at
/// theta = pi/N, and is strictly positive on (0, pi/N).
double f_theta(int n_gon, double size_ratio, double layer_distance, double twist);

/// |LHS - RHS| of the three reflection identities relating the +theta and
/// -theta kernel sums (cosine and unit weights are even, sine is odd).
struct IdentityResiduals {
    double cosine = 0.0;
    double unit = 0.0;
    double sine = 0.0;

    double max() const;
};

IdentityResiduals check_identities(int n_gon, double size_ratio,
                                   double layer_distance, double twist);

}  // namespace polycc
