#pragma once

#include <utility>

#include "polycc/geometry.hpp"

namespace polycc {

/// Scalar residuals of the reduced ring equations at a given parameter
/// point. The pair is central iff all four vanish. Radial residuals are
/// reported relative to mu so a single tolerance works across N; the
/// tangential and vertical ones are homogeneous sums and stay absolute.
struct ReducedResiduals {
    double radial_lower = 0.0;
    double radial_upper = 0.0;
    double tangential = 0.0;
    double vertical = 0.0;
    double mu = 0.0;  // lambda / m, always positive for valid parameters

    /// Largest magnitude among the four equation residuals (mu excluded).
    double max_residual() const;
};

/// mu = lambda/m from the closed form
/// [(1 + b^2/a) A + b S_{1/2}] / (1 + b a^2 + b h^2/(1+b)),
/// where S_{1/2} is the unit kernel sum at exponent 1/2. For central
/// parameters this matches the oracle's lambda (with m = base_mass).
double mu_of(const TwistedPairParams& params);

/// Residuals of the full reduced system: both radial balances, the
/// tangential sum, and the vertical balance h*(S0 - mu/(1+b)).
ReducedResiduals residuals_general(const TwistedPairParams& params);

/// Planar specialization; requires layer_distance == 0. The vertical
/// residual is identically zero.
ReducedResiduals residuals_planar(const TwistedPairParams& params);

/// Spatial specialization with mu/(1+b) eliminated through the vertical
/// equation; requires layer_distance > 0.
ReducedResiduals residuals_spatial(const TwistedPairParams& params);

/// Reduces a twist into the fundamental period [0, 2 pi/N) and matches it
/// against the two admissible values {0, pi/N} (within 1e-12); anything
/// else is rejected with std::invalid_argument.
double canonical_half_twist(int n_gon, double twist);

/// Mass ratio solving the planar relation
///   b [S0 - a Sc - A/a^3] = S0 - Sc/a - A
/// at h = 0 and twist in {0, pi/N}. For a = 1 the relation degenerates and
/// b = 1 is returned directly (only valid off the collision point, i.e. for
/// twist = pi/N).
double cor110_planar_b(int n_gon, double size_ratio, double twist);

/// Residuals of the two spatial relations
///   b a Sc = A - S0      and      b a (A/a^3 - S0) = Sc
/// at twist in {0, pi/N}, h > 0. Both vanish iff the parameters are central.
std::pair<double, double> cor110_spatial_relations(const TwistedPairParams& params);

}  // namespace polycc
