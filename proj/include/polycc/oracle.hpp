#pragma once

#include <vector>

#include "polycc/geometry.hpp"

namespace polycc {

/// Per-body residuals of the defining force balance
///
///     sum_{j != k} m_j m_k (q_j - q_k)/|q_j - q_k|^3 + lambda m_k q_k = 0
///
/// with lambda = U/I. max_relative normalizes each |R_k| by the centripetal
/// term lambda m_k |q_k| (plus a 1e-300 guard) so verdicts are scale-free in
/// both length and mass.
struct ResidualReport {
    double lambda = 0.0;
    std::vector<Vec3> per_body;
    double max_relative = 0.0;
};

/// Pairwise potential sum_{j<k} m_j m_k / |q_j - q_k|.
double potential_U(const Configuration& config);

/// Moment of inertia sum_k m_k |q_k|^2 about the origin (= center of mass).
double moment_I(const Configuration& config);

/// The multiplier lambda = U/I.
double lambda_of(const Configuration& config);

/// Direct evaluation of the force balance; requires the centroid at the
/// origin (norm <= 1e-9). A configuration is central iff max_relative is at
/// numerical-noise level.
ResidualReport central_residual(const Configuration& config);

/// True iff central_residual(config).max_relative < tol; tol must lie in (0, 1).
bool is_central(const Configuration& config, double tol);

}  // namespace polycc
