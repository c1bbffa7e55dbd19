#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace polycc {

/// Bodies closer than this are treated as coincident everywhere in the
/// library. Parameters are exact user inputs, so only analytically
/// degenerate points trigger it; the tolerance guards against inputs a few
/// ulps away from a collision.
inline constexpr double kCoincidenceTol = 1e-9;

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& r) const { return {x + r.x, y + r.y, z + r.z}; }
    Vec3 operator-(const Vec3& r) const { return {x - r.x, y - r.y, z - r.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

    double dot(const Vec3& r) const { return x * r.x + y * r.y + z * r.z; }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Two stacked regular N-gons: lower ring of N unit-mass bodies on the unit
/// circle, upper ring of N bodies of mass b*m on a circle of radius a,
/// lifted by h and rotated by the twist angle.
///
/// Units: G = 1, lower circumradius 1, base mass 1 by default; everything
/// downstream is dimensionless in these units.
struct TwistedPairParams {
    int n_gon = 0;               // N, vertices per ring
    double size_ratio = 1.0;     // a: upper radius / lower radius
    double mass_ratio = 1.0;     // b: upper body mass / lower body mass
    double layer_distance = 0.0; // h >= 0, vertical separation
    double twist = 0.0;          // theta, radians
    double base_mass = 1.0;      // m, mass of each lower-ring body

    /// Range checks only; body coincidence is detected geometrically by
    /// build_configuration.
    void validate() const;
};

struct PointMass {
    Vec3 position;
    double mass = 1.0;
};

/// Ordered body list: indices 0..N-1 are the lower ring, N..2N-1 the upper
/// ring. Built configurations have the mass-weighted centroid at the origin
/// and all pairwise distances strictly positive.
class Configuration {
public:
    explicit Configuration(std::vector<PointMass> bodies);

    const std::vector<PointMass>& bodies() const { return bodies_; }
    std::size_t size() const { return bodies_.size(); }
    double total_mass() const { return total_mass_; }

    /// Mass-weighted position sum divided by total mass.
    Vec3 centroid() const;

private:
    std::vector<PointMass> bodies_;
    double total_mass_ = 0.0;
};

/// Angle of vertex j in a regular n_gon, 2*pi*j/n for j = 1..n (so j = n is
/// the vertex at angle 0, one full turn around).
double vertex_angle(int n_gon, int j);

/// Explicit 2N bodies for the given parameters, recentered so the center of
/// mass sits at the origin: lower ring at height -b h/(1+b), upper ring at
/// h/(1+b).
Configuration build_configuration(const TwistedPairParams& params);

}  // namespace polycc
