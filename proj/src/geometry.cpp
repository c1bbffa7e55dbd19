#include "polycc/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "polycc/errors.hpp"

namespace polycc {

void TwistedPairParams::validate() const {
    if (n_gon < 2) {
        throw std::invalid_argument("n_gon must be at least 2, got " +
                                    std::to_string(n_gon));
    }
    if (!(size_ratio > 0.0) || !std::isfinite(size_ratio)) {
        throw std::invalid_argument("size_ratio must be positive and finite");
    }
    if (!(mass_ratio > 0.0) || !std::isfinite(mass_ratio)) {
        throw std::invalid_argument("mass_ratio must be positive and finite");
    }
    if (!(layer_distance >= 0.0) || !std::isfinite(layer_distance)) {
        throw std::invalid_argument("layer_distance must be non-negative and finite");
    }
    if (!(base_mass > 0.0) || !std::isfinite(base_mass)) {
        throw std::invalid_argument("base_mass must be positive and finite");
    }
    if (!std::isfinite(twist)) {
        throw std::invalid_argument("twist must be finite");
    }
}

Configuration::Configuration(std::vector<PointMass> bodies)
    : bodies_(std::move(bodies)) {
    if (bodies_.empty()) {
        throw std::invalid_argument("configuration must contain at least one body");
    }
    for (const PointMass& b : bodies_) {
        if (!(b.mass > 0.0) || !std::isfinite(b.mass)) {
            throw std::invalid_argument("body masses must be positive and finite");
        }
        if (!std::isfinite(b.position.x) || !std::isfinite(b.position.y) ||
            !std::isfinite(b.position.z)) {
            throw std::invalid_argument("body positions must be finite");
        }
        total_mass_ += b.mass;
    }
    for (std::size_t j = 0; j < bodies_.size(); ++j) {
        for (std::size_t k = j + 1; k < bodies_.size(); ++k) {
            if ((bodies_[j].position - bodies_[k].position).norm2() == 0.0) {
                throw DegenerateConfigurationError(
                    "bodies " + std::to_string(j) + " and " + std::to_string(k) +
                    " coincide");
            }
        }
    }
}

Vec3 Configuration::centroid() const {
    Vec3 s;
    for (const PointMass& b : bodies_) {
        s = s + b.mass * b.position;
    }
    return s * (1.0 / total_mass_);
}

double vertex_angle(int n_gon, int j) {
    if (n_gon < 2) {
        throw std::invalid_argument("n_gon must be at least 2, got " +
                                    std::to_string(n_gon));
    }
    if (j < 1 || j > n_gon) {
        throw std::invalid_argument("vertex index " + std::to_string(j) +
                                    " out of range 1.." + std::to_string(n_gon));
    }
    return 2.0 * std::numbers::pi * j / n_gon;
}

Configuration build_configuration(const TwistedPairParams& params) {
    params.validate();
    const int n = params.n_gon;
    const double a = params.size_ratio;
    const double b = params.mass_ratio;
    const double h = params.layer_distance;
    const double m = params.base_mass;

    // Center of mass of the raw stack sits at height b h/(1+b); shift both
    // rings so it lands on the origin.
    const double z_lower = -b * h / (1.0 + b);
    const double z_upper = h / (1.0 + b);

    std::vector<PointMass> bodies;
    bodies.reserve(static_cast<std::size_t>(2 * n));
    for (int j = 1; j <= n; ++j) {
        const double angle = vertex_angle(n, j);
        bodies.push_back({{std::cos(angle), std::sin(angle), z_lower}, m});
    }
    for (int j = 1; j <= n; ++j) {
        const double angle = vertex_angle(n, j) + params.twist;
        bodies.push_back({{a * std::cos(angle), a * std::sin(angle), z_upper}, b * m});
    }

    for (std::size_t j = 0; j < bodies.size(); ++j) {
        for (std::size_t k = j + 1; k < bodies.size(); ++k) {
            const double d = (bodies[j].position - bodies[k].position).norm();
            if (d < kCoincidenceTol) {
                throw DegenerateConfigurationError(
                    "degenerate parameters: bodies " + std::to_string(j) + " and " +
                    std::to_string(k) + " are " + std::to_string(d) + " apart");
            }
        }
    }
    return Configuration(std::move(bodies));
}

}  // namespace polycc
