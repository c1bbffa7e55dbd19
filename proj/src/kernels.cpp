#include "polycc/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "polycc/errors.hpp"
#include "polycc/geometry.hpp"
#include "polycc/kahan.hpp"

namespace polycc {

namespace {

// 1 + a^2 - 2 a cos(phi) + x in the chord-stable form
// (1 - a)^2 + 4 a sin^2(phi/2) + x, which does not cancel near phi = 0 mod 2 pi.
double kernel_denominator(double a, double phi, double x) {
    const double s = std::sin(0.5 * phi);
    const double one_minus_a = 1.0 - a;
    return one_minus_a * one_minus_a + 4.0 * a * s * s + x;
}

void validate_query(const KernelQuery& q) {
    if (q.n_gon < 2) {
        throw std::invalid_argument("kernel_sum: n_gon must be at least 2");
    }
    if (!(q.size_ratio > 0.0) || !std::isfinite(q.size_ratio)) {
        throw std::invalid_argument("kernel_sum: size_ratio must be positive");
    }
    if (!(q.shift >= 0.0) || !std::isfinite(q.shift)) {
        throw std::invalid_argument("kernel_sum: shift must be non-negative");
    }
    if (!(q.exponent > 0.0) || !std::isfinite(q.exponent)) {
        throw std::invalid_argument("kernel_sum: exponent must be positive");
    }
    if (!std::isfinite(q.twist)) {
        throw std::invalid_argument("kernel_sum: twist must be finite");
    }
}

}  // namespace

double csc_sum_A(int n_gon) {
    if (n_gon < 2) {
        throw std::invalid_argument("csc_sum_A: n_gon must be at least 2");
    }
    KahanSum s;
    for (int j = 1; j < n_gon; ++j) {
        s += 1.0 / std::sin(std::numbers::pi * j / n_gon);
    }
    return 0.25 * s.get();
}

double kernel_sum(const KernelQuery& q) {
    validate_query(q);
    // The denominator is the squared body distance plus the shift; below the
    // coincidence scale the sum is considered singular.
    const double singular = kCoincidenceTol * kCoincidenceTol;
    KahanSum acc;
    for (int j = 1; j <= q.n_gon; ++j) {
        const double phi = vertex_angle(q.n_gon, j) + q.twist;
        const double d = kernel_denominator(q.size_ratio, phi, q.shift);
        if (d < singular) {
            throw DegenerateConfigurationError(
                "kernel_sum: singular denominator at vertex " + std::to_string(j));
        }
        double w = 1.0;
        switch (q.weight) {
            case KernelWeight::cosine: w = std::cos(phi); break;
            case KernelWeight::sine: w = std::sin(phi); break;
            case KernelWeight::unit: break;
        }
        acc += w * std::pow(d, -q.exponent);
    }
    return acc.get();
}

double f_theta(int n_gon, double size_ratio, double layer_distance, double twist) {
    return kernel_sum({n_gon, size_ratio, layer_distance * layer_distance, twist,
                       KernelWeight::sine, 1.5});
}

double IdentityResiduals::max() const {
    return std::max({cosine, unit, sine});
}

IdentityResiduals check_identities(int n_gon, double size_ratio,
                                   double layer_distance, double twist) {
    const double x = layer_distance * layer_distance;
    const auto sum = [&](KernelWeight w, double t) {
        return kernel_sum({n_gon, size_ratio, x, t, w, 1.5});
    };
    IdentityResiduals r;
    r.cosine = std::abs(sum(KernelWeight::cosine, twist) -
                        sum(KernelWeight::cosine, -twist));
    r.unit = std::abs(sum(KernelWeight::unit, twist) -
                      sum(KernelWeight::unit, -twist));
    r.sine = std::abs(sum(KernelWeight::sine, twist) +
                      sum(KernelWeight::sine, -twist));
    return r;
}

}  // namespace polycc
