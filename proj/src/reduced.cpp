#include "polycc/reduced.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polycc/errors.hpp"
#include "polycc/kernels.hpp"

namespace polycc {

namespace {

struct ForceSums {
    double unit = 0.0;    // S0
    double cosine = 0.0;  // Sc
    double sine = 0.0;    // Ss, the tangential sum
};

// The three kernel sums at exponent 3/2 that the reduced equations combine.
ForceSums p32_sums(int n_gon, double a, double x, double twist) {
    ForceSums s;
    s.unit = kernel_sum({n_gon, a, x, twist, KernelWeight::unit, 1.5});
    s.cosine = kernel_sum({n_gon, a, x, twist, KernelWeight::cosine, 1.5});
    s.sine = kernel_sum({n_gon, a, x, twist, KernelWeight::sine, 1.5});
    return s;
}

}  // namespace

double canonical_half_twist(int n_gon, double twist) {
    const double period = 2.0 * std::numbers::pi / n_gon;
    double r = std::fmod(twist, period);
    if (r < 0.0) r += period;
    const double half = std::numbers::pi / n_gon;
    if (std::min(r, period - r) <= 1e-12) return 0.0;
    if (std::abs(r - half) <= 1e-12) return half;
    throw std::invalid_argument("twist must be 0 or pi/N (mod 2 pi/N)");
}

double ReducedResiduals::max_residual() const {
    return std::max({std::abs(radial_lower), std::abs(radial_upper),
                     std::abs(tangential), std::abs(vertical)});
}

double mu_of(const TwistedPairParams& params) {
    params.validate();
    const double a = params.size_ratio;
    const double b = params.mass_ratio;
    const double h = params.layer_distance;
    const double A = csc_sum_A(params.n_gon);
    const double soft = kernel_sum(
        {params.n_gon, a, h * h, params.twist, KernelWeight::unit, 0.5});
    return ((1.0 + b * b / a) * A + b * soft) /
           (1.0 + b * a * a + b * h * h / (1.0 + b));
}

ReducedResiduals residuals_general(const TwistedPairParams& params) {
    params.validate();
    const double a = params.size_ratio;
    const double b = params.mass_ratio;
    const double h = params.layer_distance;
    const double A = csc_sum_A(params.n_gon);
    const ForceSums s = p32_sums(params.n_gon, a, h * h, params.twist);
    const double mu = mu_of(params);

    // sum (1 - a cos)/D^{3/2} = S0 - a Sc, and with 1/a for the upper ring.
    ReducedResiduals r;
    r.mu = mu;
    r.radial_lower = (A + b * (s.unit - a * s.cosine) - mu) / mu;
    r.radial_upper =
        ((b / (a * a * a)) * A + (s.unit - s.cosine / a) - mu) / mu;
    r.tangential = s.sine;
    r.vertical = h * s.unit - mu * h / (1.0 + b);
    return r;
}

ReducedResiduals residuals_planar(const TwistedPairParams& params) {
    if (params.layer_distance != 0.0) {
        throw std::invalid_argument("residuals_planar requires layer_distance == 0");
    }
    ReducedResiduals r = residuals_general(params);
    r.vertical = 0.0;
    return r;
}

ReducedResiduals residuals_spatial(const TwistedPairParams& params) {
    if (!(params.layer_distance > 0.0)) {
        throw std::invalid_argument("residuals_spatial requires layer_distance > 0");
    }
    params.validate();
    const double a = params.size_ratio;
    const double b = params.mass_ratio;
    const double h = params.layer_distance;
    const double A = csc_sum_A(params.n_gon);
    const ForceSums s = p32_sums(params.n_gon, a, h * h, params.twist);
    const double mu = mu_of(params);
    const double mu_share = mu / (1.0 + b);

    // Each radial equation is normalized by its own mu side (mu/(1+b) and
    // b mu/(1+b)); a single mu normalization would suppress violations by
    // 1/b when the mass ratio is extreme.
    ReducedResiduals r;
    r.mu = mu;
    r.radial_lower = (A - a * b * s.cosine - mu_share) / mu_share;
    r.radial_upper =
        ((b / (a * a * a)) * A - s.cosine / a - b * mu_share) / (b * mu_share);
    r.tangential = s.sine;
    r.vertical = s.unit - mu_share;
    return r;
}

double cor110_planar_b(int n_gon, double size_ratio, double twist) {
    if (n_gon < 2) {
        throw std::invalid_argument("cor110_planar_b: n_gon must be at least 2");
    }
    if (!(size_ratio > 0.0) || !std::isfinite(size_ratio)) {
        throw std::invalid_argument("cor110_planar_b: size_ratio must be positive");
    }
    const double a = size_ratio;
    const double t = canonical_half_twist(n_gon, twist);
    if (std::abs(a - 1.0) <= 1e-12) {
        // Equal radii force b = 1; at twist 0 the rings coincide outright.
        if (t == 0.0) {
            throw DegenerateConfigurationError(
                "cor110_planar_b: a = 1 with twist 0 makes the rings coincide");
        }
        return 1.0;
    }
    const double A = csc_sum_A(n_gon);
    const double s0 = kernel_sum({n_gon, a, 0.0, t, KernelWeight::unit, 1.5});
    const double sc = kernel_sum({n_gon, a, 0.0, t, KernelWeight::cosine, 1.5});
    const double coeff = (s0 - a * sc) - A / (a * a * a);
    const double rhs = (s0 - sc / a) - A;
    const double scale = std::abs(s0) + std::abs(a * sc) + A / (a * a * a);
    if (std::abs(coeff) < 1e-13 * scale) {
        throw NoSolutionError(
            "cor110_planar_b: coefficient vanishes, no mass ratio solves the relation");
    }
    const double b = rhs / coeff;
    if (!(b > 0.0)) {
        throw NoPhysicalSolutionError(
            "cor110_planar_b: relation yields non-positive mass ratio");
    }
    return b;
}

std::pair<double, double> cor110_spatial_relations(const TwistedPairParams& params) {
    params.validate();
    if (!(params.layer_distance > 0.0)) {
        throw std::invalid_argument(
            "cor110_spatial_relations requires layer_distance > 0");
    }
    const double t = canonical_half_twist(params.n_gon, params.twist);
    const double a = params.size_ratio;
    const double b = params.mass_ratio;
    const double h = params.layer_distance;
    const double A = csc_sum_A(params.n_gon);
    const double s0 = kernel_sum({params.n_gon, a, h * h, t, KernelWeight::unit, 1.5});
    const double sc =
        kernel_sum({params.n_gon, a, h * h, t, KernelWeight::cosine, 1.5});
    return {b * a * sc - (A - s0), b * a * (A / (a * a * a) - s0) - sc};
}

}  // namespace polycc
