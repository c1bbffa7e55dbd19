#include "polycc/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "polycc/errors.hpp"
#include "polycc/geometry.hpp"
#include "polycc/kernels.hpp"
#include "polycc/reduced.hpp"

namespace polycc {

namespace {

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

RootResult find_root(const std::function<double(double)>& f, Bracket bracket,
                     double tol, int max_iter) {
    if (!(bracket.lo < bracket.hi)) {
        throw std::invalid_argument("find_root: bracket must satisfy lo < hi");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("find_root: tol must be positive");
    }
    double lo = bracket.lo;
    double hi = bracket.hi;
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return {lo, 0.0, 0, {lo, hi}};
    if (fhi == 0.0) return {hi, 0.0, 0, {lo, hi}};
    if (sign_of(flo) == sign_of(fhi)) {
        throw BracketError("find_root: no sign change across [" +
                           std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    for (int i = 1; i <= max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        const bool converged = std::abs(fmid) <= tol ||
                               (hi - lo) <= tol * std::max(1.0, std::abs(mid));
        if (converged || mid == lo || mid == hi) {
            return {mid, std::abs(fmid), i, {lo, hi}};
        }
        if (sign_of(fmid) == sign_of(flo)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
    }
    throw ConvergenceError("find_root: exceeded " + std::to_string(max_iter) +
                           " iterations");
}

double vertical_balance(int n_gon, double twist, double layer_distance) {
    const double x = layer_distance * layer_distance;
    const double sc = kernel_sum({n_gon, 1.0, x, twist, KernelWeight::cosine, 1.5});
    const double s0 = kernel_sum({n_gon, 1.0, x, twist, KernelWeight::unit, 1.5});
    return sc + s0 - csc_sum_A(n_gon);
}

RootResult solve_h_equal(int n_gon, double twist, double tol) {
    if (n_gon < 2) {
        throw std::invalid_argument("solve_h_equal: n_gon must be at least 2");
    }
    const double t = canonical_half_twist(n_gon, twist);
    const auto g = [n_gon, t](double h) { return vertical_balance(n_gon, t, h); };

    // g decreases strictly and tends to -A at infinity, so doubling the
    // upper end must eventually produce the sign change.
    double lo = 1e-3;
    double glo = g(lo);
    if (glo == 0.0) return {lo, 0.0, 0, {lo, lo}};
    if (glo < 0.0) {
        throw ConvergenceError("solve_h_equal: balance already negative at h = 1e-3");
    }
    double hi = 1.0;
    double ghi = g(hi);
    while (ghi > 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e6) {
            throw ConvergenceError("solve_h_equal: no sign change below h = 1e6");
        }
        ghi = g(hi);
    }
    if (ghi == 0.0) return {hi, 0.0, 0, {lo, hi}};
    return find_root(g, {lo, hi}, tol);
}

SpatialPair solve_spatial_pair(int n_gon, double size_ratio, double twist,
                               double tol) {
    if (n_gon < 2) {
        throw std::invalid_argument("solve_spatial_pair: n_gon must be at least 2");
    }
    if (!(size_ratio > 0.0) || !std::isfinite(size_ratio)) {
        throw std::invalid_argument("solve_spatial_pair: size_ratio must be positive");
    }
    const double t = canonical_half_twist(n_gon, twist);
    const double a = size_ratio;
    const double A = csc_sum_A(n_gon);
    const double A_over_a3 = A / (a * a * a);
    const auto s0_at = [&](double h) {
        return kernel_sum({n_gon, a, h * h, t, KernelWeight::unit, 1.5});
    };
    const auto sc_at = [&](double h) {
        return kernel_sum({n_gon, a, h * h, t, KernelWeight::cosine, 1.5});
    };
    const auto compat = [&](double h) {
        const double s0 = s0_at(h);
        const double sc = sc_at(h);
        return sc * sc - (A - s0) * (A_over_a3 - s0);
    };

    constexpr int kGrid = 512;
    const double lo_h = 1e-3;
    const double hi_h = 1e3;
    const double step = std::log(hi_h / lo_h) / (kGrid - 1);

    bool any_crossing = false;
    bool any_resolved = false;
    bool any_positive_b = false;
    double prev_h = 0.0;
    double prev_f = 0.0;
    for (int i = 0; i < kGrid; ++i) {
        const double h = lo_h * std::exp(i * step);
        const double fh = compat(h);
        const bool crossing =
            i > 0 && (fh == 0.0 || (prev_f != 0.0 && sign_of(prev_f) != sign_of(fh)));
        if (crossing) {
            any_crossing = true;
            RootResult root = fh == 0.0 ? RootResult{h, 0.0, 0, {prev_h, h}}
                                        : find_root(compat, {prev_h, h}, tol);
            const double sc = sc_at(root.value);
            const double s0 = s0_at(root.value);
            // The ratio recovery divides by the cosine sum; at rounding level
            // the quotient is noise (the relations then force a = 1), so such
            // roots are skipped. Accepted candidates must also satisfy the
            // full reduced system.
            if (std::abs(sc) > 1e-12 * (std::abs(s0) + A)) {
                any_resolved = true;
                const double b = (A - s0) / (a * sc);
                if (std::isfinite(b) && b > 0.0) {
                    any_positive_b = true;
                    const TwistedPairParams candidate{n_gon, a, b, root.value, t, 1.0};
                    if (residuals_spatial(candidate).max_residual() < 1e-8) {
                        return {b, root.value, root};
                    }
                }
            }
        }
        prev_h = h;
        prev_f = fh;
    }
    // Equal rings with an identically vanishing cosine sum (the half-twisted
    // 2-gon) make the compatibility function touch zero without crossing;
    // the balance equation still pins the unique root.
    if (std::abs(a - 1.0) <= 1e-12) {
        const RootResult root = solve_h_equal(n_gon, t, tol);
        return {1.0, root.value, root};
    }
    if (!any_crossing) {
        throw NoSolutionError(
            "solve_spatial_pair: compatibility function has no sign change on (0, 1e3]");
    }
    if (any_resolved && !any_positive_b) {
        throw NoPhysicalSolutionError(
            "solve_spatial_pair: every root yields a non-positive mass ratio");
    }
    throw NoSolutionError(
        "solve_spatial_pair: no compatibility root determines a physical pair");
}

ThetaScanReport scan_theta(int n_gon, double size_ratio, double layer_distance,
                           int grid_size) {
    if (n_gon < 2) {
        throw std::invalid_argument("scan_theta: n_gon must be at least 2");
    }
    if (grid_size < 16) {
        throw std::invalid_argument("scan_theta: grid_size must be at least 16");
    }
    if (!(size_ratio > 0.0) || !(layer_distance >= 0.0)) {
        throw std::invalid_argument("scan_theta: invalid size_ratio or layer_distance");
    }
    const double period = 2.0 * std::numbers::pi / n_gon;
    const double step = period / grid_size;

    struct GridSample {
        int index;
        double theta;
        double f;
    };
    std::vector<GridSample> grid;
    grid.reserve(static_cast<std::size_t>(grid_size));
    for (int i = 0; i < grid_size; ++i) {
        const double theta = i * step;
        try {
            grid.push_back({i, theta, f_theta(n_gon, size_ratio, layer_distance, theta)});
        } catch (const DegenerateConfigurationError&) {
            // collision points (e.g. theta = 0 at a = 1, h = 0) are skipped
        }
    }
    if (grid.size() < 2) {
        throw DegenerateConfigurationError("scan_theta: every grid point is degenerate");
    }

    ThetaScanReport report;
    report.samples.reserve(grid.size());
    double f_scale = 0.0;
    for (const GridSample& s : grid) {
        report.samples.push_back({s.theta, s.f});
        f_scale = std::max(f_scale, std::abs(s.f));
    }
    const double zero_tol = 1e-9 * f_scale;

    // min over grid samples strictly inside (0, pi/N)
    report.min_positive = std::numeric_limits<double>::infinity();
    for (const GridSample& s : grid) {
        if (s.index >= 1 && 2 * s.index < grid_size) {
            report.min_positive = std::min(report.min_positive, s.f);
        }
    }

    std::vector<double> zeros;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (std::abs(grid[i].f) <= zero_tol) {
            zeros.push_back(grid[i].theta);
        }
        // crossings between grid-adjacent retained samples, cyclically
        const std::size_t next = (i + 1) % grid.size();
        const bool adjacent = (grid[i].index + 1) % grid_size == grid[next].index;
        if (!adjacent) continue;
        const double f0 = grid[i].f;
        const double f1 = grid[next].f;
        if (std::abs(f0) <= zero_tol || std::abs(f1) <= zero_tol) continue;
        if (sign_of(f0) == sign_of(f1)) continue;
        double z = grid[i].theta + step * (f0 / (f0 - f1));
        if (z >= period - 0.5 * step) z -= period;  // wrap boundary crossings to 0
        zeros.push_back(std::max(z, 0.0));
    }
    std::sort(zeros.begin(), zeros.end());
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        if (report.zeros_found.empty() ||
            zeros[i] - report.zeros_found.back() > 1.5 * step) {
            report.zeros_found.push_back(zeros[i]);
        }
    }
    return report;
}

double planar_mass_residual(int n_gon, double mass_ratio, double size_ratio) {
    const double a = size_ratio;
    const double A = csc_sum_A(n_gon);
    const double s0 = kernel_sum({n_gon, a, 0.0, 0.0, KernelWeight::unit, 1.5});
    const double sc = kernel_sum({n_gon, a, 0.0, 0.0, KernelWeight::cosine, 1.5});
    const double coeff = (s0 - a * sc) - A / (a * a * a);
    const double rhs = (s0 - sc / a) - A;
    return mass_ratio * coeff - rhs;
}

std::vector<RootResult> scan_planar_a(int n_gon, double mass_ratio, int grid_size) {
    if (n_gon < 2) {
        throw std::invalid_argument("scan_planar_a: n_gon must be at least 2");
    }
    if (!(mass_ratio > 0.0)) {
        throw std::invalid_argument("scan_planar_a: mass_ratio must be positive");
    }
    if (grid_size < 16) {
        throw std::invalid_argument("scan_planar_a: grid_size must be at least 16");
    }
    const auto residual = [&](double a) {
        return planar_mass_residual(n_gon, mass_ratio, a);
    };

    const double ln_lo = std::log(0.01);
    const double ln_hi = std::log(100.0);
    const double exclusion = 0.01;  // the relation is singular at a = 1

    std::vector<RootResult> roots;
    bool have_prev = false;
    double prev_a = 0.0;
    double prev_f = 0.0;
    for (int i = 0; i < grid_size; ++i) {
        const double a = std::exp(ln_lo + (ln_hi - ln_lo) * i / (grid_size - 1));
        if (std::abs(a - 1.0) < exclusion) {
            have_prev = false;  // never bracket across the excluded band
            continue;
        }
        const double fa = residual(a);
        if (fa == 0.0) {
            roots.push_back({a, 0.0, 0, {a, a}});
            have_prev = false;
            prev_a = a;
            continue;
        }
        if (have_prev && sign_of(prev_f) != sign_of(fa)) {
            roots.push_back(find_root(residual, {prev_a, a}, 1e-12));
        }
        have_prev = true;
        prev_a = a;
        prev_f = fa;
    }
    return roots;
}

double check_zz_inequality(int n_gon) {
    if (n_gon < 2) {
        throw std::invalid_argument("check_zz_inequality: n_gon must be at least 2");
    }
    return vertical_balance(n_gon, std::numbers::pi / n_gon, 0.0);
}

}  // namespace polycc
