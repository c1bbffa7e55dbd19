// Acceptance suite: end-to-end checks of the solver stack against the
// Newton-equation oracle, with pinned tolerances and runtime budgets.
// Prints one PASS/FAIL line per criterion; exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polycc/cli.hpp"
#include "polycc/errors.hpp"
#include "polycc/geometry.hpp"
#include "polycc/kernels.hpp"
#include "polycc/oracle.hpp"
#include "polycc/reduced.hpp"
#include "polycc/solvers.hpp"

using namespace polycc;
using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool ok = false;
    std::string detail;
};

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

void run_criterion(int index, const char* name, double budget_seconds,
                   const std::function<Outcome()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = fn();
    } catch (const std::exception& e) {
        outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = seconds_since(t0);
    const bool in_budget = elapsed < budget_seconds;
    const bool ok = outcome.ok && in_budget;
    std::printf("[%s] %d. %s (%.3fs/%.1fs)%s%s\n", ok ? "PASS" : "FAIL", index,
                name, elapsed, budget_seconds, outcome.detail.empty() ? "" : " — ",
                outcome.detail.c_str());
    if (!ok) {
        if (!in_budget && outcome.ok) std::printf("       over time budget\n");
        ++g_failures;
    }
}

struct CliCall {
    int code = -1;
    json record;
    double seconds = 0.0;
};

CliCall call_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const auto t0 = std::chrono::steady_clock::now();
    const int code = cli::run(args, out, err);
    CliCall result;
    result.code = code;
    result.seconds = seconds_since(t0);
    if (!out.str().empty() && out.str().front() == '{') {
        result.record = json::parse(out.str());
    }
    return result;
}

double oracle_residual(const TwistedPairParams& p) {
    return central_residual(build_configuration(p)).max_relative;
}

// ---------------------------------------------------------------------------

Outcome closed_form_roots() {
    const CliCall prism = call_cli({"solve", "h-equal", "-N", "2", "--theta", "0",
                                    "--oracle-tol", "1e-10", "--json"});
    const CliCall tetra = call_cli({"solve", "h-equal", "-N", "2", "--theta",
                                    "pi/2", "--oracle-tol", "1e-10", "--json"});
    if (prism.code != 0 || tetra.code != 0) return {false, "CLI verdict not pass"};
    const double h_prism = prism.record["result"]["layer_distance"].get<double>();
    const double h_tetra = tetra.record["result"]["layer_distance"].get<double>();
    const bool values_ok = std::abs(h_prism - 2.0) <= 1e-10 &&
                           std::abs(h_tetra - std::sqrt(2.0)) <= 1e-10;
    const bool time_ok = prism.seconds < 0.1 && tetra.seconds < 0.1;
    std::ostringstream detail;
    detail << "h(0)=" << h_prism << ", h(pi/2)=" << h_tetra;
    return {values_ok && time_ok, detail.str()};
}

Outcome equal_ring_sweep() {
    double worst_oracle = 0.0;
    for (int n = 2; n <= 12; ++n) {
        for (const double twist : {0.0, kPi / n}) {
            const RootResult root = solve_h_equal(n, twist);
            if (!(vertical_balance(n, twist, root.value / 2.0) > 0.0) ||
                !(vertical_balance(n, twist, 2.0 * root.value) < 0.0)) {
                return {false, "monotone bracket violated"};
            }
            const double res = oracle_residual({n, 1.0, 1.0, root.value, twist, 1.0});
            worst_oracle = std::max(worst_oracle, res);
        }
    }
    std::ostringstream detail;
    detail << "worst oracle residual " << worst_oracle;
    return {worst_oracle < 1e-9, detail.str()};
}

Outcome twist_certification() {
    double worst_min = 1e300;
    for (int n = 2; n <= 10; ++n) {
        const double period = 2.0 * kPi / n;
        const double cell = period / 1000;
        for (const double a : {0.5, 1.0, 2.0}) {
            for (const double h : {0.0, 0.5, 1.0, 2.0}) {
                if (a == 1.0 && h == 0.0) continue;  // collision at theta = 0
                const ThetaScanReport scan = scan_theta(n, a, h, 1000);
                if (!(scan.min_positive > 0.0)) {
                    return {false, "min over (0, pi/N) not positive"};
                }
                worst_min = std::min(worst_min, scan.min_positive);
                for (const double z : scan.zeros_found) {
                    const double d0 = std::min(z, period - z);
                    const double dh = std::abs(z - kPi / n);
                    if (std::min(d0, dh) > cell + 1e-12) {
                        std::ostringstream detail;
                        detail << "stray zero at " << z << " (N=" << n
                               << ", a=" << a << ", h=" << h << ")";
                        return {false, detail.str()};
                    }
                }
            }
        }
    }
    std::ostringstream detail;
    detail << "smallest interior min " << worst_min;
    return {true, detail.str()};
}

Outcome identity_audit() {
    const CliCall audit =
        call_cli({"audit", "--max-n", "64", "--samples", "100", "--json"});
    if (audit.code != 0) return {false, "audit verdict not pass"};
    const auto& result = audit.record["result"];
    std::ostringstream detail;
    detail << "csc " << result["csc_rel_max"].get<double>() << ", identities "
           << result["identity_max"].get<double>() << ", recursion "
           << result["recursion_rel_max"].get<double>();
    const bool ok = result["csc_rel_max"].get<double>() < 1e-12 &&
                    result["identity_max"].get<double>() < 1e-12 &&
                    result["recursion_rel_max"].get<double>() < 1e-6;
    return {ok, detail.str()};
}

Outcome half_twist_inequality() {
    const double n2 = check_zz_inequality(2);
    if (std::abs(n2 - (1.0 / std::sqrt(2.0) - 0.25)) > 1e-12) {
        return {false, "N=2 value off the hand reduction"};
    }
    double min_value = n2;
    for (int n = 2; n <= 50; ++n) {
        min_value = std::min(min_value, check_zz_inequality(n));
    }
    std::ostringstream detail;
    detail << "min over N=2..50 is " << min_value;
    return {min_value > 0.0, detail.str()};
}

Outcome planar_root_count() {
    for (const int n : {2, 3, 4}) {
        for (const double b : {0.5, 1.0, 2.0}) {
            const std::vector<RootResult> roots = scan_planar_a(n, b);
            if (roots.size() != 2 || !(roots[0].value < 1.0) ||
                !(roots[1].value > 1.0)) {
                std::ostringstream detail;
                detail << "expected 2 straddling roots, got " << roots.size()
                       << " (N=" << n << ", b=" << b << ")";
                return {false, detail.str()};
            }
            for (const RootResult& r : roots) {
                if (!(oracle_residual({n, r.value, b, 0.0, 0.0, 1.0}) < 1e-8)) {
                    return {false, "root fails the oracle"};
                }
            }
            if (b == 1.0 &&
                std::abs(roots[1].value - 1.0 / roots[0].value) > 1e-8) {
                return {false, "equal-mass roots are not inverses"};
            }
        }
    }
    return {true, "9 parameter pairs, 18 oracle-verified roots"};
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> pick_n(2, 8);

    double worst_reduced = 0.0;
    double worst_oracle = 0.0;
    int completed = 0;
    int attempts = 0;
    while (completed < 100 && attempts < 5000) {
        ++attempts;
        const int n = pick_n(rng);
        const bool planar = completed % 2 == 0;
        try {
            if (planar) {
                const double twist = unit(rng) < 0.5 ? 0.0 : kPi / n;
                double a;
                if (twist == 0.0) {
                    a = unit(rng) < 0.5 ? 0.30 + 0.15 * unit(rng)
                                        : 2.4 + 0.8 * unit(rng);
                } else {
                    a = 0.75 + 0.6 * unit(rng);
                }
                const double b = cor110_planar_b(n, a, twist);
                const TwistedPairParams p{n, a, b, 0.0, twist, 1.0};
                worst_reduced =
                    std::max(worst_reduced, residuals_planar(p).max_residual());
                worst_oracle = std::max(worst_oracle, oracle_residual(p));
            } else {
                const double twist = unit(rng) < 0.5 ? 0.0 : kPi / n;
                const double a = 0.85 + 0.4 * unit(rng);
                const SpatialPair pair = solve_spatial_pair(n, a, twist);
                const TwistedPairParams p{n, a, pair.mass_ratio,
                                          pair.layer_distance, twist, 1.0};
                worst_reduced =
                    std::max(worst_reduced, residuals_spatial(p).max_residual());
                worst_oracle = std::max(worst_oracle, oracle_residual(p));
            }
            ++completed;
        } catch (const NoSolutionError&) {
        } catch (const NoPhysicalSolutionError&) {
        }
    }
    if (completed < 100) return {false, "could not complete 100 solved draws"};
    if (!(worst_reduced < 1e-10 && worst_oracle < 1e-8)) {
        std::ostringstream detail;
        detail << "solved draws: reduced " << worst_reduced << ", oracle "
               << worst_oracle;
        return {false, detail.str()};
    }

    // non-solutions: perturbed roots and off-grid twists must light up both
    // residual measures
    double min_reduced = 1e300;
    double min_oracle = 1e300;
    for (int i = 0; i < 100; ++i) {
        const int mode = i % 3;
        TwistedPairParams p{};
        if (mode == 0) {
            const int n = 2 + static_cast<int>(2.0 * unit(rng));  // 2 or 3
            const double a = 0.6 + 1.2 * unit(rng);
            const double h = unit(rng) < 0.3 ? 0.0 : 0.2 + 0.8 * unit(rng);
            const double twist = (0.25 + 0.5 * unit(rng)) * kPi / n;
            p = {n, a, 1.0, h, twist, 1.0};
        } else if (mode == 1) {
            // mass detuning; the half-twisted 2-gon is skipped because its
            // root (the regular tetrahedron) stays central for every ratio
            const int n = pick_n(rng);
            const double twist = n == 2 ? 0.0 : (unit(rng) < 0.5 ? 0.0 : kPi / n);
            const RootResult root = solve_h_equal(n, twist);
            const double detune = 1.5 + unit(rng);
            p = {n, 1.0, detune, root.value, twist, 1.0};
        } else {
            const int n = pick_n(rng);
            const double twist = unit(rng) < 0.5 ? 0.0 : kPi / n;
            const RootResult root = solve_h_equal(n, twist);
            p = {n, 1.0, 1.0, root.value + 1.0 + unit(rng), twist, 1.0};
        }
        const double reduced = residuals_general(p).max_residual();
        min_reduced = std::min(min_reduced, reduced);
        min_oracle = std::min(min_oracle, oracle_residual(p));
    }
    std::ostringstream detail;
    detail << "solved worst (" << worst_reduced << ", " << worst_oracle
           << "); non-solution min (" << min_reduced << ", " << min_oracle << ")";
    return {min_reduced > 1e-4 && min_oracle > 1e-4, detail.str()};
}

Outcome equal_radius_fixtures() {
    // a = 1 gives b = 1 exactly; off a = 1 the solved ratio must move away
    if (std::abs(cor110_planar_b(2, 1.0, kPi / 2.0) - 1.0) > 1e-10) {
        return {false, "b(a=1) != 1"};
    }
    for (const double a : {0.5, 0.8, 1.25, 2.0}) {
        try {
            if (std::abs(cor110_planar_b(2, a, kPi / 2.0) - 1.0) <= 1e-10) {
                return {false, "b = 1 away from a = 1"};
            }
        } catch (const NoPhysicalSolutionError&) {
        } catch (const NoSolutionError&) {
        }
    }

    // regular 2N-gons verify only with equal masses
    for (int n = 2; n <= 8; ++n) {
        const std::string n_str = std::to_string(n);
        if (call_cli({"verify", "-N", n_str, "-a", "1", "-b", "1", "-h", "0",
                      "--theta", "pi/N"})
                .code != 0) {
            return {false, "equal-mass 2N-gon rejected (N=" + n_str + ")"};
        }
        for (const char* b : {"0.5", "2"}) {
            if (call_cli({"verify", "-N", n_str, "-a", "1", "-b", b, "-h", "0",
                          "--theta", "pi/N"})
                    .code != 1) {
                return {false, "detuned 2N-gon accepted (N=" + n_str + ")"};
            }
        }
    }
    return {true, "21 CLI verdicts as expected"};
}

}  // namespace

int main() {
    run_criterion(1, "closed-form roots (square prism, tetrahedron)", 0.25,
                  closed_form_roots);
    run_criterion(2, "equal-ring sweep N=2..12, both twists", 2.0,
                  equal_ring_sweep);
    run_criterion(3, "twist-angle certification over the (N, a, h) grid", 5.0,
                  twist_certification);
    run_criterion(4, "identity audit (cosecant, reflections, recursion)", 1.0,
                  identity_audit);
    run_criterion(5, "half-twist inequality N=2..50", 0.1,
                  half_twist_inequality);
    run_criterion(6, "planar root count over (N, b) grid", 3.0,
                  planar_root_count);
    run_criterion(7, "oracle equivalence on solved and non-solution draws", 5.0,
                  oracle_equivalence);
    run_criterion(8, "equal-radius fixtures and 2N-gon verdicts", 1.0,
                  equal_radius_fixtures);

    if (g_failures != 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
