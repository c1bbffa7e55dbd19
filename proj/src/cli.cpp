#include "polycc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "polycc/errors.hpp"
#include "polycc/geometry.hpp"
#include "polycc/kahan.hpp"
#include "polycc/kernels.hpp"
#include "polycc/oracle.hpp"
#include "polycc/reduced.hpp"
#include "polycc/solvers.hpp"

namespace polycc::cli {

using nlohmann::json;

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json params_json(const TwistedPairParams& p) {
    return {{"n_gon", p.n_gon},
            {"size_ratio", p.size_ratio},
            {"mass_ratio", p.mass_ratio},
            {"layer_distance", p.layer_distance},
            {"twist", p.twist},
            {"base_mass", p.base_mass}};
}

int emit(std::ostream& out, bool json_mode, const json& record,
         const std::vector<std::string>& human) {
    if (json_mode) {
        out << record.dump(2) << '\n';
    } else {
        for (const std::string& line : human) out << line << '\n';
        out << "verdict: " << record.at("verdict").get<std::string>() << '\n';
    }
    return record.at("verdict") == "pass" ? kExitPass : kExitFail;
}

double cyclic_distance(double x, double target, double period) {
    double d = std::fmod(std::abs(x - target), period);
    return std::min(d, period - d);
}

// ---------------------------------------------------------------- verify

struct VerifyOpts {
    int n = 0;
    double a = 1.0, b = 1.0, h = 0.0, m = 1.0;
    std::string theta;
    double tol_reduced = 1e-10;
    double tol_oracle = 1e-8;
    bool json_mode = false;
};

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
    TwistedPairParams p{o.n, o.a, o.b, o.h, parse_angle(o.theta, o.n), o.m};
    p.validate();
    const ReducedResiduals rr = residuals_general(p);
    const ResidualReport oracle = central_residual(build_configuration(p));
    const bool pass =
        rr.max_residual() < o.tol_reduced && oracle.max_relative < o.tol_oracle;

    json record = {
        {"command", "verify"},
        {"params", params_json(p)},
        {"result",
         {{"lambda", oracle.lambda},
          {"mu", rr.mu},
          {"radial_lower", rr.radial_lower},
          {"radial_upper", rr.radial_upper},
          {"tangential", rr.tangential},
          {"vertical", rr.vertical},
          {"oracle_max_relative", oracle.max_relative}}},
        {"tolerances", {{"reduced", o.tol_reduced}, {"oracle", o.tol_oracle}}},
        {"verdict", pass ? "pass" : "fail"}};
    return emit(out, o.json_mode, record,
                {"lambda               " + fmt(oracle.lambda),
                 "mu                   " + fmt(rr.mu),
                 "radial_lower         " + fmt(rr.radial_lower),
                 "radial_upper         " + fmt(rr.radial_upper),
                 "tangential           " + fmt(rr.tangential),
                 "vertical             " + fmt(rr.vertical),
                 "oracle_max_relative  " + fmt(oracle.max_relative)});
}

// ----------------------------------------------------------------- solve

struct SolveOpts {
    int n = 0;
    double a = 1.0;
    std::string theta;
    double tol_root = 1e-12;
    double tol_oracle = 1e-8;
    bool json_mode = false;
};

int emit_no_solution(std::ostream& out, const SolveOpts& o, const char* mode,
                     const std::string& why) {
    json record = {{"command", std::string("solve ") + mode},
                   {"result", {{"error", why}}},
                   {"tolerances", {{"root", o.tol_root}, {"oracle", o.tol_oracle}}},
                   {"verdict", "no-solution"}};
    return emit(out, o.json_mode, record, {std::string("no solution: ") + why});
}

int cmd_solve_h_equal(const SolveOpts& o, std::ostream& out) {
    const double twist = canonical_half_twist(o.n, parse_angle(o.theta, o.n));
    RootResult root;
    try {
        root = solve_h_equal(o.n, twist, o.tol_root);
    } catch (const ConvergenceError& e) {
        return emit_no_solution(out, o, "h-equal", e.what());
    }
    TwistedPairParams p{o.n, 1.0, 1.0, root.value, twist, 1.0};
    const ResidualReport oracle = central_residual(build_configuration(p));
    const bool pass = oracle.max_relative < o.tol_oracle;

    json record = {
        {"command", "solve h-equal"},
        {"params", params_json(p)},
        {"result",
         {{"layer_distance", root.value},
          {"residual", root.residual},
          {"iterations", root.iterations},
          {"bracket", {{"lo", root.bracket.lo}, {"hi", root.bracket.hi}}},
          {"oracle_max_relative", oracle.max_relative}}},
        {"tolerances", {{"root", o.tol_root}, {"oracle", o.tol_oracle}}},
        {"verdict", pass ? "pass" : "fail"}};
    return emit(out, o.json_mode, record,
                {"twist (reduced)      " + fmt(twist),
                 "layer_distance       " + fmt(root.value),
                 "residual             " + fmt(root.residual),
                 "iterations           " + std::to_string(root.iterations),
                 "oracle_max_relative  " + fmt(oracle.max_relative)});
}

int cmd_solve_b_planar(const SolveOpts& o, std::ostream& out) {
    const double twist = canonical_half_twist(o.n, parse_angle(o.theta, o.n));
    double b = 0.0;
    try {
        b = cor110_planar_b(o.n, o.a, twist);
    } catch (const NoSolutionError& e) {
        return emit_no_solution(out, o, "b-planar", e.what());
    } catch (const NoPhysicalSolutionError& e) {
        return emit_no_solution(out, o, "b-planar", e.what());
    }
    TwistedPairParams p{o.n, o.a, b, 0.0, twist, 1.0};
    const ReducedResiduals rr = residuals_planar(p);
    const ResidualReport oracle = central_residual(build_configuration(p));
    const bool pass = oracle.max_relative < o.tol_oracle;

    json record = {
        {"command", "solve b-planar"},
        {"params", params_json(p)},
        {"result",
         {{"mass_ratio", b},
          {"reduced_max", rr.max_residual()},
          {"oracle_max_relative", oracle.max_relative}}},
        {"tolerances", {{"root", o.tol_root}, {"oracle", o.tol_oracle}}},
        {"verdict", pass ? "pass" : "fail"}};
    return emit(out, o.json_mode, record,
                {"twist (reduced)      " + fmt(twist),
                 "mass_ratio           " + fmt(b),
                 "reduced_max          " + fmt(rr.max_residual()),
                 "oracle_max_relative  " + fmt(oracle.max_relative)});
}

int cmd_solve_pair_spatial(const SolveOpts& o, std::ostream& out) {
    const double twist = canonical_half_twist(o.n, parse_angle(o.theta, o.n));
    SpatialPair sol;
    try {
        sol = solve_spatial_pair(o.n, o.a, twist, o.tol_root);
    } catch (const NoSolutionError& e) {
        return emit_no_solution(out, o, "pair-spatial", e.what());
    } catch (const NoPhysicalSolutionError& e) {
        return emit_no_solution(out, o, "pair-spatial", e.what());
    }
    TwistedPairParams p{o.n, o.a, sol.mass_ratio, sol.layer_distance, twist, 1.0};
    const ReducedResiduals rr = residuals_spatial(p);
    const ResidualReport oracle = central_residual(build_configuration(p));
    const bool pass = oracle.max_relative < o.tol_oracle;

    json record = {
        {"command", "solve pair-spatial"},
        {"params", params_json(p)},
        {"result",
         {{"mass_ratio", sol.mass_ratio},
          {"layer_distance", sol.layer_distance},
          {"compat_residual", sol.root.residual},
          {"iterations", sol.root.iterations},
          {"reduced_max", rr.max_residual()},
          {"oracle_max_relative", oracle.max_relative}}},
        {"tolerances", {{"root", o.tol_root}, {"oracle", o.tol_oracle}}},
        {"verdict", pass ? "pass" : "fail"}};
    return emit(out, o.json_mode, record,
                {"twist (reduced)      " + fmt(twist),
                 "mass_ratio           " + fmt(sol.mass_ratio),
                 "layer_distance       " + fmt(sol.layer_distance),
                 "reduced_max          " + fmt(rr.max_residual()),
                 "oracle_max_relative  " + fmt(oracle.max_relative)});
}

// ------------------------------------------------------------------ scan

struct ScanOpts {
    int n = 0;
    double a = 1.0, b = 1.0, h = 0.0;
    int grid = 0;
    std::string out_path;
    double tol_oracle = 1e-8;
    bool json_mode = false;
};

int cmd_scan_theta(const ScanOpts& o, std::ostream& out, std::ostream& err) {
    const ThetaScanReport report = scan_theta(o.n, o.a, o.h, o.grid);
    if (!o.out_path.empty()) {
        std::ofstream csv(o.out_path);
        if (!csv) {
            err << "error: cannot write " << o.out_path << '\n';
            return kExitInvalid;
        }
        csv << "theta,f\n";
        for (const ThetaSample& s : report.samples) {
            csv << fmt(s.theta) << ',' << fmt(s.f) << '\n';
        }
    }
    const double period = 2.0 * std::numbers::pi / o.n;
    const double half = std::numbers::pi / o.n;
    const double cell = period / o.grid;
    bool zeros_ok = true;
    for (double z : report.zeros_found) {
        const double d = std::min(cyclic_distance(z, 0.0, period),
                                  cyclic_distance(z, half, period));
        if (d > cell + 1e-12) zeros_ok = false;
    }
    const bool pass = zeros_ok && report.min_positive > 0.0;

    json record = {{"command", "scan theta"},
                   {"params",
                    {{"n_gon", o.n},
                     {"size_ratio", o.a},
                     {"layer_distance", o.h},
                     {"grid", o.grid}}},
                   {"result",
                    {{"zeros_found", report.zeros_found},
                     {"min_positive", report.min_positive},
                     {"samples", report.samples.size()}}},
                   {"tolerances", {{"zero_cell", cell}}},
                   {"verdict", pass ? "pass" : "fail"}};
    if (!o.out_path.empty()) record["result"]["csv"] = o.out_path;

    std::vector<std::string> human;
    std::string zeros = "zeros_found         ";
    for (double z : report.zeros_found) zeros += " " + fmt(z);
    human.push_back(zeros);
    human.push_back("min_positive         " + fmt(report.min_positive));
    human.push_back("samples              " + std::to_string(report.samples.size()));
    return emit(out, o.json_mode, record, human);
}

int cmd_scan_a_count(const ScanOpts& o, std::ostream& out, std::ostream& err) {
    const std::vector<RootResult> roots = scan_planar_a(o.n, o.b, o.grid);

    json roots_json = json::array();
    bool all_central = true;
    for (const RootResult& r : roots) {
        const double b_implied = cor110_planar_b(o.n, r.value, 0.0);
        TwistedPairParams p{o.n, r.value, o.b, 0.0, 0.0, 1.0};
        const ResidualReport oracle = central_residual(build_configuration(p));
        if (oracle.max_relative >= o.tol_oracle) all_central = false;
        roots_json.push_back({{"a", r.value},
                              {"residual", r.residual},
                              {"iterations", r.iterations},
                              {"b_implied", b_implied},
                              {"oracle_max_relative", oracle.max_relative}});
    }
    const bool pass = roots.size() == 2 && roots[0].value < 1.0 &&
                      roots[1].value > 1.0 && all_central;

    if (!o.out_path.empty()) {
        std::ofstream csv(o.out_path);
        if (!csv) {
            err << "error: cannot write " << o.out_path << '\n';
            return kExitInvalid;
        }
        csv << "a,residual\n";
        const double ln_lo = std::log(0.01);
        const double ln_hi = std::log(100.0);
        for (int i = 0; i < o.grid; ++i) {
            const double a = std::exp(ln_lo + (ln_hi - ln_lo) * i / (o.grid - 1));
            if (std::abs(a - 1.0) < 0.01) continue;
            csv << fmt(a) << ',' << fmt(planar_mass_residual(o.n, o.b, a)) << '\n';
        }
        std::filesystem::path roots_path(o.out_path);
        roots_path.replace_filename(roots_path.stem().string() + "_roots" +
                                    roots_path.extension().string());
        std::ofstream rcsv(roots_path);
        if (!rcsv) {
            err << "error: cannot write " << roots_path.string() << '\n';
            return kExitInvalid;
        }
        rcsv << "a_root,b_implied\n";
        for (const auto& r : roots_json) {
            rcsv << fmt(r.at("a").get<double>()) << ','
                 << fmt(r.at("b_implied").get<double>()) << '\n';
        }
    }

    json record = {{"command", "scan a-count"},
                   {"params", {{"n_gon", o.n}, {"mass_ratio", o.b}, {"grid", o.grid}}},
                   {"result", {{"count", roots.size()}, {"roots", roots_json}}},
                   {"tolerances", {{"oracle", o.tol_oracle}}},
                   {"verdict", pass ? "pass" : "fail"}};
    if (!o.out_path.empty()) record["result"]["csv"] = o.out_path;

    std::vector<std::string> human;
    human.push_back("count                " + std::to_string(roots.size()));
    for (const auto& r : roots_json) {
        human.push_back("a_root               " + fmt(r.at("a").get<double>()) +
                        "  (b_implied " + fmt(r.at("b_implied").get<double>()) + ")");
    }
    return emit(out, o.json_mode, record, human);
}

// ----------------------------------------------------------------- audit

struct AuditOpts {
    int max_n = 12;
    int samples = 100;
    std::uint64_t seed = 20250808;
    double tol_identity = 1e-12;  // also used for the cosecant comparison
    double tol_recursion = 1e-6;
    bool json_mode = false;
};

// Brute-force pairwise inverse-distance sum over the unit polygon,
// independent of the cosecant form it is checked against.
double pairwise_inverse_distance_sum(int n_gon) {
    std::vector<double> xs(n_gon), ys(n_gon);
    for (int j = 1; j <= n_gon; ++j) {
        xs[j - 1] = std::cos(vertex_angle(n_gon, j));
        ys[j - 1] = std::sin(vertex_angle(n_gon, j));
    }
    KahanSum s;
    for (int j = 0; j < n_gon; ++j) {
        for (int k = j + 1; k < n_gon; ++k) {
            s += 1.0 / std::hypot(xs[j] - xs[k], ys[j] - ys[k]);
        }
    }
    return s.get();
}

double min_kernel_denominator(int n_gon, double a, double h, double theta) {
    double dmin = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= n_gon; ++j) {
        for (double sgn : {1.0, -1.0}) {
            const double s = std::sin(0.5 * (vertex_angle(n_gon, j) + sgn * theta));
            dmin = std::min(dmin, (1.0 - a) * (1.0 - a) + 4.0 * a * s * s + h * h);
        }
    }
    return dmin;
}

int cmd_audit(const AuditOpts& o, std::ostream& out) {
    if (o.max_n < 2 || o.max_n > 64) {
        throw std::invalid_argument("audit: --max-n must lie in [2, 64]");
    }
    if (o.samples < 1) {
        throw std::invalid_argument("audit: --samples must be positive");
    }

    double worst_csc = 0.0;
    double min_zz = std::numeric_limits<double>::infinity();
    for (int n = 2; n <= o.max_n; ++n) {
        const double a_const = csc_sum_A(n);
        const double brute = pairwise_inverse_distance_sum(n) / n;
        worst_csc = std::max(worst_csc, std::abs(brute - a_const) / a_const);
        min_zz = std::min(min_zz, check_zz_inequality(n));
    }

    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> pick_n(2, o.max_n);
    std::uniform_real_distribution<double> pick_a(0.2, 3.0);
    std::uniform_real_distribution<double> pick_h(0.0, 3.0);
    std::uniform_real_distribution<double> pick_theta(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> pick_unit(0.0, 1.0);

    double worst_identity = 0.0;
    for (int i = 0; i < o.samples; ++i) {
        int n;
        double a, h, theta;
        do {
            n = pick_n(rng);
            a = pick_a(rng);
            h = pick_unit(rng) < 0.3 ? 0.0 : pick_h(rng);
            theta = pick_theta(rng);
        } while (min_kernel_denominator(n, a, h, theta) < 0.1);
        worst_identity = std::max(worst_identity, check_identities(n, a, h, theta).max());
    }

    // Centered difference of the order-(n-1) kernel against the closed-form
    // derivative -(2n+1)/2 times the order-n kernel. The sine sums cancel
    // almost completely for large N or extreme a, where a 1e-5 step cannot
    // resolve them; the sampler stays in the dominant-term regime and leaves
    // N-breadth to the identity checks.
    const double fd_step = 1e-5;
    double worst_recursion = 0.0;
    const int recursion_samples = std::max(10, o.samples / 3);
    std::uniform_int_distribution<int> pick_rn(2, std::min(o.max_n, 6));
    std::uniform_real_distribution<double> pick_ra(0.6, 1.6);
    std::uniform_real_distribution<double> pick_frac(0.2, 0.8);
    std::uniform_real_distribution<double> pick_x(0.1, 1.5);
    for (int i = 0; i < recursion_samples; ++i) {
        const int n_ring = pick_rn(rng);
        const double a = pick_ra(rng);
        const double theta = pick_frac(rng) * std::numbers::pi / n_ring;
        const double x = pick_x(rng);
        for (int order = 1; order <= 3; ++order) {
            const double p_lower = (2.0 * (order - 1) + 3.0) / 2.0;
            const double p_upper = (2.0 * order + 3.0) / 2.0;
            const auto g_lower = [&](double xx) {
                return kernel_sum({n_ring, a, xx, theta, KernelWeight::sine, p_lower});
            };
            const double fd =
                (g_lower(x + fd_step) - g_lower(x - fd_step)) / (2.0 * fd_step);
            const double target =
                -(2.0 * order + 1.0) / 2.0 *
                kernel_sum({n_ring, a, x, theta, KernelWeight::sine, p_upper});
            worst_recursion = std::max(
                worst_recursion, std::abs(fd - target) / std::abs(target));
        }
    }

    const bool pass = worst_csc < o.tol_identity && worst_identity < o.tol_identity &&
                      worst_recursion < o.tol_recursion && min_zz > 0.0;

    json record = {{"command", "audit"},
                   {"params",
                    {{"max_n", o.max_n}, {"samples", o.samples}, {"seed", o.seed}}},
                   {"result",
                    {{"csc_rel_max", worst_csc},
                     {"identity_max", worst_identity},
                     {"recursion_rel_max", worst_recursion},
                     {"zz_min", min_zz}}},
                   {"tolerances",
                    {{"csc", o.tol_identity},
                     {"identity", o.tol_identity},
                     {"recursion", o.tol_recursion}}},
                   {"verdict", pass ? "pass" : "fail"}};
    return emit(out, o.json_mode, record,
                {"csc_rel_max          " + fmt(worst_csc),
                 "identity_max         " + fmt(worst_identity),
                 "recursion_rel_max    " + fmt(worst_recursion),
                 "zz_min               " + fmt(min_zz)});
}

}  // namespace

double parse_angle(const std::string& text, int n_gon) {
    std::string s = text;
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t") + 1);
    double sign = 1.0;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        if (s[0] == '-') sign = -1.0;
        s.erase(0, 1);
    }
    if (s.empty()) throw std::invalid_argument("empty angle argument");
    if (s == "0") return 0.0;
    if (s.rfind("pi", 0) == 0) {
        const std::string rest = s.substr(2);
        if (rest.empty()) return sign * std::numbers::pi;
        if (rest[0] != '/' || rest.size() < 2) {
            throw std::invalid_argument("unparsable angle: " + text);
        }
        const std::string den = rest.substr(1);
        if (den == "N") return sign * std::numbers::pi / n_gon;
        if (den == "2N") return sign * std::numbers::pi / (2.0 * n_gon);
        std::size_t pos = 0;
        const long k = std::stol(den, &pos);
        if (pos != den.size() || k <= 0) {
            throw std::invalid_argument("unparsable angle: " + text);
        }
        return sign * std::numbers::pi / static_cast<double>(k);
    }
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("unparsable angle: " + text);
    }
    if (pos != s.size()) throw std::invalid_argument("unparsable angle: " + text);
    return sign * v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"central configurations of two stacked twisted regular N-gons"};
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);

    const auto add_common = [](CLI::App* sub) {
        sub->set_help_flag("--help", "print help and exit");
    };

    VerifyOpts vo;
    CLI::App* verify = app.add_subcommand(
        "verify", "check whether (N, a, b, h, theta) is a central configuration");
    add_common(verify);
    verify->add_option("-N,--n-gon", vo.n, "vertices per ring")->required();
    verify->add_option("-a,--size-ratio", vo.a, "upper/lower radius ratio");
    verify->add_option("-b,--mass-ratio", vo.b, "upper/lower mass ratio");
    verify->add_option("-h,--layer-distance", vo.h, "vertical separation");
    verify->add_option("-m,--base-mass", vo.m, "lower-ring body mass");
    verify->add_option("--theta", vo.theta, "twist angle (radians, pi/<k>, pi/N, pi/2N)")
        ->required();
    verify->add_option("--tol", vo.tol_reduced, "reduced-residual tolerance");
    verify->add_option("--oracle-tol", vo.tol_oracle, "oracle tolerance");
    verify->add_flag("--json", vo.json_mode, "emit the run record as JSON");

    CLI::App* solve = app.add_subcommand("solve", "solve for a missing parameter");
    add_common(solve);
    solve->require_subcommand(1);
    SolveOpts so;
    CLI::App* h_equal = solve->add_subcommand(
        "h-equal", "layer distance for equal rings (a = b = 1)");
    CLI::App* b_planar = solve->add_subcommand(
        "b-planar", "mass ratio for a planar pair (h = 0)");
    CLI::App* pair_spatial = solve->add_subcommand(
        "pair-spatial", "mass ratio and layer distance at fixed size ratio");
    for (CLI::App* sub : {h_equal, b_planar, pair_spatial}) {
        add_common(sub);
        sub->add_option("-N,--n-gon", so.n, "vertices per ring")->required();
        sub->add_option("--theta", so.theta, "twist angle, must reduce to 0 or pi/N")
            ->required();
        sub->add_option("--tol", so.tol_root, "root-finding tolerance");
        sub->add_option("--oracle-tol", so.tol_oracle, "oracle tolerance");
        sub->add_flag("--json", so.json_mode, "emit the run record as JSON");
    }
    b_planar->add_option("-a,--size-ratio", so.a, "upper/lower radius ratio")->required();
    pair_spatial->add_option("-a,--size-ratio", so.a, "upper/lower radius ratio")
        ->required();

    CLI::App* scan = app.add_subcommand("scan", "grid scans with CSV output");
    add_common(scan);
    scan->require_subcommand(1);
    ScanOpts sct;
    sct.grid = 1000;
    CLI::App* scan_t = scan->add_subcommand(
        "theta", "sample the tangential sum over one twist period");
    add_common(scan_t);
    scan_t->add_option("-N,--n-gon", sct.n, "vertices per ring")->required();
    scan_t->add_option("-a,--size-ratio", sct.a, "upper/lower radius ratio")->required();
    scan_t->add_option("-h,--layer-distance", sct.h, "vertical separation")->required();
    scan_t->add_option("--grid", sct.grid, "grid points over [0, 2 pi/N)");
    scan_t->add_option("-o,--out", sct.out_path, "CSV output path (theta,f)");
    scan_t->add_option("--oracle-tol", sct.tol_oracle, "oracle tolerance");
    scan_t->add_flag("--json", sct.json_mode, "emit the run record as JSON");

    ScanOpts sca;
    sca.grid = 10000;
    CLI::App* scan_a = scan->add_subcommand(
        "a-count", "count size-ratio roots of the planar relation at twist 0");
    add_common(scan_a);
    scan_a->add_option("-N,--n-gon", sca.n, "vertices per ring")->required();
    scan_a->add_option("-b,--mass-ratio", sca.b, "upper/lower mass ratio")->required();
    scan_a->add_option("--grid", sca.grid, "log-uniform grid points over [0.01, 100]");
    scan_a->add_option("-o,--out", sca.out_path,
                       "CSV output path (a,residual); roots go to <stem>_roots<ext>");
    scan_a->add_option("--oracle-tol", sca.tol_oracle, "oracle tolerance");
    scan_a->add_flag("--json", sca.json_mode, "emit the run record as JSON");

    AuditOpts ao;
    CLI::App* audit = app.add_subcommand(
        "audit", "identity, recursion and inequality checks across N");
    add_common(audit);
    audit->add_option("--max-n", ao.max_n, "largest ring size to audit (2..64)")
        ->default_val(12);
    audit->add_option("--samples", ao.samples, "random identity samples")
        ->default_val(100);
    audit->add_option("--seed", ao.seed, "random seed")->default_val(20250808);
    audit->add_option("--tol", ao.tol_identity,
                      "tolerance for the cosecant and reflection checks");
    audit->add_option("--recursion-tol", ao.tol_recursion,
                      "relative tolerance for the derivative recursion");
    audit->add_flag("--json", ao.json_mode, "emit the run record as JSON");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        // print help for the most specific subcommand reached by the parse
        CLI::App* target = &app;
        while (!target->get_subcommands().empty()) {
            target = target->get_subcommands().front();
        }
        out << target->help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    try {
        if (*verify) return cmd_verify(vo, out);
        if (*h_equal) return cmd_solve_h_equal(so, out);
        if (*b_planar) return cmd_solve_b_planar(so, out);
        if (*pair_spatial) return cmd_solve_pair_spatial(so, out);
        if (*scan_t) return cmd_scan_theta(sct, out, err);
        if (*scan_a) return cmd_scan_a_count(sca, out, err);
        if (*audit) return cmd_audit(ao, out);
    } catch (const DegenerateConfigurationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFail;
    }
    err << "error: no command selected\n";
    return kExitInvalid;
}

}  // namespace polycc::cli
