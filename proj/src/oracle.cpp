#include "polycc/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "polycc/errors.hpp"
#include "polycc/kahan.hpp"

namespace polycc {

double potential_U(const Configuration& config) {
    const auto& bodies = config.bodies();
    KahanSum u;
    for (std::size_t j = 0; j < bodies.size(); ++j) {
        for (std::size_t k = j + 1; k < bodies.size(); ++k) {
            const double r = (bodies[j].position - bodies[k].position).norm();
            if (r < kCoincidenceTol) {
                throw DegenerateConfigurationError(
                    "potential_U: bodies " + std::to_string(j) + " and " +
                    std::to_string(k) + " coincide");
            }
            u += bodies[j].mass * bodies[k].mass / r;
        }
    }
    return u.get();
}

double moment_I(const Configuration& config) {
    KahanSum s;
    for (const PointMass& b : config.bodies()) {
        s += b.mass * b.position.norm2();
    }
    return s.get();
}

double lambda_of(const Configuration& config) {
    return potential_U(config) / moment_I(config);
}

ResidualReport central_residual(const Configuration& config) {
    if (config.centroid().norm() > 1e-9) {
        throw std::invalid_argument(
            "central_residual: configuration is not centered on the origin");
    }
    const auto& bodies = config.bodies();
    const std::size_t n = bodies.size();

    ResidualReport report;
    report.lambda = lambda_of(config);
    report.per_body.resize(n);

    for (std::size_t k = 0; k < n; ++k) {
        KahanSum fx, fy, fz;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            const Vec3 d = bodies[j].position - bodies[k].position;
            const double r2 = d.norm2();
            const double w = bodies[j].mass * bodies[k].mass / (r2 * std::sqrt(r2));
            fx += w * d.x;
            fy += w * d.y;
            fz += w * d.z;
        }
        const Vec3 centripetal = report.lambda * bodies[k].mass * bodies[k].position;
        fx += centripetal.x;
        fy += centripetal.y;
        fz += centripetal.z;
        report.per_body[k] = {fx.get(), fy.get(), fz.get()};

        const double scale =
            report.lambda * bodies[k].mass * bodies[k].position.norm() + 1e-300;
        report.max_relative =
            std::max(report.max_relative, report.per_body[k].norm() / scale);
    }
    return report;
}

bool is_central(const Configuration& config, double tol) {
    if (!(tol > 0.0) || !(tol < 1.0)) {
        throw std::invalid_argument("is_central: tol must lie in (0, 1)");
    }
    return central_residual(config).max_relative < tol;
}

}  // namespace polycc
