#include "polycc/newtonian.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "polycc/kahan.hpp"

namespace polycc {

namespace {

[[noreturn]] void throw_collision(size_t i, size_t j) {
    throw std::domain_error("collision between bodies " + std::to_string(i) + " and " +
                            std::to_string(j));
}

}  // namespace

double potential(const body_system& sys) {
    const auto& bs = sys.bodies;
    kahan_sum u;
    for (size_t i = 0; i < bs.size(); ++i) {
        for (size_t j = i + 1; j < bs.size(); ++j) {
            double r = norm(bs[i].position - bs[j].position);
            if (r <= collision_tolerance) throw_collision(i, j);
            u.add(bs[i].mass * bs[j].mass / r);
        }
    }
    return u.value();
}

double moment_of_inertia(const body_system& sys) {
    vec3 c0 = center_of_mass(sys);
    kahan_sum inertia;
    for (const auto& b : sys.bodies) {
        vec3 d = b.position - c0;
        inertia.add(b.mass * dot(d, d));
    }
    return inertia.value();
}

double lambda_of(const body_system& sys) { return potential(sys) / moment_of_inertia(sys); }

cc_report cc_residual(const body_system& sys, double tolerance) {
    const auto& bs = sys.bodies;
    const size_t n = bs.size();
    const vec3 c0 = center_of_mass(sys);
    const double lambda = lambda_of(sys);

    cc_report report;
    report.lambda = lambda;
    report.tolerance = tolerance;
    report.residuals.resize(n);
    double worst = 0.0;
    for (size_t k = 0; k < n; ++k) {
        kahan_sum rx, ry, rz;
        for (size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            vec3 d = bs[j].position - bs[k].position;
            double r = norm(d);
            if (r <= collision_tolerance) throw_collision(k, j);
            double w = bs[j].mass * bs[k].mass / (r * r * r);
            rx.add(w * d.x);
            ry.add(w * d.y);
            rz.add(w * d.z);
        }
        vec3 pull = bs[k].position - c0;
        rx.add(lambda * bs[k].mass * pull.x);
        ry.add(lambda * bs[k].mass * pull.y);
        rz.add(lambda * bs[k].mass * pull.z);
        vec3 res{rx.value(), ry.value(), rz.value()};
        report.residuals[k] = res;
        worst = std::max(worst, max_abs_component(res));
    }
    report.max_residual = worst;
    report.is_central = worst <= tolerance;
    return report;
}

std::vector<vec3> accelerations(const body_system& sys, const std::vector<vec3>& positions) {
    const auto& bs = sys.bodies;
    const size_t n = bs.size();
    std::vector<vec3> acc(n);
    for (size_t k = 0; k < n; ++k) {
        kahan_sum ax, ay, az;
        for (size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            vec3 d = positions[j] - positions[k];
            double r = norm(d);
            if (r <= collision_tolerance) throw_collision(k, j);
            double w = bs[j].mass / (r * r * r);
            ax.add(w * d.x);
            ay.add(w * d.y);
            az.add(w * d.z);
        }
        acc[k] = {ax.value(), ay.value(), az.value()};
    }
    return acc;
}

}  // namespace polycc
