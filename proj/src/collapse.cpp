#include "polycc/collapse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "polycc/kahan.hpp"
#include "polycc/newtonian.hpp"

namespace polycc {

namespace {

constexpr double energy_reject_tol = 1e-6;
constexpr double dt_min = 1e-9;
constexpr double close_approach = 10.0 * collision_tolerance;

double total_energy(const body_system& sys, const std::vector<vec3>& pos,
                    const std::vector<vec3>& vel) {
    const auto& bs = sys.bodies;
    kahan_sum e;
    for (size_t i = 0; i < bs.size(); ++i) e.add(0.5 * bs[i].mass * dot(vel[i], vel[i]));
    for (size_t i = 0; i < bs.size(); ++i) {
        for (size_t j = i + 1; j < bs.size(); ++j) {
            e.add(-bs[i].mass * bs[j].mass / norm(pos[i] - pos[j]));
        }
    }
    return e.value();
}

double min_distance(const std::vector<vec3>& pos) {
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < pos.size(); ++i)
        for (size_t j = i + 1; j < pos.size(); ++j)
            best = std::min(best, norm(pos[i] - pos[j]));
    return best;
}

double shape_drift_of(const std::vector<vec3>& pos, const std::vector<double>& r0) {
    std::vector<double> ratios;
    ratios.reserve(r0.size());
    size_t idx = 0;
    for (size_t i = 0; i < pos.size(); ++i)
        for (size_t j = i + 1; j < pos.size(); ++j)
            ratios.push_back(norm(pos[i] - pos[j]) / r0[idx++]);
    std::vector<double> sorted = ratios;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
    double s = sorted[sorted.size() / 2];
    double drift = 0.0;
    for (double r : ratios) drift = std::max(drift, std::fabs(r - s));
    return drift;
}

// one fourth-order step: triple-jump composition of velocity-Verlet substeps
void step_fr4(const body_system& sys, std::vector<vec3>& pos, std::vector<vec3>& vel,
              std::vector<vec3>& acc, double dt) {
    static const double w1 = 1.0 / (2.0 - std::cbrt(2.0));
    static const double w0 = 1.0 - 2.0 * w1;
    const double weights[3] = {w1, w0, w1};
    for (double w : weights) {
        double dtw = dt * w;
        for (size_t i = 0; i < pos.size(); ++i) {
            vel[i] += 0.5 * dtw * acc[i];
            pos[i] += dtw * vel[i];
        }
        acc = accelerations(sys, pos);
        for (size_t i = 0; i < pos.size(); ++i) vel[i] += 0.5 * dtw * acc[i];
    }
}

}  // namespace

trajectory_report integrate_release(const body_system& sys, double t_end, double dt) {
    if (sys.bodies.size() < 2) throw std::invalid_argument("system needs at least two bodies");
    if (!(t_end > 0.0)) throw std::invalid_argument("t_end must be positive");
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");

    const size_t n = sys.bodies.size();
    std::vector<vec3> pos(n), vel(n);
    for (size_t i = 0; i < n; ++i) pos[i] = sys.bodies[i].position;

    std::vector<double> r0;
    r0.reserve(n * (n - 1) / 2);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) r0.push_back(norm(pos[i] - pos[j]));

    const double e0 = total_energy(sys, pos, vel);
    std::vector<vec3> acc = accelerations(sys, pos);

    trajectory_report report;
    report.times.push_back(0.0);
    report.shape_drift.push_back(0.0);
    report.energy_drift.push_back(0.0);

    double t = 0.0;
    while (t < t_end - 1e-15) {
        double step = std::min(dt, t_end - t);
        std::vector<vec3> p = pos, v = vel, a = acc;
        step_fr4(sys, p, v, a, step);
        double edrift = std::fabs(total_energy(sys, p, v) - e0) / std::fabs(e0);
        if (edrift > energy_reject_tol) {
            dt *= 0.5;
            if (dt < dt_min) throw std::runtime_error("step size fell below the 1e-9 floor");
            continue;
        }
        pos.swap(p);
        vel.swap(v);
        acc.swap(a);
        t += step;

        report.times.push_back(t);
        report.shape_drift.push_back(shape_drift_of(pos, r0));
        report.energy_drift.push_back(edrift);
        report.max_shape_drift = std::max(report.max_shape_drift, report.shape_drift.back());
        report.max_energy_drift = std::max(report.max_energy_drift, edrift);

        vec3 momentum, angular;
        for (size_t i = 0; i < n; ++i) {
            momentum += sys.bodies[i].mass * vel[i];
            angular += sys.bodies[i].mass * cross(pos[i], vel[i]);
        }
        report.max_linear_momentum = std::max(report.max_linear_momentum, norm(momentum));
        report.max_angular_momentum = std::max(report.max_angular_momentum, norm(angular));

        if (min_distance(pos) < close_approach) {
            report.halted_early = true;
            break;
        }
    }
    return report;
}

double collapse_window(const body_system& sys) {
    double lambda = lambda_of(sys);
    double t_free_fall = std::numbers::pi / (2.0 * std::sqrt(2.0 * lambda));
    return std::min(0.2, 0.25 * t_free_fall);
}

}  // namespace polycc
