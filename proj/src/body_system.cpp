#include "polycc/body_system.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "polycc/angles.hpp"

namespace polycc {

twist twist::from_radians(double radians, int n) {
    if (!std::isfinite(radians)) throw std::invalid_argument("theta must be finite");
    if (n < 2) throw std::invalid_argument("N must be at least 2");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(radians, two_pi);
    if (r < 0.0) r += two_pi;
    constexpr double snap = 1e-12;
    if (r <= snap || two_pi - r <= snap) return zero();
    if (std::fabs(r - std::numbers::pi / n) <= snap) return half_step();
    return {false, 0, r};
}

double twist::radians(int n) const {
    if (!canonical) return raw;
    return numer == 0 ? 0.0 : std::numbers::pi / n;
}

void twisted_polygon_params::validate() const {
    if (n < 2) throw std::invalid_argument("N must be at least 2");
    if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("size ratio a must be positive");
    if (!(b > 0.0) || !std::isfinite(b)) throw std::invalid_argument("mass ratio b must be positive");
    if (!(m > 0.0) || !std::isfinite(m)) throw std::invalid_argument("base mass m must be positive");
    if (h < 0.0 || !std::isfinite(h)) throw std::invalid_argument("separation h must be nonnegative");
    if (!theta.canonical) {
        if (!(theta.raw >= 0.0) || theta.raw >= 2.0 * std::numbers::pi)
            throw std::invalid_argument("theta must lie in [0, 2pi)");
    }
}

body_system build_configuration(const twisted_polygon_params& params) {
    params.validate();
    const int n = params.n;
    body_system sys;
    sys.bodies.reserve(2 * n);
    for (int k = 1; k <= n; ++k) {
        sys.bodies.push_back({params.m, {cos_pi_frac(2LL * k, n), sin_pi_frac(2LL * k, n), 0.0}});
    }
    const double ct = params.theta.canonical ? 0.0 : std::cos(params.theta.raw);
    const double st = params.theta.canonical ? 0.0 : std::sin(params.theta.raw);
    for (int k = 1; k <= n; ++k) {
        double c, s;
        if (params.theta.canonical) {
            long long u = 2LL * k + params.theta.numer;
            c = cos_pi_frac(u, n);
            s = sin_pi_frac(u, n);
        } else {
            double c0 = cos_pi_frac(2LL * k, n);
            double s0 = sin_pi_frac(2LL * k, n);
            c = c0 * ct - s0 * st;
            s = s0 * ct + c0 * st;
        }
        sys.bodies.push_back({params.b * params.m, {params.a * c, params.a * s, params.h}});
    }
    std::pair<int, int> pair;
    if (min_pair_distance(sys, &pair) <= collision_tolerance) {
        throw std::invalid_argument("coincident bodies " + std::to_string(pair.first) + " and " +
                                    std::to_string(pair.second));
    }
    return sys;
}

double total_mass(const body_system& sys) {
    double m = 0.0;
    for (const auto& b : sys.bodies) m += b.mass;
    return m;
}

vec3 center_of_mass(const body_system& sys) {
    vec3 weighted;
    double m = 0.0;
    for (const auto& b : sys.bodies) {
        weighted += b.mass * b.position;
        m += b.mass;
    }
    if (m <= 0.0) throw std::invalid_argument("total mass must be positive");
    return weighted * (1.0 / m);
}

double min_pair_distance(const body_system& sys, std::pair<int, int>* pair) {
    const auto& bs = sys.bodies;
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < bs.size(); ++i) {
        for (size_t j = i + 1; j < bs.size(); ++j) {
            double d = norm(bs[i].position - bs[j].position);
            if (d < best) {
                best = d;
                if (pair) *pair = {static_cast<int>(i), static_cast<int>(j)};
            }
        }
    }
    return best;
}

}  // namespace polycc
