#include "polycc/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "polycc/angles.hpp"
#include "polycc/kahan.hpp"

namespace polycc {

namespace {

void check_kernel_args(int n, double a, double h) {
    if (n < 2) throw std::invalid_argument("N must be at least 2");
    if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument("size ratio a must be positive");
    if (h < 0.0 || !std::isfinite(h)) throw std::invalid_argument("separation h must be nonnegative");
}

double inv_d32(double a, double h, double c) {
    double d = (1.0 - a) * (1.0 - a) + 2.0 * a * (1.0 - c) + h * h;
    if (d <= collision_tolerance * collision_tolerance)
        throw std::domain_error("coincident ring points in kernel sum");
    return 1.0 / (d * std::sqrt(d));
}

}  // namespace

double kernel_x(int n) {
    if (n < 2) throw std::invalid_argument("N must be at least 2");
    kahan_sum s;
    for (int k = 1; k < n; ++k) s.add(1.0 / sin_pi_frac(k, n));
    return 0.25 * s.value();
}

x_pair_sum kernel_x_pair_sum(int n) {
    if (n < 2) throw std::invalid_argument("N must be at least 2");
    kahan_sum re, im, im_scale;
    for (int k = 1; k < n; ++k) {
        double half = sin_pi_frac(k, n);
        double wr = 2.0 * half * half;        // 1 - cos(2k pi/N) without cancellation
        double wi = -sin_pi_frac(2LL * k, n);
        double mod = std::hypot(wr, wi);
        double inv3 = 1.0 / (mod * mod * mod);
        re.add(wr * inv3);
        double t = wi * inv3;
        im.add(t);
        im_scale.add(std::fabs(t));
    }
    return {re.value(), im.value(), im_scale.value()};
}

yz_values kernel_yz(int n, double a, double h, const twist& theta) {
    check_kernel_args(n, a, h);
    kahan_sum y, z;
    if (theta.canonical) {
        for (int k = 1; k <= n; ++k) {
            long long u = 2LL * k + theta.numer;
            double c = cos_pi_frac(u, n);
            double w = inv_d32(a, h, c);
            y.add(c * w);
            z.add(w);
        }
    } else {
        const double ct = std::cos(theta.raw);
        const double st = std::sin(theta.raw);
        for (int k = 1; k <= n; ++k) {
            double c = cos_pi_frac(2LL * k, n) * ct - sin_pi_frac(2LL * k, n) * st;
            double w = inv_d32(a, h, c);
            y.add(c * w);
            z.add(w);
        }
    }
    return {y.value(), z.value()};
}

double check_theta_symmetry(int n, double a, double h, const twist& theta) {
    check_kernel_args(n, a, h);
    if (!(h > 0.0)) throw std::invalid_argument("separation h must be positive");
    if (!theta.canonical)
        throw std::invalid_argument("theta symmetry identity requires theta in {0, pi/N}");
    kahan_sum minus, plus;
    for (int k = 1; k <= n; ++k) {
        double cm = cos_pi_frac(2LL * k - theta.numer, n);
        minus.add(cm * inv_d32(a, h, cm));
        double cp = cos_pi_frac(2LL * k + theta.numer, n);
        plus.add(cp * inv_d32(a, h, cp));
    }
    return std::fabs(minus.value() - plus.value());
}

}  // namespace polycc
