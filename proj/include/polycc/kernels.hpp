#pragma once

#include "polycc/body_system.hpp"

namespace polycc {

// The reduced sums through which every central-configuration condition is
// expressed. With rho_k = exp(2 pi i k/N) and theta_k = 2 pi k/N:
//   x = sum_{k=1..N-1} (1 - rho_k)/|1 - rho_k|^3            (real)
//   y = sum_{k=1..N}   cos(theta_k + theta)/D_k^{3/2}
//   z = sum_{k=1..N}   1/D_k^{3/2}
// where D_k = 1 + a^2 - 2a cos(theta_k + theta) + h^2.

struct yz_values {
    double y = 0.0;
    double z = 0.0;
};

// Closed form x = (1/4) sum csc(k pi/N).
double kernel_x(int n);

// The same x evaluated as the complex pair sum; the imaginary part cancels in
// exact arithmetic and is returned along with the summed magnitude of the
// imaginary terms so callers can judge the cancellation quality.
struct x_pair_sum {
    double re = 0.0;
    double im = 0.0;
    double im_term_scale = 0.0;
};
x_pair_sum kernel_x_pair_sum(int n);

yz_values kernel_yz(int n, double a, double h, const twist& theta);

// |sum cos(theta_k - theta)/[...]^{3/2} - sum cos(theta_k + theta)/[...]^{3/2}|,
// which vanishes for theta in {0, pi/N}. Rejects other angles.
double check_theta_symmetry(int n, double a, double h, const twist& theta);

}  // namespace polycc
