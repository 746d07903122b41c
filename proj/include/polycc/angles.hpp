#pragma once

#include <cmath>
#include <numbers>

namespace polycc {

// Twist angles that matter are the exact rationals u*pi/N. Keeping the
// multiplier as an integer lets range reduction happen exactly (mod 2N), so
// reindexing identities between sums hold to rounding instead of drifting
// with the size of the raw angle.

// cos(u*pi/N), reduced exactly. Quadrant folding keeps the argument passed to
// std::cos inside [0, pi/2] where the result has no reduction error of its own.
inline double cos_pi_frac(long long u, int n) {
    long long period = 2LL * n;
    long long r = u % period;
    if (r < 0) r += period;
    if (r > n) r = period - r;        // cos(2pi - t) = cos(t)
    double sign = 1.0;
    if (2 * r > n) {                  // cos(pi - t) = -cos(t)
        r = n - r;
        sign = -1.0;
    }
    if (2 * r == n) return 0.0;       // exact quarter turn
    return sign * std::cos(static_cast<double>(r) * std::numbers::pi / n);
}

// sin(u*pi/N), same exact reduction.
inline double sin_pi_frac(long long u, int n) {
    long long period = 2LL * n;
    long long r = u % period;
    if (r < 0) r += period;
    double sign = 1.0;
    if (r > n) {                      // sin(pi + t) = -sin(t)
        r = r - n;
        sign = -1.0;
    }
    if (2 * r > n) r = n - r;         // sin(pi - t) = sin(t)
    if (r == 0) return 0.0;
    if (2 * r == n) return sign;
    return sign * std::sin(static_cast<double>(r) * std::numbers::pi / n);
}

}  // namespace polycc
