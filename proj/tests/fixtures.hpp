#pragma once

#include <cmath>
#include <cstdint>

#include "polycc/body_system.hpp"

// Shared across the test binaries: the frozen equal-case roots and a small
// deterministic generator for property draws.

namespace fixtures {

struct solved_point {
    int n;
    bool aligned;    // true: theta = 0, false: theta = pi/N
    double h;
};

// Roots of x - z(h) - y(h) = 0 at a = b = 1, frozen from converged bisection.
// N=2 aligned and N=3/N=2 staggered reduce to closed forms (2 and sqrt 2).
inline constexpr solved_point solved_points[] = {
    {2, true, 2.0},
    {3, true, 1.5871634543947093},
    {4, true, 1.4142135623730951},
    {5, true, 1.3192435359710168},
    {6, true, 1.2585717777234486},
    {7, true, 1.2155335955688741},
    {8, true, 1.1826926797819595},
    {9, true, 1.1563476539319940},
    {10, true, 1.1344698021159620},
    {2, false, 1.4142135623730951},
    {3, false, 1.4142135623730951},
    {4, false, 1.3533896347995550},
    {5, false, 1.2964151918973976},
    {6, false, 1.2497293335542535},
    {7, false, 1.2120414700083962},
    {8, false, 1.1812939808661176},
    {9, false, 1.1557811132133536},
    {10, false, 1.1342381623266792},
};

// lambda = U/I at the aligned roots above, same order as solved_points[0..8]
inline constexpr double aligned_lambda[] = {
    0.3383883476483184, 0.8087273281645565, 1.3431895446745020,
    1.9185465540933870, 2.5253372403381810, 3.1589486124681730,
    3.8163706877201120, 4.4951967990466130, 5.1933690613878060,
};

inline polycc::twist twist_of(const solved_point& sp) {
    return sp.aligned ? polycc::twist::zero() : polycc::twist::half_step();
}

inline polycc::twisted_polygon_params equal_params(const solved_point& sp) {
    return {sp.n, 1.0, 1.0, sp.h, twist_of(sp), 1.0};
}

// splitmix64; keeps the draws identical across platforms and runs
struct test_rng {
    std::uint64_t state;
    explicit test_rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double log_uniform(double lo, double hi) {
        return lo * std::exp(uniform() * std::log(hi / lo));
    }
    int int_range(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace fixtures
