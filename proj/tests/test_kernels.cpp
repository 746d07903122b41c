#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "fixtures.hpp"
#include "polycc/kernels.hpp"

using namespace polycc;

TEST_CASE("first-ring sum closed forms") {
    CHECK(kernel_x(2) == 0.25);
    CHECK(kernel_x(3) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(kernel_x(4) == doctest::Approx((1.0 + 2.0 * std::sqrt(2.0)) / 4.0).epsilon(1e-15));
    CHECK(kernel_x(5) == doctest::Approx(1.3763819204711734).epsilon(1e-15));
    CHECK_THROWS_AS(kernel_x(1), std::invalid_argument);
}

TEST_CASE("the two first-ring sum formulas agree") {
    for (int n : {2, 3, 4, 5, 10, 37, 100, 1000}) {
        double xc = kernel_x(n);
        x_pair_sum xp = kernel_x_pair_sum(n);
        CHECK(xc > 0.0);
        CHECK(std::fabs(xp.re - xc) <= 1e-14 * std::max(1.0, xc));
        CHECK(std::fabs(xp.im) <= 1e-11 * std::max(1.0, xp.im_term_scale));
    }
}

TEST_CASE("cross-ring sums at an analytically solvable point") {
    yz_values yz = kernel_yz(3, 1.0, std::sqrt(2.0), twist::half_step());
    double lo = std::pow(6.0, -1.5);
    double hi = std::pow(3.0, -1.5);
    CHECK(yz.y == doctest::Approx(hi - lo).epsilon(1e-14));
    CHECK(yz.z == doctest::Approx(hi * 2.0 + lo).epsilon(1e-14));
}

TEST_CASE("staggered two-body rings have a vanishing cosine sum") {
    CHECK(kernel_yz(2, 1.0, 1.5, twist::half_step()).y == 0.0);
}

TEST_CASE("cross-ring sums decay with separation and with ring size") {
    twist t = twist::zero();
    double z1 = kernel_yz(7, 0.8, 0.5, t).z;
    double z2 = kernel_yz(7, 0.8, 1.0, t).z;
    double z3 = kernel_yz(7, 0.8, 2.0, t).z;
    double z4 = kernel_yz(7, 0.8, 4.0, t).z;
    CHECK(z1 > z2);
    CHECK(z2 > z3);
    CHECK(z3 > z4);

    // at a >> 1 the distance to every far body is a + O(1), so z ~ N/a^3
    // while the cosine-weighted sum cancels to the next order
    yz_values far = kernel_yz(6, 1e4, 0.7, twist::half_step());
    double a3 = 1e12;
    CHECK(std::fabs(a3 * far.z - 6.0) <= 0.02 * 6.0);
    CHECK(far.y > 0.0);
    CHECK(a3 * far.y <= 0.01);
}

TEST_CASE("reindexing the staggered sum by one vertex leaves it unchanged") {
    fixtures::test_rng rng(2024);
    for (int i = 0; i < 200; ++i) {
        int n = rng.int_range(2, 12);
        double a = rng.log_uniform(0.05, 20.0);
        double h = rng.log_uniform(1e-3, 10.0);
        CHECK(check_theta_symmetry(n, a, h, twist::half_step()) <= 1e-13);
    }
    CHECK(check_theta_symmetry(3, 2.0, 0.1, twist::half_step()) <= 1e-13);
    CHECK(check_theta_symmetry(5, 0.7, 1.0, twist::zero()) == 0.0);
    CHECK_THROWS_AS(check_theta_symmetry(5, 0.7, 1.0, twist::from_radians(0.4, 5)),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_theta_symmetry(5, 0.7, 0.0, twist::half_step()),
                    std::invalid_argument);
}

TEST_CASE("raw-angle evaluation matches the exact-angle path") {
    for (int n : {3, 5, 8}) {
        twist raw{false, 0, std::numbers::pi / n};
        yz_values via_raw = kernel_yz(n, 1.3, 0.9, raw);
        yz_values via_exact = kernel_yz(n, 1.3, 0.9, twist::half_step());
        CHECK(via_raw.y == doctest::Approx(via_exact.y).epsilon(1e-12));
        CHECK(via_raw.z == doctest::Approx(via_exact.z).epsilon(1e-12));
    }
}

TEST_CASE("touching rings are rejected in the kernel sums") {
    CHECK_THROWS_AS(kernel_yz(3, 1.0, 0.0, twist::zero()), std::domain_error);
}
