#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "fixtures.hpp"
#include "polycc/collapse.hpp"
#include "polycc/newtonian.hpp"

using namespace polycc;

namespace {

body_system pair_at_rest(double m1, double m2, double d) {
    body_system sys;
    sys.bodies.push_back({m1, {0.0, 0.0, 0.0}});
    sys.bodies.push_back({m2, {d, 0.0, 0.0}});
    return sys;
}

}  // namespace

TEST_CASE("argument validation") {
    body_system sys = pair_at_rest(1.0, 2.0, 3.0);
    CHECK_THROWS_AS(integrate_release(sys, 0.0, 1e-3), std::invalid_argument);
    CHECK_THROWS_AS(integrate_release(sys, 0.2, 0.0), std::invalid_argument);
    body_system single;
    single.bodies.push_back({1.0, {0.0, 0.0, 0.0}});
    CHECK_THROWS_AS(integrate_release(single, 0.2, 1e-3), std::invalid_argument);
}

TEST_CASE("a released pair keeps its shape and its energy") {
    trajectory_report r = integrate_release(pair_at_rest(1.0, 2.0, 3.0), 0.2, 1e-3);
    REQUIRE(!r.times.empty());
    CHECK(r.times.front() == 0.0);
    CHECK(r.shape_drift.front() == 0.0);
    CHECK(r.times.back() == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(r.times.size() == r.shape_drift.size());
    CHECK(r.times.size() == r.energy_drift.size());
    CHECK(r.max_shape_drift <= 1e-12);
    CHECK(r.max_energy_drift <= 1e-7);
    CHECK(r.max_linear_momentum <= 1e-12);
    CHECK(r.max_angular_momentum <= 1e-12);
    CHECK_FALSE(r.halted_early);
}

TEST_CASE("a released double ring collapses homothetically") {
    twisted_polygon_params p{3, 1.0, 1.0, std::sqrt(2.0), twist::half_step(), 1.0};
    trajectory_report r = integrate_release(build_configuration(p), 0.2, 1e-3);
    CHECK(r.max_shape_drift <= 1e-6);
    CHECK(r.max_energy_drift <= 1e-10);
    CHECK(r.max_linear_momentum <= 1e-12);
    CHECK(r.max_angular_momentum <= 1e-12);
    CHECK_FALSE(r.halted_early);
}

TEST_CASE("doubling the ring separation destroys the homothety") {
    twisted_polygon_params p{3, 1.0, 1.0, 2.0 * std::sqrt(2.0), twist::half_step(), 1.0};
    trajectory_report r = integrate_release(build_configuration(p), 0.2, 1e-3);
    CHECK(r.max_shape_drift > 1e-3);
}

TEST_CASE("a radial free fall ends in a step-size floor error") {
    CHECK_THROWS_AS(integrate_release(pair_at_rest(1.0, 1.0, 0.02), 1.0, 1e-3),
                    std::runtime_error);
}

TEST_CASE("the suggested window stays well clear of total collapse") {
    body_system slow = build_configuration({3, 1.0, 1.0, std::sqrt(2.0), twist::half_step(), 1.0});
    CHECK(collapse_window(slow) == 0.2);

    body_system fast = build_configuration({10, 1.0, 1.0, 1.1344698021159620, twist::zero(), 1.0});
    double lam = lambda_of(fast);
    double expected = 0.25 * std::numbers::pi / (2.0 * std::sqrt(2.0 * lam));
    CHECK(collapse_window(fast) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(collapse_window(fast) < 0.2);
}

TEST_CASE("every solved point passes the dynamics check") {
    for (const auto& sp : fixtures::solved_points) {
        trajectory_report cc =
            integrate_release(build_configuration(fixtures::equal_params(sp)), 0.2, 1e-3);
        CHECK(cc.max_shape_drift <= 1e-6);
        CHECK(cc.max_energy_drift <= 1e-7);

        twisted_polygon_params off = fixtures::equal_params(sp);
        off.h *= 2.0;
        trajectory_report control =
            integrate_release(build_configuration(off), 0.2, 1e-3);
        CHECK(control.max_shape_drift > 1e-3);
    }
}
