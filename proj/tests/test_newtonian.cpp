#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "fixtures.hpp"
#include "polycc/newtonian.hpp"

using namespace polycc;

namespace {

body_system two_bodies(double m1, double m2, double d) {
    body_system sys;
    sys.bodies.push_back({m1, {0.0, 0.0, 0.0}});
    sys.bodies.push_back({m2, {d, 0.0, 0.0}});
    return sys;
}

body_system unit_triangle() {
    body_system sys;
    for (int k = 1; k <= 3; ++k) {
        double t = 2.0 * std::numbers::pi * k / 3.0;
        sys.bodies.push_back({1.0, {std::cos(t), std::sin(t), 0.0}});
    }
    return sys;
}

}  // namespace

TEST_CASE("potential of simple pairs") {
    CHECK(potential(two_bodies(1.0, 1.0, 1.0)) == 1.0);
    CHECK(potential(two_bodies(2.0, 3.0, 2.0)) == 3.0);
    CHECK_THROWS_AS(potential(two_bodies(1.0, 1.0, 1e-10)), std::domain_error);
}

TEST_CASE("moment of inertia about the center of mass") {
    body_system sys;
    sys.bodies.push_back({1.0, {-0.5, 0.0, 0.0}});
    sys.bodies.push_back({1.0, {0.5, 0.0, 0.0}});
    CHECK(moment_of_inertia(sys) == 0.5);
    CHECK(lambda_of(sys) == 2.0);

    twisted_polygon_params p{2, 1.0, 1.0, 2.0, twist::zero(), 1.0};
    CHECK(moment_of_inertia(build_configuration(p)) == doctest::Approx(8.0).epsilon(1e-15));
}

TEST_CASE("two bodies always balance") {
    body_system sys = two_bodies(1.0, 2.0, 3.0);
    cc_report r = cc_residual(sys);
    CHECK(r.is_central);
    CHECK(r.max_residual <= 1e-14);
    CHECK(r.lambda == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
    CHECK(r.tolerance == default_central_tolerance);
    REQUIRE(r.residuals.size() == 2);
}

TEST_CASE("the unit equilateral triangle balances") {
    cc_report r = cc_residual(unit_triangle());
    CHECK(r.is_central);
    CHECK(r.max_residual <= 1e-13);
    CHECK(r.lambda == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("solved double-ring point passes the full residual check") {
    twisted_polygon_params p{3, 1.0, 1.0, std::sqrt(2.0), twist::half_step(), 1.0};
    cc_report r = cc_residual(build_configuration(p));
    CHECK(r.is_central);
    CHECK(r.max_residual <= 1e-13);
    CHECK(r.lambda == doctest::Approx(0.9058831224074554).epsilon(1e-13));
}

TEST_CASE("residual vectors sum to zero") {
    twisted_polygon_params p{7, 1.7, 0.3, 0.8, twist::half_step(), 1.5};
    cc_report r = cc_residual(build_configuration(p));
    vec3 s;
    for (const auto& v : r.residuals) s += v;
    CHECK(std::fabs(s.x) <= 1e-12);
    CHECK(std::fabs(s.y) <= 1e-12);
    CHECK(std::fabs(s.z) <= 1e-12);
}

TEST_CASE("residuals are equivariant under a common rotation") {
    twisted_polygon_params p{5, 0.6, 2.0, 1.1, twist::zero(), 1.0};
    body_system sys = build_configuration(p);
    cc_report before = cc_residual(sys);

    const double ca = std::cos(0.6), sa = std::sin(0.6);
    const double cb = std::cos(-1.1), sb = std::sin(-1.1);
    auto rotate = [&](vec3 v) {
        vec3 r1{ca * v.x - sa * v.y, sa * v.x + ca * v.y, v.z};
        return vec3{cb * r1.x + sb * r1.z, r1.y, -sb * r1.x + cb * r1.z};
    };
    body_system rotated = sys;
    for (auto& b : rotated.bodies) b.position = rotate(b.position);
    cc_report after = cc_residual(rotated);

    CHECK(after.lambda == doctest::Approx(before.lambda).epsilon(1e-12));
    for (size_t k = 0; k < sys.bodies.size(); ++k) {
        vec3 mapped = rotate(before.residuals[k]);
        CHECK(norm(mapped - after.residuals[k]) <= 1e-12 * std::max(1.0, norm(mapped)));
    }
}

TEST_CASE("scaling all positions rescales lambda by the inverse cube") {
    body_system sys = build_configuration({4, 0.8, 1.3, 0.9, twist::half_step(), 1.0});
    double lam = lambda_of(sys);
    body_system scaled = sys;
    for (auto& b : scaled.bodies) b.position = 2.5 * b.position;
    CHECK(lambda_of(scaled) == doctest::Approx(lam / (2.5 * 2.5 * 2.5)).epsilon(1e-13));
}

TEST_CASE("accelerations point along the pair line and conserve momentum") {
    body_system sys = two_bodies(1.0, 2.0, 3.0);
    std::vector<vec3> pos{sys.bodies[0].position, sys.bodies[1].position};
    std::vector<vec3> acc = accelerations(sys, pos);
    CHECK(acc[0].x == doctest::Approx(2.0 / 9.0).epsilon(1e-15));
    CHECK(acc[1].x == doctest::Approx(-1.0 / 9.0).epsilon(1e-15));
    CHECK(acc[0].y == 0.0);
    CHECK(acc[0].z == 0.0);

    body_system ring = build_configuration({5, 0.6, 2.0, 1.1, twist::zero(), 1.0});
    std::vector<vec3> rp;
    for (const auto& b : ring.bodies) rp.push_back(b.position);
    std::vector<vec3> ra = accelerations(ring, rp);
    vec3 net;
    for (size_t k = 0; k < ra.size(); ++k) net += ring.bodies[k].mass * ra[k];
    CHECK(max_abs_component(net) <= 1e-13);
}

TEST_CASE("every solved point is central at the default tolerance") {
    for (const auto& sp : fixtures::solved_points) {
        cc_report r = cc_residual(build_configuration(fixtures::equal_params(sp)));
        CHECK(r.is_central);
        CHECK(r.max_residual <= 1e-12);
    }
    for (size_t i = 0; i < 9; ++i) {
        const auto& sp = fixtures::solved_points[i];
        cc_report r = cc_residual(build_configuration(fixtures::equal_params(sp)));
        CHECK(r.lambda == doctest::Approx(fixtures::aligned_lambda[i]).epsilon(1e-12));
    }
}
