#include "doctest.h"

#include "l1proj/hrep.hpp"
#include "l1proj/oracle.hpp"
#include "l1proj/verify.hpp"

#include <cmath>
#include <random>

using namespace l1proj;

TEST_CASE("bisection finds the boundary of a disk") {
    const ConvexBody disk = make_ball(2, 1.0);
    for (std::size_t axis : {0u, 1u}) {
        for (int sign : {+1, -1}) {
            CHECK(axis_boundary_bisect(disk, {0.0, 0.0}, axis, sign) ==
                  doctest::Approx(1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("bisection respects ellipse semi-axes") {
    const ConvexBody ellipse = make_ellipsoid({2.0, 1.0});
    CHECK(axis_boundary_bisect(ellipse, {0.0, 0.0}, 0, +1) ==
          doctest::Approx(2.0).epsilon(1e-9));
    CHECK(axis_boundary_bisect(ellipse, {0.0, 0.0}, 1, +1) ==
          doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("bisection from an off-center point") {
    const ConvexBody disk = make_ball(2, 1.0);
    CHECK(axis_boundary_bisect(disk, {0.5, 0.0}, 0, +1) ==
          doctest::Approx(0.5).epsilon(1e-9));
    // vertical exit at sqrt(1 - 0.25)
    CHECK(axis_boundary_bisect(disk, {0.5, 0.0}, 1, +1) ==
          doctest::Approx(0.8660254037844386).epsilon(1e-9));
}

TEST_CASE("bisection rejects an exterior start point") {
    const ConvexBody disk = make_ball(2, 1.0);
    CHECK_THROWS_AS(axis_boundary_bisect(disk, {2.0, 0.0}, 0, +1),
                    NotInteriorError);
    CHECK_THROWS_AS(oracle_project(disk, {2.0, 0.0}), NotInteriorError);
}

TEST_CASE("a too-small enclosing radius is detected, not looped on") {
    ConvexBody ball = make_ball(2, 5.0);
    ball.radius_hint = 1.0; // the body extends past the claimed box
    CHECK_THROWS_AS(axis_boundary_bisect(ball, {0.0, 0.0}, 0, +1),
                    RadiusHintViolation);
}

TEST_CASE("oracle projection on the disk and the ellipse") {
    const ConvexBody disk = make_ball(2, 1.0);
    const ProjectionResult rd = oracle_project(disk, {0.0, 0.0});
    CHECK(rd.distance == doctest::Approx(1.0).epsilon(1e-9));

    const ConvexBody ellipse = make_ellipsoid({2.0, 1.0});
    const ProjectionResult re = oracle_project(ellipse, {0.0, 0.0});
    CHECK(re.distance == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(re.axis == 1); // min(2, 1) is along the second axis

    const ProjectionResult ro = oracle_project(disk, {0.5, 0.0});
    CHECK(ro.distance == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(ro.axis == 0);
    CHECK(ro.sign == +1);
}

TEST_CASE("an off-center ball projects toward the near side") {
    const ConvexBody ball = make_ball(2, 1.0, {0.5, 0.0});
    const ProjectionResult r = oracle_project(ball, {0.0, 0.0});
    CHECK(r.distance == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(r.axis == 0);
    CHECK(r.sign == -1);
}

TEST_CASE("halfspace system intersected with a ball") {
    const HPolyhedron box({{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}},
                          {2.0, 2.0, 2.0, 2.0});
    const ConvexBody body = make_hrep_ball(box, 1.5);
    const ProjectionResult r = oracle_project(body, {0.0, 0.0});
    CHECK(r.distance == doctest::Approx(1.5).epsilon(1e-9)); // the ball binds
}

TEST_CASE("membership-wrapped polyhedra agree with the exact projector") {
    std::mt19937_64 rng(401);
    std::uniform_real_distribution<double> offset(-0.3, 0.3);

    for (int iter = 0; iter < 15; ++iter) {
        const std::size_t n = 2 + static_cast<std::size_t>(iter % 3);
        const HPolyhedron P =
            random_bounded_hpolyhedron(rng, n, static_cast<std::size_t>(iter % 5));
        const ConvexBody body = make_hrep_body(P, 5.0);

        Vector a(n, 0.0);
        for (double& c : a) {
            c = offset(rng);
        }
        const ProjectionResult exact = hrep_project(P, a);
        const ProjectionResult sampled = oracle_project(body, a);
        CHECK(std::abs(exact.distance - sampled.distance) <= 2.0 * kBisectTol);
        CHECK(exact.axis == sampled.axis);
        CHECK(exact.sign == sampled.sign);
    }
}

TEST_CASE("axis-to-true-distance ratio bound") {
    CHECK(lp_ratio_bound(4, 1.0) == 1.0);
    CHECK(lp_ratio_bound(2, 0.5) == 1.0);
    CHECK(lp_ratio_bound(7, 0.25) == 1.0);
    CHECK(lp_ratio_bound(4, 2.0) == 2.0); // 4^(1/2)
    CHECK(lp_ratio_bound(9, 3.0) ==
          doctest::Approx(4.326748710922225).epsilon(1e-14)); // 9^(2/3)
    CHECK_THROWS_AS(lp_ratio_bound(3, 0.0), DomainError);
    CHECK_THROWS_AS(lp_ratio_bound(3, -1.0), DomainError);
}

TEST_CASE("sampling brackets the ratio bound") {
    const RatioSampleReport above = lp_ratio_bound_sampled(4, 2.0, 20000);
    CHECK(above.bound == 2.0);
    CHECK(above.within_upper);
    CHECK(above.lower_reached); // the uniform vector attains it; sampling gets close
    CHECK(above.passed());
    CHECK(above.sampled_max <= above.bound + 1e-6);
    CHECK(above.sampled_max >= 0.95 * above.bound);

    const RatioSampleReport at_one = lp_ratio_bound_sampled(3, 1.0, 5000);
    CHECK(at_one.bound == 1.0);
    CHECK(at_one.within_upper);
    CHECK(at_one.passed());

    // deterministic under a fixed seed
    const RatioSampleReport again = lp_ratio_bound_sampled(4, 2.0, 20000);
    CHECK(again.sampled_max == above.sampled_max);
}

TEST_CASE("bisection tolerance is honored on smooth bodies") {
    // |found - true| <= tolerance for analytically known exits
    const ConvexBody ellipse = make_ellipsoid({1.5, 0.75});
    const double lam = axis_boundary_bisect(ellipse, {0.3, 0.1}, 1, -1);
    // x = 0.3 slice: y^2 = 0.75^2 (1 - 0.3^2/1.5^2) -> y = 0.7348469228349534
    const double expected = 0.7348469228349534 + 0.1;
    CHECK(std::abs(lam - expected) <= 2.0 * kBisectTol);
}
