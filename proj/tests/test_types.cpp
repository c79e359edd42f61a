#include "doctest.h"

#include "l1proj/types.hpp"

#include <cmath>
#include <limits>
#include <random>

using namespace l1proj;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("norm_distance evaluates the weighted sum of powers") {
    CHECK(norm_distance({1.0, 1.0}, {0.0, 0.0}) == 1.0 + 1.0);
    CHECK(norm_distance({3.5, -2.0, 0.25}, {3.5, -2.0, 0.25}) == 0.0);

    // sqrt(2) + 4*sqrt(3), checked against an independent high-precision
    // evaluation.
    const NormSpec spec(0.5, Vector{1.0, 4.0});
    CHECK(norm_distance({2.0, -3.0}, {0.0, 0.0}, spec) ==
          doctest::Approx(8.342416792648605).epsilon(1e-14));
}

TEST_CASE("norm_distance rejects mismatched dimensions") {
    CHECK_THROWS_AS(norm_distance({1.0, 2.0}, {1.0}), DimensionError);
    const NormSpec spec(1.0, Vector{1.0, 2.0, 3.0});
    CHECK_THROWS_AS(norm_distance({1.0, 2.0}, {0.0, 0.0}, spec), DimensionError);
}

TEST_CASE("norm_distance basic metric-like properties on random points") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    std::uniform_real_distribution<double> weight(0.1, 3.0);
    std::uniform_real_distribution<double> exponent(0.1, 1.0);

    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t n = 1 + static_cast<std::size_t>(iter % 5);
        Vector x(n), a(n), w(n), c(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = coord(rng);
            a[i] = coord(rng);
            w[i] = weight(rng);
            c[i] = coord(rng);
        }
        const NormSpec spec(exponent(rng), w);

        const double d = norm_distance(x, a, spec);
        CHECK(d >= 0.0);
        // symmetry
        CHECK(norm_distance(a, x, spec) == doctest::Approx(d).epsilon(1e-13));
        // zero iff equal (all weights positive here)
        CHECK(norm_distance(x, x, spec) == 0.0);
        if (x != a) {
            CHECK(d > 0.0);
        }
        // translation invariance
        Vector xs(n), as(n);
        for (std::size_t i = 0; i < n; ++i) {
            xs[i] = x[i] + c[i];
            as[i] = a[i] + c[i];
        }
        CHECK(norm_distance(xs, as, spec) == doctest::Approx(d).epsilon(1e-12));
    }
}

TEST_CASE("norm_distance is homogeneous of degree p along any axis") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coord(-4.0, 4.0);
    std::uniform_real_distribution<double> step(-6.0, 6.0);

    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t n = 2 + static_cast<std::size_t>(iter % 4);
        Vector a(n), w(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = coord(rng);
            w[i] = 0.25 + std::abs(coord(rng));
        }
        const double p = (iter % 2 == 0) ? 1.0 : 0.5;
        const NormSpec spec(p, w);
        const std::size_t j = iter % n;
        const double t = step(rng);

        Vector x = a;
        x[j] += t;
        CHECK(norm_distance(x, a, spec) ==
              doctest::Approx(w[j] * std::pow(std::abs(t), p)).epsilon(1e-13));
    }
}

TEST_CASE("halfspace systems validate their structure") {
    CHECK_NOTHROW(HPolyhedron({{1.0, 0.0}, {0.0, 1.0}}, {1.0, 1.0}));

    // entirely zero row
    CHECK_THROWS_AS(HPolyhedron({{0.0, 0.0}}, {1.0}), ZeroRowError);
    try {
        HPolyhedron({{1.0, 0.0}, {0.0, 0.0}}, {1.0, 1.0});
        FAIL("expected ZeroRowError");
    } catch (const ZeroRowError& e) {
        CHECK(e.row == 1);
    }

    // a row below the zero tolerance counts as zero
    try {
        HPolyhedron({{1e-15, 1e-15}}, {1.0});
        FAIL("expected ZeroRowError");
    } catch (const ZeroRowError& e) {
        CHECK(e.row == 0);
    }
    // entries above the tolerance survive
    CHECK_NOTHROW(HPolyhedron({{1e-11, 0.0}}, {1.0}));

    CHECK_THROWS_AS(HPolyhedron({{1.0, 0.0}}, {1.0, 2.0}), DimensionError);
    CHECK_THROWS_AS(HPolyhedron({{1.0, std::nan("")}}, {1.0}), DomainError);
    CHECK_THROWS_AS(HPolyhedron({{1.0, 0.0}}, {kInf}), DomainError);
}

TEST_CASE("vertex lists validate their structure") {
    CHECK_NOTHROW(VPolytope({{2.0, 0.0}, {0.0, 2.0}, {-1.0, -1.0}}));
    CHECK_THROWS_AS(VPolytope({}), DimensionError);
    CHECK_THROWS_AS(VPolytope({{1.0, 2.0}, {1.0}}), DimensionError);
    CHECK_THROWS_AS(VPolytope({{1.0, std::nan("")}}), DomainError);
}

TEST_CASE("distance specifications validate p and the weights") {
    CHECK_NOTHROW(NormSpec(1.0));
    CHECK_NOTHROW(NormSpec(0.25));
    CHECK_THROWS_AS(NormSpec(0.0), DomainError);
    CHECK_THROWS_AS(NormSpec(-1.0), DomainError);
    CHECK_THROWS_AS(NormSpec(1.5), DomainError); // axis optimality fails above 1
    CHECK_THROWS_AS(NormSpec(std::nan("")), DomainError);

    CHECK_THROWS_AS(NormSpec(1.0, Vector{1.0, -0.5}), DomainError);
    CHECK_THROWS_AS(NormSpec(1.0, Vector{0.0, 0.0}), DomainError);
    CHECK_NOTHROW(NormSpec(1.0, Vector{0.0, 2.0})); // single zero weight is fine

    const NormSpec spec(1.0, Vector{1.0, 2.0});
    CHECK_NOTHROW(spec.require_dim(2));
    CHECK_THROWS_AS(spec.require_dim(3), DimensionError);
    CHECK(spec.weight(1) == 2.0);
    CHECK(NormSpec().unit_weights());
}

TEST_CASE("weighted axis comparison keeps unreachable directions unreachable") {
    CHECK(weighted_axis_distance(kInf, 0.0, 1.0) == kInf);
    CHECK(weighted_axis_distance(kInf, 2.0, 0.5) == kInf);
    CHECK(weighted_axis_distance(2.0, 3.0, 1.0) == 6.0);
    CHECK(weighted_axis_distance(4.0, 1.0, 0.5) == doctest::Approx(2.0));
    CHECK(weighted_axis_distance(0.0, 5.0, 0.5) == 0.0);
}

TEST_CASE("matrix helpers") {
    const Matrix m{{1.0, 2.0}, {3.0, 4.0}};
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 2);
    const Vector prod = m * Vector{1.0, -1.0};
    CHECK(prod == Vector{-1.0, -1.0});
    CHECK_THROWS_AS(m * Vector{1.0}, DimensionError);
    CHECK_THROWS_AS(Matrix::from_rows({{1.0, 2.0}, {1.0}}), DimensionError);
}

TEST_CASE("axis selection scans axis-major with + before - and strict <") {
    std::vector<AxisLambda> table;
    table.push_back({0, +1, 2.0, std::nullopt});
    table.push_back({0, -1, 1.0, std::nullopt});
    table.push_back({1, +1, 1.0, std::nullopt});
    table.push_back({1, -1, 1.0, std::nullopt});

    const ProjectionResult r = select_axis_projection({0.5, 0.5}, table, NormSpec());
    CHECK(r.distance == 1.0);
    CHECK(r.axis == 0); // first entry attaining the minimum wins
    CHECK(r.sign == -1);
    CHECK(r.boundary_point == Vector{-0.5, 0.5});
    CHECK(r.lambda_table.size() == 4);
}

TEST_CASE("axis selection with every direction unbounded is an error") {
    std::vector<AxisLambda> table;
    table.push_back({0, +1, kInf, std::nullopt});
    table.push_back({0, -1, kInf, std::nullopt});
    CHECK_THROWS_AS(select_axis_projection({0.0}, table, NormSpec()), DomainError);
}

TEST_CASE("weights steer the selected axis") {
    std::vector<AxisLambda> table;
    table.push_back({0, +1, 1.0, std::nullopt});
    table.push_back({0, -1, 1.0, std::nullopt});
    table.push_back({1, +1, 1.0, std::nullopt});
    table.push_back({1, -1, 1.0, std::nullopt});

    const NormSpec spec(1.0, Vector{4.0, 1.0});
    const ProjectionResult r = select_axis_projection({0.0, 0.0}, table, spec);
    CHECK(r.distance == 1.0); // 1 * 1 beats 4 * 1
    CHECK(r.axis == 1);
    CHECK(r.sign == +1);
}
