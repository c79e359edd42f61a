#include "doctest.h"

#include "l1proj/hrep.hpp"
#include "l1proj/io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>

using namespace l1proj;
using nlohmann::json;

namespace {

const std::string kBoxDoc = R"({
  "representation": "hrep",
  "A": [[1, 0], [-1, 0], [0, 1], [0, -1]],
  "b": [1, 1, 1, 1],
  "point": [0, 0]
})";

const std::string kTriangleDoc = R"({
  "representation": "vrep",
  "vertices": [[2, 0], [0, 2], [-1, -1]],
  "point": [0, 0],
  "norm": {"p": 0.5, "weights": [1, 4]}
})";

const std::string kBallDoc = R"({
  "representation": "oracle",
  "oracle": {"shape": "ball", "radius": 1.0, "center": [0.25, 0.0], "radius_hint": 3.0},
  "point": [0.5, 0]
})";

} // namespace

TEST_CASE("parsing a halfspace-system problem") {
    const ProblemInput input = parse_problem_text(kBoxDoc);
    CHECK(input.representation == Representation::HRep);
    REQUIRE(input.hrep.has_value());
    CHECK(input.hrep->rows() == 4);
    CHECK(input.hrep->dim() == 2);
    CHECK(input.hrep->A()(1, 0) == -1.0);
    CHECK(input.hrep->b()[2] == 1.0);
    CHECK(input.point == Vector{0.0, 0.0});
    CHECK(input.dim() == 2);

    // no norm object: defaults to the unit-weight L1 case
    CHECK_FALSE(input.has_norm);
    CHECK(input.norm().p() == 1.0);
    CHECK(input.norm().unit_weights());
}

TEST_CASE("parsing a vertex-hull problem with a weighted exponent") {
    const ProblemInput input = parse_problem_text(kTriangleDoc);
    CHECK(input.representation == Representation::VRep);
    REQUIRE(input.vrep.has_value());
    CHECK(input.vrep->size() == 3);
    CHECK(input.vrep->vertices()[2] == Vector{-1.0, -1.0});
    CHECK(input.has_norm);
    CHECK(input.p == 0.5);
    REQUIRE(input.weights.has_value());
    CHECK(*input.weights == Vector{1.0, 4.0});
    CHECK(input.norm().weight(1) == 4.0);
}

TEST_CASE("parsing a membership-oracle problem and building the body") {
    const ProblemInput input = parse_problem_text(kBallDoc);
    CHECK(input.representation == Representation::Oracle);
    REQUIRE(input.oracle.has_value());
    CHECK(input.oracle->shape == "ball");
    CHECK(input.oracle->radius == 1.0);
    REQUIRE(input.oracle->center.has_value());

    const ConvexBody body = input.oracle->build(input.dim());
    CHECK(body.dimension == 2);
    CHECK(body.radius_hint == 3.0); // the file's hint wins over the default
    CHECK(body.contains({1.2, 0.0}));
    CHECK_FALSE(body.contains({1.3, 0.0}));
}

TEST_CASE("parsing the other oracle shapes") {
    const ProblemInput ellipse = parse_problem_text(R"({
      "representation": "oracle",
      "oracle": {"shape": "ellipsoid", "semi_axes": [2, 1], "radius_hint": 3},
      "point": [0, 0]
    })");
    const ConvexBody ebody = ellipse.oracle->build(2);
    CHECK(ebody.contains({1.9, 0.0}));
    CHECK_FALSE(ebody.contains({0.0, 1.1}));

    const ProblemInput capped = parse_problem_text(R"({
      "representation": "oracle",
      "oracle": {"shape": "hrep_ball", "A": [[1, 0]], "b": [0.5],
                 "radius": 2.0, "radius_hint": 3},
      "point": [0, 0]
    })");
    const ConvexBody cbody = capped.oracle->build(2);
    CHECK(cbody.contains({0.0, 1.9}));
    CHECK_FALSE(cbody.contains({0.6, 0.0})); // cut off by the halfspace
    CHECK_FALSE(cbody.contains({0.0, 2.1})); // outside the ball
}

TEST_CASE("unknown keys are rejected everywhere") {
    CHECK_THROWS_AS(parse_problem_text(R"({
      "representation": "hrep", "A": [[1, 0]], "b": [1],
      "point": [0, 0], "extra": 1
    })"),
                    DomainError);
    CHECK_THROWS_AS(parse_problem_text(R"({
      "representation": "hrep", "A": [[1, 0]], "b": [1], "point": [0, 0],
      "norm": {"p": 1, "q": 2}
    })"),
                    DomainError);
    // "radius" belongs to balls, not ellipsoids
    CHECK_THROWS_AS(parse_problem_text(R"({
      "representation": "oracle",
      "oracle": {"shape": "ellipsoid", "semi_axes": [1, 1], "radius": 1,
                 "radius_hint": 2},
      "point": [0, 0]
    })"),
                    DomainError);
}

TEST_CASE("representation-specific keys cannot be mixed") {
    CHECK_THROWS_AS(parse_problem_text(R"({
      "representation": "hrep", "A": [[1, 0]], "b": [1],
      "vertices": [[1, 0]], "point": [0, 0]
    })"),
                    DomainError);
    CHECK_THROWS_AS(parse_problem_text(R"({
      "representation": "vrep", "vertices": [[1, 0]], "b": [1], "point": [0, 0]
    })"),
                    DomainError);
}

TEST_CASE("missing and malformed fields fail with clear types") {
    // missing point
    CHECK_THROWS_AS(parse_problem_text(R"({
      "representation": "hrep", "A": [[1, 0]], "b": [1]
    })"),
                    DomainError);
    // hrep without b
    CHECK_THROWS_AS(parse_problem_text(R"({
      "representation": "hrep", "A": [[1, 0]], "point": [0, 0]
    })"),
                    DomainError);
    // unknown representation
    CHECK_THROWS_AS(parse_problem_text(R"({
      "representation": "simplex", "point": [0]
    })"),
                    DomainError);
    // ragged matrix
    CHECK_THROWS_AS(parse_problem_text(R"({
      "representation": "vrep", "vertices": [[1, 0], [1]], "point": [0, 0]
    })"),
                    DomainError);
    // p given as a string
    CHECK_THROWS_AS(parse_problem_text(R"({
      "representation": "hrep", "A": [[1, 0]], "b": [1], "point": [0, 0],
      "norm": {"p": "1"}
    })"),
                    DomainError);
    // empty point array
    CHECK_THROWS_AS(parse_problem_text(R"({
      "representation": "hrep", "A": [[1, 0]], "b": [1], "point": []
    })"),
                    DomainError);
    // zero row in the halfspace matrix
    CHECK_THROWS_AS(parse_problem_text(R"({
      "representation": "hrep", "A": [[0, 0]], "b": [1], "point": [0, 0]
    })"),
                    ZeroRowError);
}

TEST_CASE("dimension mismatches are caught at parse time") {
    CHECK_THROWS_AS(parse_problem_text(R"({
      "representation": "hrep", "A": [[1, 0, 0]], "b": [1], "point": [0, 0]
    })"),
                    DimensionError);
    CHECK_THROWS_AS(parse_problem_text(R"({
      "representation": "vrep", "vertices": [[1]], "point": [0, 0]
    })"),
                    DimensionError);
    CHECK_THROWS_AS(parse_problem_text(R"({
      "representation": "hrep", "A": [[1, 0]], "b": [1], "point": [0, 0],
      "norm": {"p": 1, "weights": [1]}
    })"),
                    DimensionError);
    CHECK_THROWS_AS(parse_problem_text(R"({
      "representation": "oracle",
      "oracle": {"shape": "ball", "radius": 1, "center": [0], "radius_hint": 2},
      "point": [0, 0]
    })"),
                    DimensionError);
    // semi_axes length is checked when the body is built
    const ProblemInput input = parse_problem_text(R"({
      "representation": "oracle",
      "oracle": {"shape": "ellipsoid", "semi_axes": [1, 1, 1], "radius_hint": 2},
      "point": [0, 0]
    })");
    CHECK_THROWS_AS(input.oracle->build(input.dim()), DimensionError);
}

TEST_CASE("the radius hint is mandatory and positive") {
    CHECK_THROWS_AS(parse_problem_text(R"({
      "representation": "oracle",
      "oracle": {"shape": "ball", "radius": 1},
      "point": [0, 0]
    })"),
                    DomainError);
    CHECK_THROWS_AS(parse_problem_text(R"({
      "representation": "oracle",
      "oracle": {"shape": "ball", "radius": 1, "radius_hint": 0},
      "point": [0, 0]
    })"),
                    DomainError);
}

TEST_CASE("an exponent above one parses but is rejected as a distance spec") {
    const ProblemInput input = parse_problem_text(R"({
      "representation": "hrep", "A": [[1, 0]], "b": [1], "point": [0, 0],
      "norm": {"p": 2}
    })");
    CHECK(input.has_norm);
    CHECK(input.p == 2.0);
    CHECK_THROWS_AS(input.norm(), DomainError);
}

TEST_CASE("malformed JSON is reported as invalid JSON") {
    try {
        parse_problem_text("{ not json");
        FAIL("expected a DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("invalid JSON") == 0);
    }
}

TEST_CASE("parse and serialize round-trip to identical documents") {
    for (const std::string* text : {&kBoxDoc, &kTriangleDoc, &kBallDoc}) {
        const json original = json::parse(*text);
        const json first = problem_to_json(parse_problem(original));
        const json second = problem_to_json(parse_problem(first));
        CHECK(first == original);
        CHECK(first == second);
    }
}

TEST_CASE("problems load from disk and unreadable paths fail") {
    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "io_test_problem.json";
    {
        std::ofstream out(path);
        out << kBoxDoc;
    }
    const ProblemInput input = load_problem(path.string());
    CHECK(input.representation == Representation::HRep);
    CHECK(input.hrep->rows() == 4);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(load_problem((path.parent_path() / "missing.json").string()),
                    Error);
}

TEST_CASE("lambda entries serialize with 1-based indices and sign strings") {
    AxisLambda finite{0, +1, 1.5, 2};
    const json f = lambda_to_json(finite);
    CHECK(f["axis"] == 1);
    CHECK(f["sign"] == "+");
    CHECK(f["lambda"] == 1.5);
    CHECK(f["binding_row"] == 3);

    AxisLambda infinite{1, -1, std::numeric_limits<double>::infinity(),
                        std::nullopt};
    const json i = lambda_to_json(infinite);
    CHECK(i["axis"] == 2);
    CHECK(i["sign"] == "-");
    CHECK(i["lambda"] == "inf");
    CHECK(i["binding_row"].is_null());
}

TEST_CASE("projection results serialize with the full lambda table") {
    const HPolyhedron half({{1.0, 1.0}}, {2.0});
    const json out = projection_to_json(hrep_project(half, {0.0, 0.0}));
    CHECK(out["distance"] == 2.0);
    CHECK(out["axis"] == 1);
    CHECK(out["sign"] == "+");
    CHECK(out["boundary_point"] == json::array({2.0, 0.0}));
    REQUIRE(out["lambda_table"].size() == 4);
    CHECK(out["lambda_table"][0]["lambda"] == 2.0);
    CHECK(out["lambda_table"][0]["binding_row"] == 1);
    CHECK(out["lambda_table"][1]["lambda"] == "inf");
    CHECK(out["lambda_table"][1]["binding_row"].is_null());
    CHECK(out["lambda_table"][3]["sign"] == "-");
}
