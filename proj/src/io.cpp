#include "l1proj/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <utility>

namespace l1proj {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& message) { throw DomainError(message); }

void require_keys(const json& obj, const std::string& what,
                  const std::set<std::string>& allowed) {
    for (const auto& item : obj.items()) {
        if (allowed.find(item.key()) == allowed.end()) {
            fail("unknown key \"" + item.key() + "\" in " + what);
        }
    }
}

double parse_number(const json& j, const std::string& what) {
    if (!j.is_number()) {
        fail(what + " must be a number");
    }
    const double value = j.get<double>();
    if (!std::isfinite(value)) {
        fail(what + " must be finite");
    }
    return value;
}

Vector parse_vector(const json& j, const std::string& what) {
    if (!j.is_array() || j.empty()) {
        fail(what + " must be a non-empty array of numbers");
    }
    Vector out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(parse_number(j[i], what + "[" + std::to_string(i) + "]"));
    }
    return out;
}

Matrix parse_matrix(const json& j, const std::string& what) {
    if (!j.is_array() || j.empty()) {
        fail(what + " must be a non-empty array of rows");
    }
    std::vector<Vector> rows;
    rows.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        rows.push_back(parse_vector(j[i], what + "[" + std::to_string(i) + "]"));
        if (rows.back().size() != rows.front().size()) {
            fail(what + " rows must all have the same length");
        }
    }
    return Matrix::from_rows(rows);
}

json vector_to_json(const Vector& v) {
    json out = json::array();
    for (const double x : v) {
        out.push_back(x);
    }
    return out;
}

json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j));
        }
        out.push_back(std::move(row));
    }
    return out;
}

OracleSpec parse_oracle(const json& obj, std::size_t dimension) {
    if (!obj.is_object()) {
        fail("oracle must be an object");
    }
    OracleSpec spec;
    if (!obj.contains("shape") || !obj["shape"].is_string()) {
        fail("oracle.shape must be a string");
    }
    spec.shape = obj["shape"].get<std::string>();

    std::set<std::string> allowed = {"shape", "radius_hint", "center"};
    if (spec.shape == "ball") {
        allowed.insert("radius");
    } else if (spec.shape == "ellipsoid") {
        allowed.insert("semi_axes");
    } else if (spec.shape == "hrep_ball") {
        allowed.insert({"A", "b", "radius"});
    } else {
        fail("oracle.shape must be \"ball\", \"ellipsoid\" or \"hrep_ball\"");
    }
    require_keys(obj, "oracle", allowed);

    if (allowed.count("radius")) {
        if (!obj.contains("radius")) {
            fail("oracle.radius is required for shape \"" + spec.shape + "\"");
        }
        spec.radius = parse_number(obj["radius"], "oracle.radius");
        if (*spec.radius <= 0.0) {
            fail("oracle.radius must be positive");
        }
    }
    if (spec.shape == "ellipsoid") {
        if (!obj.contains("semi_axes")) {
            fail("oracle.semi_axes is required for shape \"ellipsoid\"");
        }
        spec.semi_axes = parse_vector(obj["semi_axes"], "oracle.semi_axes");
    }
    if (spec.shape == "hrep_ball") {
        if (!obj.contains("A") || !obj.contains("b")) {
            fail("oracle.A and oracle.b are required for shape \"hrep_ball\"");
        }
        spec.A = parse_matrix(obj["A"], "oracle.A");
        spec.b = parse_vector(obj["b"], "oracle.b");
    }
    if (obj.contains("center")) {
        spec.center = parse_vector(obj["center"], "oracle.center");
        if (spec.center->size() != dimension) {
            throw DimensionError("oracle.center length must match the query point");
        }
    }
    if (!obj.contains("radius_hint")) {
        fail("oracle.radius_hint is required");
    }
    spec.radius_hint = parse_number(obj["radius_hint"], "oracle.radius_hint");
    if (spec.radius_hint <= 0.0) {
        fail("oracle.radius_hint must be positive");
    }
    return spec;
}

} // namespace

std::string to_string(Representation r) {
    switch (r) {
    case Representation::HRep: return "hrep";
    case Representation::VRep: return "vrep";
    case Representation::Oracle: return "oracle";
    }
    return "?";
}

ConvexBody OracleSpec::build(std::size_t dimension) const {
    Vector c = center.value_or(Vector(dimension, 0.0));
    if (c.size() != dimension) {
        throw DimensionError("oracle center length must match the query point");
    }
    ConvexBody body;
    if (shape == "ball") {
        body = make_ball(dimension, radius.value(), std::move(c));
    } else if (shape == "ellipsoid") {
        if (semi_axes->size() != dimension) {
            throw DimensionError("oracle.semi_axes length must match the query point");
        }
        body = make_ellipsoid(*semi_axes, std::move(c));
    } else if (shape == "hrep_ball") {
        if (A->cols() != dimension) {
            throw DimensionError("oracle.A column count must match the query point");
        }
        body = make_hrep_ball(HPolyhedron(*A, *b), radius.value(), std::move(c));
    } else {
        throw DomainError("unknown oracle shape \"" + shape + "\"");
    }
    body.radius_hint = radius_hint; // the file's hint is authoritative
    return body;
}

NormSpec ProblemInput::norm() const {
    return NormSpec(p, weights);
}

ProblemInput parse_problem(const json& doc) {
    if (!doc.is_object()) {
        fail("problem document must be a JSON object");
    }
    require_keys(doc, "problem document",
                 {"representation", "A", "b", "vertices", "oracle", "point", "norm"});

    ProblemInput input;

    if (!doc.contains("representation") || !doc["representation"].is_string()) {
        fail("representation must be a string");
    }
    const std::string rep = doc["representation"].get<std::string>();

    if (!doc.contains("point")) {
        fail("point is required");
    }
    input.point = parse_vector(doc["point"], "point");
    const std::size_t n = input.point.size();

    const auto forbid = [&](const char* key) {
        if (doc.contains(key)) {
            fail(std::string("key \"") + key + "\" is not part of a " + rep + " problem");
        }
    };

    if (rep == "hrep") {
        input.representation = Representation::HRep;
        forbid("vertices");
        forbid("oracle");
        if (!doc.contains("A") || !doc.contains("b")) {
            fail("hrep problems require A and b");
        }
        Matrix A = parse_matrix(doc["A"], "A");
        Vector b = parse_vector(doc["b"], "b");
        if (A.cols() != n) {
            throw DimensionError("A has " + std::to_string(A.cols()) +
                                 " columns but the point has dimension " +
                                 std::to_string(n));
        }
        input.hrep.emplace(std::move(A), std::move(b));
    } else if (rep == "vrep") {
        input.representation = Representation::VRep;
        forbid("A");
        forbid("b");
        forbid("oracle");
        if (!doc.contains("vertices")) {
            fail("vrep problems require vertices");
        }
        const Matrix vertex_rows = parse_matrix(doc["vertices"], "vertices");
        if (vertex_rows.cols() != n) {
            throw DimensionError("vertices have dimension " +
                                 std::to_string(vertex_rows.cols()) +
                                 " but the point has dimension " + std::to_string(n));
        }
        std::vector<Vector> vertices;
        vertices.reserve(vertex_rows.rows());
        for (std::size_t i = 0; i < vertex_rows.rows(); ++i) {
            Vector v(n, 0.0);
            for (std::size_t j = 0; j < n; ++j) {
                v[j] = vertex_rows(i, j);
            }
            vertices.push_back(std::move(v));
        }
        input.vrep.emplace(std::move(vertices));
    } else if (rep == "oracle") {
        input.representation = Representation::Oracle;
        forbid("A");
        forbid("b");
        forbid("vertices");
        if (!doc.contains("oracle")) {
            fail("oracle problems require an oracle object");
        }
        input.oracle = parse_oracle(doc["oracle"], n);
    } else {
        fail("representation must be \"hrep\", \"vrep\" or \"oracle\"");
    }

    if (doc.contains("norm")) {
        const json& norm = doc["norm"];
        if (!norm.is_object()) {
            fail("norm must be an object");
        }
        require_keys(norm, "norm", {"p", "weights"});
        if (!norm.contains("p")) {
            fail("norm.p is required when a norm object is given");
        }
        input.has_norm = true;
        input.p = parse_number(norm["p"], "norm.p");
        if (norm.contains("weights")) {
            input.weights = parse_vector(norm["weights"], "norm.weights");
            if (input.weights->size() != n) {
                throw DimensionError("norm.weights length must match the query point");
            }
        }
    }

    return input;
}

ProblemInput parse_problem_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("invalid JSON: ") + e.what());
    }
    return parse_problem(doc);
}

ProblemInput load_problem(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open input file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_problem_text(buffer.str());
}

json problem_to_json(const ProblemInput& input) {
    json doc = json::object();
    doc["representation"] = to_string(input.representation);
    switch (input.representation) {
    case Representation::HRep:
        doc["A"] = matrix_to_json(input.hrep->A());
        doc["b"] = vector_to_json(input.hrep->b());
        break;
    case Representation::VRep: {
        json vertices = json::array();
        for (const Vector& v : input.vrep->vertices()) {
            vertices.push_back(vector_to_json(v));
        }
        doc["vertices"] = std::move(vertices);
        break;
    }
    case Representation::Oracle: {
        const OracleSpec& spec = *input.oracle;
        json oracle = json::object();
        oracle["shape"] = spec.shape;
        if (spec.radius) {
            oracle["radius"] = *spec.radius;
        }
        if (spec.semi_axes) {
            oracle["semi_axes"] = vector_to_json(*spec.semi_axes);
        }
        if (spec.A) {
            oracle["A"] = matrix_to_json(*spec.A);
            oracle["b"] = vector_to_json(*spec.b);
        }
        if (spec.center) {
            oracle["center"] = vector_to_json(*spec.center);
        }
        oracle["radius_hint"] = spec.radius_hint;
        doc["oracle"] = std::move(oracle);
        break;
    }
    }
    doc["point"] = vector_to_json(input.point);
    if (input.has_norm) {
        json norm = json::object();
        norm["p"] = input.p;
        if (input.weights) {
            norm["weights"] = vector_to_json(*input.weights);
        }
        doc["norm"] = std::move(norm);
    }
    return doc;
}

json lambda_to_json(const AxisLambda& entry) {
    json out = json::object();
    out["axis"] = entry.axis + 1;
    out["sign"] = entry.sign >= 0 ? "+" : "-";
    if (std::isfinite(entry.lambda)) {
        out["lambda"] = entry.lambda;
    } else {
        out["lambda"] = "inf";
    }
    if (entry.binding_row) {
        out["binding_row"] = *entry.binding_row + 1;
    } else {
        out["binding_row"] = nullptr;
    }
    return out;
}

json projection_to_json(const ProjectionResult& result) {
    json out = json::object();
    out["distance"] = result.distance;
    out["axis"] = result.axis + 1;
    out["sign"] = result.sign >= 0 ? "+" : "-";
    out["boundary_point"] = vector_to_json(result.boundary_point);
    json table = json::array();
    for (const AxisLambda& entry : result.lambda_table) {
        table.push_back(lambda_to_json(entry));
    }
    out["lambda_table"] = std::move(table);
    return out;
}

} // namespace l1proj
