#pragma once

#include "l1proj/oracle.hpp"
#include "l1proj/types.hpp"

#include "json.hpp"

#include <optional>
#include <string>

/// Problem-file parsing and result serialization for the command-line
/// front end. Field names are part of the stable interface; unknown keys
/// are rejected so typos fail loudly. Axis and row indices are 1-based in
/// every serialized document (0-based inside the library), signs are the
/// strings "+" and "-", and infinite lambda entries are the string "inf"
/// (inputs must be finite numbers).
namespace l1proj {

enum class Representation { HRep, VRep, Oracle };

std::string to_string(Representation r);

/// Raw oracle description as found in a problem file; retained verbatim so
/// a parsed problem can be serialized back to an identical document.
struct OracleSpec {
    std::string shape; ///< "ball" | "ellipsoid" | "hrep_ball"
    std::optional<double> radius;     ///< ball, hrep_ball
    std::optional<Vector> semi_axes;  ///< ellipsoid
    std::optional<Matrix> A;          ///< hrep_ball
    std::optional<Vector> b;          ///< hrep_ball
    std::optional<Vector> center;     ///< optional for every shape
    double radius_hint = 0.0;         ///< required: enclosing box half-width

    /// Materializes the membership body, checking that its dimension
    /// matches the query point's.
    ConvexBody build(std::size_t dimension) const;
};

/// One parsed problem file: a set in one of three representations, a query
/// point, and an optional distance specification.
struct ProblemInput {
    Representation representation = Representation::HRep;
    std::optional<HPolyhedron> hrep;
    std::optional<VPolytope> vrep;
    std::optional<OracleSpec> oracle;
    Vector point;
    bool has_norm = false;            ///< whether the file carried a norm object
    double p = 1.0;
    std::optional<Vector> weights;

    std::size_t dim() const { return point.size(); }

    /// Distance specification; DomainError when p is outside (0, 1] or the
    /// weights are inadmissible.
    NormSpec norm() const;
};

/// Parses and validates a problem document. Every structural defect
/// (missing field, wrong type, unknown key, dimension mismatch) raises an
/// Error subtype with a message naming the offending field.
ProblemInput parse_problem(const nlohmann::json& doc);

/// json::parse + parse_problem; malformed JSON raises DomainError.
ProblemInput parse_problem_text(const std::string& text);

/// Reads the file and parses it; unreadable files raise Error.
ProblemInput load_problem(const std::string& path);

/// Serializes back to the problem-file schema. Parsing the result yields a
/// structurally identical ProblemInput (round-trip property).
nlohmann::json problem_to_json(const ProblemInput& input);

/// {"axis": 1-based, "sign": "+"|"-", "lambda": number|"inf",
///  "binding_row": 1-based|null}
nlohmann::json lambda_to_json(const AxisLambda& entry);

/// {"distance", "axis" (1-based), "sign", "boundary_point", "lambda_table"}
nlohmann::json projection_to_json(const ProjectionResult& result);

} // namespace l1proj
