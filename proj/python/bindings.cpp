#include "l1proj/hrep.hpp"
#include "l1proj/lp.hpp"
#include "l1proj/oracle.hpp"
#include "l1proj/types.hpp"
#include "l1proj/verify.hpp"
#include "l1proj/vrep.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <random>
#include <utility>
#include <vector>

namespace py = pybind11;

namespace {

using l1proj::Matrix;
using l1proj::Vector;

std::vector<Vector> matrix_rows(const Matrix& m) {
    std::vector<Vector> rows(m.rows(), Vector(m.cols(), 0.0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            rows[i][j] = m(i, j);
        }
    }
    return rows;
}

} // namespace

PYBIND11_MODULE(_l1proj, m) {
    m.doc() = "Minimum-distance projection of an interior point onto the "
              "boundary of a convex set, for weighted sum-of-powers distances "
              "with exponent p in (0, 1]. The optimum moves along a single "
              "coordinate axis; all indices in this module are 0-based.";

    // ---- exceptions -------------------------------------------------------
    static py::exception<l1proj::Error> base_error(m, "Error");
    py::register_exception<l1proj::DimensionError>(m, "DimensionError",
                                                   base_error.ptr());
    py::register_exception<l1proj::DomainError>(m, "DomainError", base_error.ptr());
    py::register_exception<l1proj::ZeroRowError>(m, "ZeroRowError",
                                                 base_error.ptr());
    py::register_exception<l1proj::NotInteriorError>(m, "NotInteriorError",
                                                     base_error.ptr());
    py::register_exception<l1proj::NumericalBreakdown>(m, "NumericalBreakdown",
                                                       base_error.ptr());
    py::register_exception<l1proj::LpFailure>(m, "LpFailure", base_error.ptr());
    py::register_exception<l1proj::RadiusHintViolation>(m, "RadiusHintViolation",
                                                        base_error.ptr());

    // ---- core types -------------------------------------------------------
    py::class_<l1proj::HPolyhedron>(m, "HPolyhedron",
                                    "Halfspace system { x : A x <= b }.")
        .def(py::init([](const std::vector<Vector>& A, const Vector& b) {
                 return l1proj::HPolyhedron(Matrix::from_rows(A), b);
             }),
             py::arg("A"), py::arg("b"))
        .def_property_readonly(
            "A", [](const l1proj::HPolyhedron& p) { return matrix_rows(p.A()); })
        .def_property_readonly("b",
                               [](const l1proj::HPolyhedron& p) { return p.b(); })
        .def_property_readonly("rows", &l1proj::HPolyhedron::rows)
        .def_property_readonly("dim", &l1proj::HPolyhedron::dim);

    py::class_<l1proj::VPolytope>(m, "VPolytope",
                                  "Convex hull of the given points and the origin.")
        .def(py::init<std::vector<Vector>>(), py::arg("vertices"))
        .def_property_readonly(
            "vertices", [](const l1proj::VPolytope& v) { return v.vertices(); })
        .def_property_readonly("size", &l1proj::VPolytope::size)
        .def_property_readonly("dim", &l1proj::VPolytope::dim);

    py::class_<l1proj::NormSpec>(m, "NormSpec",
                                 "Weighted quasi-distance sum_i w_i |x_i - a_i|^p "
                                 "with p in (0, 1].")
        .def(py::init<>())
        .def(py::init<double, std::optional<Vector>>(), py::arg("p"),
             py::arg("weights") = std::nullopt)
        .def_property_readonly("p", &l1proj::NormSpec::p)
        .def_property_readonly(
            "weights", [](const l1proj::NormSpec& s) { return s.weights(); })
        .def_property_readonly("unit_weights", &l1proj::NormSpec::unit_weights);

    py::class_<l1proj::AxisLambda>(m, "AxisLambda",
                                   "Largest admissible step along one signed axis; "
                                   "the step itself is exposed as `lambda_`.")
        .def_readonly("axis", &l1proj::AxisLambda::axis)
        .def_readonly("sign", &l1proj::AxisLambda::sign)
        .def_readonly("lambda_", &l1proj::AxisLambda::lambda)
        .def_readonly("binding_row", &l1proj::AxisLambda::binding_row)
        .def("__repr__", [](const l1proj::AxisLambda& e) {
            return "AxisLambda(axis=" + std::to_string(e.axis) +
                   ", sign=" + std::string(e.sign >= 0 ? "+" : "-") +
                   ", lambda=" + std::to_string(e.lambda) + ")";
        });

    py::class_<l1proj::ProjectionResult>(m, "ProjectionResult")
        .def_readonly("distance", &l1proj::ProjectionResult::distance)
        .def_readonly("axis", &l1proj::ProjectionResult::axis)
        .def_readonly("sign", &l1proj::ProjectionResult::sign)
        .def_readonly("boundary_point", &l1proj::ProjectionResult::boundary_point)
        .def_readonly("lambda_table", &l1proj::ProjectionResult::lambda_table)
        .def("__repr__", [](const l1proj::ProjectionResult& r) {
            return "ProjectionResult(distance=" + std::to_string(r.distance) +
                   ", axis=" + std::to_string(r.axis) +
                   ", sign=" + std::string(r.sign >= 0 ? "+" : "-") + ")";
        });

    m.def("norm_distance", &l1proj::norm_distance, py::arg("x"), py::arg("a"),
          py::arg("spec") = l1proj::NormSpec());
    m.def("weighted_axis_distance", &l1proj::weighted_axis_distance,
          py::arg("lambda_"), py::arg("weight"), py::arg("p"));

    // ---- halfspace representation ----------------------------------------
    m.def("hrep_translate", &l1proj::hrep_translate, py::arg("P"), py::arg("a"));
    m.def("hrep_is_interior", &l1proj::hrep_is_interior, py::arg("P"),
          py::arg("a"));
    m.def("hrep_axis_lambdas", &l1proj::hrep_axis_lambdas, py::arg("P"),
          "Signed axis steps of a system with the origin strictly inside.");
    m.def("hrep_minmax_distance", &l1proj::hrep_minmax_distance, py::arg("P"),
          "min_i b_i / max_j |a_ij|; equals the unweighted p=1 distance.");
    m.def("hrep_project", &l1proj::hrep_project, py::arg("P"), py::arg("a"),
          py::arg("spec") = l1proj::NormSpec());

    // ---- vertex representation --------------------------------------------
    m.def("vrep_translate", &l1proj::vrep_translate, py::arg("V"), py::arg("a"));
    m.def("vrep_is_interior", &l1proj::vrep_is_interior, py::arg("V"),
          py::arg("a"));
    m.def("vrep_contains", &l1proj::vrep_contains, py::arg("V"), py::arg("x"));
    m.def("vrep_axis_lambda", &l1proj::vrep_axis_lambda, py::arg("V"),
          py::arg("axis"), py::arg("sign"));
    m.def("vrep_axis_lambdas", &l1proj::vrep_axis_lambdas, py::arg("V"));
    m.def("vrep_project", &l1proj::vrep_project, py::arg("V"), py::arg("a"),
          py::arg("spec") = l1proj::NormSpec());

    // ---- membership oracles -----------------------------------------------
    py::class_<l1proj::ConvexBody>(
        m, "ConvexBody",
        "Closed convex set described by a membership predicate plus an "
        "enclosing-box half-width (radius_hint) around any query point.")
        .def(py::init([](std::size_t dimension,
                         std::function<bool(const Vector&)> contains,
                         double radius_hint) {
                 l1proj::ConvexBody body;
                 body.dimension = dimension;
                 body.contains = std::move(contains);
                 body.radius_hint = radius_hint;
                 return body;
             }),
             py::arg("dimension"), py::arg("contains"), py::arg("radius_hint"))
        .def_readwrite("dimension", &l1proj::ConvexBody::dimension)
        .def_readwrite("radius_hint", &l1proj::ConvexBody::radius_hint)
        .def("contains",
             [](const l1proj::ConvexBody& b, const Vector& x) {
                 return b.contains(x);
             },
             py::arg("x"));

    m.def("make_ball", &l1proj::make_ball, py::arg("dimension"), py::arg("radius"),
          py::arg("center") = Vector{});
    m.def("make_ellipsoid", &l1proj::make_ellipsoid, py::arg("semi_axes"),
          py::arg("center") = Vector{});
    m.def("make_hrep_ball", &l1proj::make_hrep_ball, py::arg("P"),
          py::arg("radius"), py::arg("center") = Vector{});
    m.def("make_hrep_body", &l1proj::make_hrep_body, py::arg("P"),
          py::arg("radius_hint"));
    m.def("axis_boundary_bisect", &l1proj::axis_boundary_bisect, py::arg("body"),
          py::arg("a"), py::arg("axis"), py::arg("sign"));
    m.def("oracle_project", &l1proj::oracle_project, py::arg("body"), py::arg("a"),
          py::arg("spec") = l1proj::NormSpec());

    m.def("lp_ratio_bound", &l1proj::lp_ratio_bound, py::arg("n"), py::arg("p"),
          "Worst-case ratio between the best single-axis Lp distance and the "
          "true Lp distance to the boundary: 1 for p <= 1, n^(1-1/p) above.");

    py::class_<l1proj::RatioSampleReport>(m, "RatioSampleReport")
        .def_readonly("n", &l1proj::RatioSampleReport::n)
        .def_readonly("p", &l1proj::RatioSampleReport::p)
        .def_readonly("bound", &l1proj::RatioSampleReport::bound)
        .def_readonly("sampled_max", &l1proj::RatioSampleReport::sampled_max)
        .def_readonly("samples", &l1proj::RatioSampleReport::samples)
        .def_readonly("seed", &l1proj::RatioSampleReport::seed)
        .def_readonly("within_upper", &l1proj::RatioSampleReport::within_upper)
        .def_readonly("lower_reached", &l1proj::RatioSampleReport::lower_reached)
        .def("passed", &l1proj::RatioSampleReport::passed);

    m.def("lp_ratio_bound_sampled", &l1proj::lp_ratio_bound_sampled, py::arg("n"),
          py::arg("p"), py::arg("samples") = 100000,
          py::arg("seed") = 0x1f2e3d4c5b6a79ULL);

    // ---- verification oracles ----------------------------------------------
    py::class_<l1proj::FacetOracleResult>(m, "FacetOracleResult")
        .def_readonly("distance", &l1proj::FacetOracleResult::distance)
        .def_readonly("facet", &l1proj::FacetOracleResult::facet)
        .def_readonly("point", &l1proj::FacetOracleResult::point)
        .def_readonly("skipped_rows", &l1proj::FacetOracleResult::skipped_rows);

    m.def("facet_l1_oracle", &l1proj::facet_l1_oracle, py::arg("P"), py::arg("a"),
          py::arg("spec") = l1proj::NormSpec(),
          "Ground-truth boundary distance via one linear program per facet "
          "(p = 1 only).");

    py::class_<l1proj::AxisCertificateReport>(m, "AxisCertificateReport")
        .def_readonly("closure_ok", &l1proj::AxisCertificateReport::closure_ok)
        .def_readonly("boundary_touched",
                      &l1proj::AxisCertificateReport::boundary_touched)
        .def_readonly("offending_point",
                      &l1proj::AxisCertificateReport::offending_point)
        .def_readonly("boundary_contacts",
                      &l1proj::AxisCertificateReport::boundary_contacts)
        .def_readonly("distance", &l1proj::AxisCertificateReport::distance)
        .def_readonly("slack", &l1proj::AxisCertificateReport::slack)
        .def("passed", &l1proj::AxisCertificateReport::passed);

    m.def("axis_certificate_check", &l1proj::axis_certificate_check,
          py::arg("contains"), py::arg("dimension"), py::arg("distance"),
          py::arg("spec") = l1proj::NormSpec(), py::arg("slack") = 1e-7,
          "Checks the 2n scaled axis points: all inside the closure, at least "
          "one on the boundary.");

    py::class_<l1proj::RaySamplingReport>(m, "RaySamplingReport")
        .def_readonly("passed", &l1proj::RaySamplingReport::passed)
        .def_readonly("sampled_min", &l1proj::RaySamplingReport::sampled_min)
        .def_readonly("worst_direction", &l1proj::RaySamplingReport::worst_direction)
        .def_readonly("samples", &l1proj::RaySamplingReport::samples)
        .def_readonly("violations", &l1proj::RaySamplingReport::violations)
        .def_readonly("seed", &l1proj::RaySamplingReport::seed)
        .def_readonly("reported_distance",
                      &l1proj::RaySamplingReport::reported_distance)
        .def_readonly("tolerance", &l1proj::RaySamplingReport::tolerance);

    m.def("ray_sampling_check", &l1proj::ray_sampling_check, py::arg("ray_exit"),
          py::arg("dimension"), py::arg("reported_distance"),
          py::arg("boundary_distance"), py::arg("samples"), py::arg("seed"),
          py::arg("tolerance") = 1e-6);
    m.def("hrep_ray_exit", &l1proj::hrep_ray_exit, py::arg("translated"));
    m.def("vrep_ray_exit", &l1proj::vrep_ray_exit, py::arg("translated"));
    m.def("oracle_ray_exit", &l1proj::oracle_ray_exit, py::arg("body"),
          py::arg("a"));
    m.def("lq_norm", &l1proj::lq_norm, py::arg("x"), py::arg("q"));

    m.def(
        "random_bounded_hpolyhedron",
        [](std::uint64_t seed, std::size_t dimension, std::size_t extra_rows) {
            std::mt19937_64 rng(seed);
            return l1proj::random_bounded_hpolyhedron(rng, dimension, extra_rows);
        },
        py::arg("seed"), py::arg("dimension"), py::arg("extra_rows"),
        "Seeded random bounded halfspace system with the origin interior.");

    m.attr("__version__") = "1.0.0";
}
