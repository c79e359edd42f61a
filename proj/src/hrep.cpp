#include "l1proj/hrep.hpp"

#include <cassert>
#include <cmath>
#include <limits>

namespace l1proj {

namespace {

Vector translated_rhs(const HPolyhedron& P, const Vector& a) {
    if (a.size() != P.dim())
        throw DimensionError("query point dimension does not match the polyhedron");
    check_finite(a, "query point");
    const Vector shift = P.A() * a;
    Vector rhs = P.b();
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] -= shift[i];
    return rhs;
}

void require_origin_interior(const Vector& b) {
    for (double bi : b)
        if (bi <= kInteriorTol)
            throw NotInteriorError("query point is not interior");
}

} // namespace

HPolyhedron hrep_translate(const HPolyhedron& P, const Vector& a) {
    return HPolyhedron(P.A(), translated_rhs(P, a));
}

bool hrep_is_interior(const HPolyhedron& P, const Vector& a) {
    for (double bi : translated_rhs(P, a))
        if (bi <= kInteriorTol) return false;
    return true;
}

std::vector<AxisLambda> hrep_axis_lambdas(const HPolyhedron& P) {
    require_origin_interior(P.b());
    const std::size_t m = P.rows();
    const std::size_t n = P.dim();
    const double inf = std::numeric_limits<double>::infinity();

    std::vector<AxisLambda> table;
    table.reserve(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        for (int sign : {+1, -1}) {
            AxisLambda entry{j, sign, inf, std::nullopt};
            for (std::size_t i = 0; i < m; ++i) {
                const double a = P.A()(i, j);
                // Only coefficients of the step's own sign can block it.
                if (sign > 0 ? a <= kZeroTol : a >= -kZeroTol) continue;
                const double ratio = P.b()[i] / (sign > 0 ? a : -a);
                if (ratio < entry.lambda) {
                    entry.lambda = ratio;
                    entry.binding_row = i;
                }
            }
            table.push_back(std::move(entry));
        }
    }
    return table;
}

double hrep_minmax_distance(const HPolyhedron& P) {
    require_origin_interior(P.b());
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < P.rows(); ++i) {
        double row_max = 0.0;
        for (std::size_t j = 0; j < P.dim(); ++j)
            row_max = std::max(row_max, std::abs(P.A()(i, j)));
        d = std::min(d, P.b()[i] / row_max);
    }
    return d;
}

ProjectionResult hrep_project(const HPolyhedron& P, const Vector& a, const NormSpec& spec) {
    spec.require_dim(P.dim());
    const HPolyhedron translated(P.A(), translated_rhs(P, a));
    require_origin_interior(translated.b());

    ProjectionResult result =
        select_axis_projection(a, hrep_axis_lambdas(translated), spec);

    // Validated systems always block some axis: every row has a coefficient
    // above tolerance and a strictly positive right-hand side.
    assert(std::isfinite(result.distance));
    // Unweighted p = 1 distances reproduce the minmax ratio bit for bit.
    assert(!(spec.p() == 1.0 && spec.unit_weights()) ||
           result.distance == hrep_minmax_distance(translated));

    return result;
}

} // namespace l1proj
