#include "l1proj/vrep.hpp"

#include "l1proj/lp.hpp"

#include <cmath>
#include <utility>

namespace l1proj {

namespace {

/// max  sign * step  expressible inside the hull along `axis`:
/// variables are (lambda, mu_1..mu_m).
lp::Problem axis_step_program(const VPolytope& V, std::size_t axis, int sign) {
    const std::size_t n = V.dim();
    const std::size_t m = V.size();
    lp::Problem prob(1 + m);
    Vector objective(1 + m, 0.0);
    objective[0] = 1.0;
    prob.maximize(std::move(objective));
    prob.set_free(0);

    for (std::size_t r = 0; r < n; ++r) {
        Vector row(1 + m, 0.0);
        row[0] = (r == axis) ? static_cast<double>(sign) : 0.0;
        for (std::size_t k = 0; k < m; ++k) row[1 + k] = -V.vertices()[k][r];
        prob.add_eq(std::move(row), 0.0);
    }
    Vector hull_row(1 + m, 0.0);
    for (std::size_t k = 0; k < m; ++k) hull_row[1 + k] = 1.0;
    prob.add_le(std::move(hull_row), 1.0);
    return prob;
}

} // namespace

VPolytope vrep_translate(const VPolytope& V, const Vector& a) {
    if (a.size() != V.dim())
        throw DimensionError("query point dimension does not match the polytope");
    check_finite(a, "query point");
    std::vector<Vector> vertices = V.vertices();
    for (auto& v : vertices)
        for (std::size_t i = 0; i < a.size(); ++i) v[i] -= a[i];
    return VPolytope(std::move(vertices));
}

double vrep_axis_lambda(const VPolytope& V, std::size_t axis, int sign) {
    if (axis >= V.dim()) throw DimensionError("axis index out of range");
    lp::Solution sol;
    try {
        sol = lp::solve(axis_step_program(V, axis, sign));
    } catch (const NumericalBreakdown& e) {
        throw LpFailure(std::string("axis step program failed: ") + e.what());
    }
    if (sol.status != lp::Status::Optimal)
        throw LpFailure("axis step program did not reach an optimum");
    return sol.objective;
}

std::vector<AxisLambda> vrep_axis_lambdas(const VPolytope& V) {
    std::vector<AxisLambda> table;
    table.reserve(2 * V.dim());
    for (std::size_t j = 0; j < V.dim(); ++j)
        for (int sign : {+1, -1})
            table.push_back(AxisLambda{j, sign, vrep_axis_lambda(V, j, sign), std::nullopt});
    return table;
}

bool vrep_is_interior(const VPolytope& V, const Vector& a) {
    const VPolytope translated = vrep_translate(V, a);
    for (std::size_t j = 0; j < translated.dim(); ++j)
        for (int sign : {+1, -1})
            if (vrep_axis_lambda(translated, j, sign) <= kInteriorTol) return false;
    return true;
}

bool vrep_contains(const VPolytope& V, const Vector& x) {
    if (x.size() != V.dim())
        throw DimensionError("point dimension does not match the polytope");
    const std::size_t m = V.size();
    lp::Problem prob(m); // mu only; feasibility decides membership
    for (std::size_t r = 0; r < V.dim(); ++r) {
        Vector row(m, 0.0);
        for (std::size_t k = 0; k < m; ++k) row[k] = V.vertices()[k][r];
        prob.add_eq(std::move(row), x[r]);
    }
    Vector hull_row(m, 1.0);
    prob.add_le(std::move(hull_row), 1.0);
    return lp::solve(prob).status == lp::Status::Optimal;
}

ProjectionResult vrep_project(const VPolytope& V, const Vector& a, const NormSpec& spec) {
    spec.require_dim(V.dim());
    const VPolytope translated = vrep_translate(V, a);
    std::vector<AxisLambda> table = vrep_axis_lambdas(translated);
    for (const AxisLambda& entry : table)
        if (entry.lambda <= kInteriorTol)
            throw NotInteriorError("query point is not interior");
    return select_axis_projection(a, std::move(table), spec);
}

} // namespace l1proj
