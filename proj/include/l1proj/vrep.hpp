#pragma once

#include "l1proj/types.hpp"

/// Boundary projection for vertex-represented polytopes. Each signed axis
/// step is the optimum of a small linear program (how far the axis ray
/// stays expressible as a sub-convex combination of the vertices), solved
/// with the lp module; the projection distance is the smallest weighted
/// step, exactly as in the halfspace case.
namespace l1proj {

/// Moves the query point to the origin: every vertex becomes a_k - a.
VPolytope vrep_translate(const VPolytope& V, const Vector& a);

/// Optimal value of  max lambda  s.t.  sign * lambda * e_axis = A mu,
/// sum mu <= 1, mu >= 0, lambda free. Always feasible (lambda = 0), always
/// finite (the feasible set is compact); the value is the largest step
/// along the signed axis that stays inside the polytope. LpFailure wraps
/// any solver breakdown.
double vrep_axis_lambda(const VPolytope& V, std::size_t axis, int sign);

/// All 2n signed axis steps of the origin-form polytope (axis-major,
/// + before -).
std::vector<AxisLambda> vrep_axis_lambdas(const VPolytope& V);

/// True iff all 2n axis steps of the translated polytope exceed the
/// strict-interiority tolerance: positive steps in every signed direction
/// put a full cross-polytope neighborhood of `a` inside the hull, and
/// interiority conversely forces every step positive. This doubles as the
/// interiority probe for the vertex representation.
bool vrep_is_interior(const VPolytope& V, const Vector& a);

/// Hull membership (including the origin): is x = A mu for some mu >= 0
/// with sum mu <= 1, within the solver's feasibility tolerance?
bool vrep_contains(const VPolytope& V, const Vector& x);

/// Minimum-distance projection of an interior point onto the boundary.
ProjectionResult vrep_project(const VPolytope& V, const Vector& a,
                              const NormSpec& spec = {});

} // namespace l1proj
