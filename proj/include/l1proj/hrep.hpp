#pragma once

#include "l1proj/types.hpp"

/// Boundary projection for halfspace-represented polyhedra. With the query
/// point translated to the origin, the largest admissible step along each
/// signed axis is a closed-form minimum of constraint ratios, and the
/// projection distance is the smallest weighted step. For unit weights and
/// p = 1 this collapses to the minmax ratio formula, which
/// hrep_minmax_distance computes on its own as a reconciliation path.
namespace l1proj {

/// Moves the query point to the origin: returns (A, b - A a).
HPolyhedron hrep_translate(const HPolyhedron& P, const Vector& a);

/// True iff every component of b - A a exceeds the strict-interiority
/// tolerance.
bool hrep_is_interior(const HPolyhedron& P, const Vector& a);

/// The 2n signed axis steps of a polyhedron with the origin interior
/// (every b_i strictly positive; NotInteriorError otherwise).
/// For axis j:  lambda_j^+ = min over rows with a_ij > 0 of b_i / a_ij,
/// lambda_j^- the mirrored ratio over rows with a_ij < 0; +infinity when
/// the index set is empty (unbounded direction). Each finite entry records
/// the row attaining the minimum.
std::vector<AxisLambda> hrep_axis_lambdas(const HPolyhedron& P);

/// min over rows of b_i / max_j |a_ij|; requires the origin interior.
/// Equals the unweighted p = 1 projection distance exactly (identical
/// ratios are formed and compared on both routes).
double hrep_minmax_distance(const HPolyhedron& P);

/// Minimum-distance projection of an interior point onto the boundary.
ProjectionResult hrep_project(const HPolyhedron& P, const Vector& a,
                              const NormSpec& spec = {});

} // namespace l1proj
