#pragma once

#include "l1proj/types.hpp"

#include <cstdint>
#include <functional>

/// Boundary projection for arbitrary bounded convex bodies given only a
/// membership test: the optimum is still attained along a coordinate axis,
/// so 2n doubling-then-bisection searches suffice. Also hosts the
/// L1-versus-Lp ratio bound that separates the p <= 1 regime (where the
/// axis characterization holds) from p > 1 (where it breaks down).
namespace l1proj {

/// Absolute tolerance on each bisected axis step.
inline constexpr double kBisectTol = 1e-9;

/// Convex body described by a closed-set membership predicate. The body
/// must lie within the L-infinity ball of `radius_hint` around any query
/// point used with it. The predicate must behave as a convex indicator:
/// along any ray from an interior point, inside up to some step and
/// outside after. Predicates are invoked serially.
struct ConvexBody {
    std::size_t dimension = 0;
    std::function<bool(const Vector&)> contains;
    double radius_hint = 0.0;
};

/// L-infinity ball of radius r centred at `center` (origin by default).
ConvexBody make_ball(std::size_t dimension, double radius, Vector center = {});

/// Axis-aligned ellipsoid sum_i ((x_i - c_i)/s_i)^2 <= 1.
ConvexBody make_ellipsoid(Vector semi_axes, Vector center = {});

/// Intersection of a halfspace system with a Euclidean ball.
ConvexBody make_hrep_ball(HPolyhedron P, double radius, Vector center = {});

/// Halfspace system wrapped as a membership predicate (for cross-checking
/// the closed-form projector against the bisection path).
ConvexBody make_hrep_body(HPolyhedron P, double radius_hint);

/// Largest step along the signed axis that stays inside the body, found by
/// doubling then bisection, within kBisectTol of the true exit.
/// NotInteriorError if the query point itself fails membership;
/// RadiusHintViolation if the body still contains the point at distance
/// radius_hint (the hint understates the body).
double axis_boundary_bisect(const ConvexBody& body, const Vector& a,
                            std::size_t axis, int sign);

/// Minimum-distance projection of an interior point onto the boundary,
/// from 2n bisections.
ProjectionResult oracle_project(const ConvexBody& body, const Vector& a,
                                const NormSpec& spec = {});

/// max { sum |x_i| : sum |x_i|^p = 1 } over R^n: equals 1 for p <= 1 and
/// n^(1 - 1/p) for p > 1. DomainError for p <= 0. The p > 1 growth is
/// exactly why the axis characterization cannot survive past p = 1.
double lp_ratio_bound(std::size_t n, double p);

/// Monte-Carlo verification of lp_ratio_bound: maximizes sum |x_i| over
/// random points rescaled onto the unit p-sphere. The sampled maximum must
/// stay below bound + 1e-6, and for p > 1 must come within 5% of the bound
/// (the maximizer is the uniform vector, which sampling approaches).
struct RatioSampleReport {
    std::size_t n = 0;
    double p = 1.0;
    double bound = 1.0;
    double sampled_max = 0.0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    bool within_upper = false; ///< sampled_max <= bound + 1e-6
    bool lower_reached = false; ///< sampled_max >= 0.95 * bound (p > 1 only)
    bool passed() const { return within_upper && (p <= 1.0 || lower_reached); }
};

RatioSampleReport lp_ratio_bound_sampled(std::size_t n, double p,
                                         std::size_t samples = 100000,
                                         std::uint64_t seed = 0x1f2e3d4c5b6a79ULL);

} // namespace l1proj
