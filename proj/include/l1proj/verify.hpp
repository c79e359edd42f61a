#pragma once

#include "l1proj/oracle.hpp"
#include "l1proj/types.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <utility>

/// Independent brute-force oracles used to cross-validate the fast
/// projectors: a per-facet linear-programming route to the true boundary
/// distance, a certificate check on the 2n scaled axis points, and a
/// randomized global-minimality probe over arbitrary directions. All are
/// tolerance-based; none share the ratio-formula code path they check.
namespace l1proj {

// ---------------------------------------------------------------------------
// Facet-restricted LP oracle
// ---------------------------------------------------------------------------

/// Ground-truth boundary distance for a halfspace system: one LP per facet
/// hyperplane, minimizing the weighted L1 move that lands on the hyperplane
/// while staying inside the polyhedron.
struct FacetOracleResult {
    double distance = 0.0;
    std::size_t facet = 0; ///< 0-based row attaining the minimum (lowest wins ties)
    Vector point;          ///< boundary point, original coordinates
    std::vector<std::size_t> skipped_rows; ///< redundant rows whose hyperplane
                                           ///< misses the polyhedron
};

/// Requires p = 1 (the absolute-value split is linear only there) and an
/// interior query point. Rows whose facet LP is infeasible support no
/// boundary point and are skipped, not errors.
FacetOracleResult facet_l1_oracle(const HPolyhedron& P, const Vector& a,
                                  const NormSpec& spec = {});

// ---------------------------------------------------------------------------
// Axis-certificate check
// ---------------------------------------------------------------------------

/// Certificate that a reported distance d is consistent with the axis
/// characterization, evaluated on the translated body: the 2n axis points
/// at weighted distance d must all lie in the closure (tested with the
/// point pulled inward by `slack`), and at least one of them must sit on
/// the boundary (its `slack`-inflated version falls outside). A failure
/// of either fact indicates a projector bug — or a corrupted distance.
struct AxisCertificateReport {
    bool closure_ok = false;
    bool boundary_touched = false;
    std::optional<Vector> offending_point; ///< first closure violation
    std::vector<std::pair<std::size_t, int>> boundary_contacts; ///< (axis, sign), 0-based
    double distance = 0.0;
    double slack = 0.0;
    bool passed() const { return closure_ok && boundary_touched; }
};

/// `contains` is closed-set membership of the translated body (query point
/// at the origin). Axes with zero weight are skipped: no point at positive
/// weighted distance exists along them.
AxisCertificateReport axis_certificate_check(
    const std::function<bool(const Vector&)>& contains, std::size_t dimension,
    double distance, const NormSpec& spec = {}, double slack = 1e-7);

// ---------------------------------------------------------------------------
// Ray-sampling globality check
// ---------------------------------------------------------------------------

/// Exit step along a unit direction from the translated origin; +infinity
/// when the body never ends in that direction.
using RayExit = std::function<double(const Vector&)>;

struct RaySamplingReport {
    bool passed = false;
    double sampled_min = 0.0;
    Vector worst_direction;
    std::size_t samples = 0;
    std::size_t violations = 0;
    std::uint64_t seed = 0;
    double reported_distance = 0.0;
    double tolerance = 0.0;
};

/// Samples uniform directions, walks each to the boundary, and checks that
/// no sampled boundary point beats the reported distance by more than
/// `tolerance`. `boundary_distance` maps a translated boundary point to its
/// distance from the origin (weighted quasi-distance in normal use; any
/// metric when demonstrating the p > 1 breakdown).
RaySamplingReport ray_sampling_check(
    const RayExit& ray_exit, std::size_t dimension, double reported_distance,
    const std::function<double(const Vector&)>& boundary_distance,
    std::size_t samples, std::uint64_t seed, double tolerance = 1e-6);

/// Exact ray exit for a translated halfspace system (origin interior).
RayExit hrep_ray_exit(HPolyhedron translated);

/// LP-based ray exit for a translated vertex-represented polytope.
RayExit vrep_ray_exit(VPolytope translated);

/// Bisection ray exit for a membership-oracle body around query point `a`.
RayExit oracle_ray_exit(ConvexBody body, Vector a);

/// (sum_i |x_i|^q)^(1/q) for q > 0; the genuine Lq norm used when probing
/// exponents above one.
double lq_norm(const Vector& x, double q);

// ---------------------------------------------------------------------------
// Random instances
// ---------------------------------------------------------------------------

/// Random bounded halfspace system with the origin interior: signed box
/// rows guarantee boundedness, `extra_rows` additional random halfspaces
/// with positive right-hand sides keep the origin strictly inside.
HPolyhedron random_bounded_hpolyhedron(std::mt19937_64& rng, std::size_t dimension,
                                       std::size_t extra_rows);

} // namespace l1proj
