"""Minimum-distance projection onto the boundary of a convex set.

For distances of the form ``sum_i w_i |x_i - a_i|**p`` with ``p`` in
``(0, 1]``, the closest boundary point to an interior point lies along a
single coordinate axis. This package exposes the projection for three set
descriptions — halfspace systems, vertex hulls, and membership oracles —
plus the independent verification oracles used to cross-check them.

All indices in this API are 0-based; the command-line tool serializes
1-based indices.
"""

from _l1proj import (  # noqa: F401
    AxisCertificateReport,
    AxisLambda,
    ConvexBody,
    DimensionError,
    DomainError,
    Error,
    FacetOracleResult,
    HPolyhedron,
    LpFailure,
    NormSpec,
    NotInteriorError,
    NumericalBreakdown,
    ProjectionResult,
    RadiusHintViolation,
    RatioSampleReport,
    RaySamplingReport,
    VPolytope,
    ZeroRowError,
    __version__,
    axis_boundary_bisect,
    axis_certificate_check,
    facet_l1_oracle,
    hrep_axis_lambdas,
    hrep_is_interior,
    hrep_minmax_distance,
    hrep_project,
    hrep_ray_exit,
    hrep_translate,
    lp_ratio_bound,
    lp_ratio_bound_sampled,
    lq_norm,
    make_ball,
    make_ellipsoid,
    make_hrep_ball,
    make_hrep_body,
    norm_distance,
    oracle_project,
    oracle_ray_exit,
    random_bounded_hpolyhedron,
    ray_sampling_check,
    vrep_axis_lambda,
    vrep_axis_lambdas,
    vrep_contains,
    vrep_is_interior,
    vrep_project,
    vrep_ray_exit,
    vrep_translate,
    weighted_axis_distance,
)

__all__ = [name for name in dir() if not name.startswith("_")]
