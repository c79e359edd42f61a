#include "l1proj/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

namespace l1proj {

namespace {

Vector resolve_center(Vector center, std::size_t dimension) {
    if (center.empty()) return Vector(dimension, 0.0);
    if (center.size() != dimension)
        throw DimensionError("center dimension does not match the body");
    check_finite(center, "center");
    return center;
}

} // namespace

ConvexBody make_ball(std::size_t dimension, double radius, Vector center) {
    if (dimension < 1) throw DimensionError("body dimension must be >= 1");
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw DomainError("ball radius must be positive and finite");
    Vector c = resolve_center(std::move(center), dimension);
    auto contains = [c, radius](const Vector& x) {
        double acc = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) acc += (x[i] - c[i]) * (x[i] - c[i]);
        return acc <= radius * radius;
    };
    double reach = radius;
    for (double ci : c) reach += std::abs(ci);
    return ConvexBody{dimension, std::move(contains), reach + 1.0};
}

ConvexBody make_ellipsoid(Vector semi_axes, Vector center) {
    const std::size_t n = semi_axes.size();
    if (n < 1) throw DimensionError("body dimension must be >= 1");
    check_finite(semi_axes, "semi-axes");
    for (double s : semi_axes)
        if (!(s > 0.0)) throw DomainError("semi-axes must be positive");
    Vector c = resolve_center(std::move(center), n);
    double reach = *std::max_element(semi_axes.begin(), semi_axes.end());
    for (double ci : c) reach += std::abs(ci);
    auto contains = [s = std::move(semi_axes), c](const Vector& x) {
        double acc = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double t = (x[i] - c[i]) / s[i];
            acc += t * t;
        }
        return acc <= 1.0;
    };
    return ConvexBody{n, std::move(contains), reach + 1.0};
}

ConvexBody make_hrep_ball(HPolyhedron P, double radius, Vector center) {
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw DomainError("ball radius must be positive and finite");
    const std::size_t n = P.dim();
    Vector c = resolve_center(std::move(center), n);
    double reach = radius;
    for (double ci : c) reach += std::abs(ci);
    auto contains = [P = std::move(P), c, radius](const Vector& x) {
        double acc = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) acc += (x[i] - c[i]) * (x[i] - c[i]);
        if (acc > radius * radius) return false;
        const Vector lhs = P.A() * x;
        for (std::size_t i = 0; i < lhs.size(); ++i)
            if (lhs[i] > P.b()[i]) return false;
        return true;
    };
    return ConvexBody{n, std::move(contains), reach + 1.0};
}

ConvexBody make_hrep_body(HPolyhedron P, double radius_hint) {
    if (!(radius_hint > 0.0) || !std::isfinite(radius_hint))
        throw DomainError("radius hint must be positive and finite");
    const std::size_t n = P.dim();
    auto contains = [P = std::move(P)](const Vector& x) {
        const Vector lhs = P.A() * x;
        for (std::size_t i = 0; i < lhs.size(); ++i)
            if (lhs[i] > P.b()[i]) return false;
        return true;
    };
    return ConvexBody{n, std::move(contains), radius_hint};
}

double axis_boundary_bisect(const ConvexBody& body, const Vector& a,
                            std::size_t axis, int sign) {
    if (a.size() != body.dimension)
        throw DimensionError("query point dimension does not match the body");
    if (axis >= body.dimension) throw DimensionError("axis index out of range");
    check_finite(a, "query point");
    if (!(body.radius_hint > 0.0))
        throw DomainError("body carries no usable radius hint");
    if (!body.contains(a))
        throw NotInteriorError("query point fails the membership test");

    Vector probe = a;
    const auto inside_at = [&](double t) {
        probe[axis] = a[axis] + sign * t;
        return body.contains(probe);
    };

    const double cap = body.radius_hint;
    if (inside_at(cap))
        throw RadiusHintViolation("body extends to the stated enclosing radius");

    // Doubling phase establishes an inside/outside bracket below the cap.
    double lo = 0.0;
    double hi = std::min(1.0, cap / 2.0);
    while (inside_at(hi)) {
        lo = hi;
        hi = std::min(hi * 2.0, cap);
    }
    while (hi - lo > kBisectTol) {
        const double mid = 0.5 * (lo + hi);
        if (inside_at(mid))
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

ProjectionResult oracle_project(const ConvexBody& body, const Vector& a,
                                const NormSpec& spec) {
    spec.require_dim(body.dimension);
    std::vector<AxisLambda> table;
    table.reserve(2 * body.dimension);
    for (std::size_t j = 0; j < body.dimension; ++j)
        for (int sign : {+1, -1})
            table.push_back(
                AxisLambda{j, sign, axis_boundary_bisect(body, a, j, sign), std::nullopt});
    return select_axis_projection(a, std::move(table), spec);
}

double lp_ratio_bound(std::size_t n, double p) {
    if (n < 1) throw DimensionError("dimension must be >= 1");
    if (!std::isfinite(p) || p <= 0.0) throw DomainError("exponent p must be positive");
    if (p <= 1.0) return 1.0;
    return std::pow(static_cast<double>(n), 1.0 - 1.0 / p);
}

RatioSampleReport lp_ratio_bound_sampled(std::size_t n, double p, std::size_t samples,
                                         std::uint64_t seed) {
    RatioSampleReport report;
    report.n = n;
    report.p = p;
    report.bound = lp_ratio_bound(n, p);
    report.samples = samples;
    report.seed = seed;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> mag(0.0, 1.0);
    Vector x(n);
    double best = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        double norm_p = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = mag(rng);
            norm_p += std::pow(x[i], p);
        }
        if (norm_p <= 0.0) continue;
        // Rescaled onto the unit p-sphere; signs are irrelevant to both sums.
        const double scale = std::pow(norm_p, -1.0 / p);
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) sum += x[i] * scale;
        best = std::max(best, sum);
    }
    report.sampled_max = best;
    report.within_upper = best <= report.bound + 1e-6;
    report.lower_reached = best >= 0.95 * report.bound;
    return report;
}

} // namespace l1proj
