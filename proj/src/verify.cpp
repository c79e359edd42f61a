#include "l1proj/verify.hpp"

#include "l1proj/hrep.hpp"
#include "l1proj/lp.hpp"
#include "l1proj/vrep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace l1proj {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

} // namespace

// ---------------------------------------------------------------------------
// Facet-restricted LP oracle
// ---------------------------------------------------------------------------

FacetOracleResult facet_l1_oracle(const HPolyhedron& P, const Vector& a,
                                  const NormSpec& spec) {
    const std::size_t n = P.dim();
    const std::size_t m = P.rows();
    if (a.size() != n) {
        throw DimensionError("query point has dimension " + std::to_string(a.size()) +
                             ", polyhedron has " + std::to_string(n));
    }
    check_finite(a, "query point");
    spec.require_dim(n);
    if (spec.p() != 1.0) {
        throw DomainError("facet oracle requires p = 1; the absolute-value split "
                          "is linear only there");
    }
    if (!hrep_is_interior(P, a)) {
        throw NotInteriorError("query point is not strictly inside the polyhedron");
    }

    const HPolyhedron T = hrep_translate(P, a);
    const Matrix& A = T.A();
    const Vector& rhs = T.b();

    FacetOracleResult result;
    result.distance = kInf;

    // One LP per facet: variables are the positive and negative parts of the
    // move, z = u - v with u, v >= 0, so the weighted L1 objective is linear.
    for (std::size_t i = 0; i < m; ++i) {
        lp::Problem prob(2 * n);
        Vector objective(2 * n, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            objective[j] = -spec.weight(j);
            objective[n + j] = -spec.weight(j);
        }
        prob.maximize(std::move(objective));

        for (std::size_t r = 0; r < m; ++r) {
            Vector coeffs(2 * n, 0.0);
            for (std::size_t j = 0; j < n; ++j) {
                coeffs[j] = A(r, j);
                coeffs[n + j] = -A(r, j);
            }
            if (r == i) {
                prob.add_eq(std::move(coeffs), rhs[r]);
            } else {
                prob.add_le(std::move(coeffs), rhs[r]);
            }
        }

        const lp::Solution sol = lp::solve(prob);
        if (sol.status == lp::Status::Infeasible) {
            // The hyperplane of a redundant constraint can miss the set
            // entirely; it then supports no boundary point.
            result.skipped_rows.push_back(i);
            continue;
        }
        if (sol.status != lp::Status::Optimal) {
            throw LpFailure("facet subproblem " + std::to_string(i) +
                            " reported unbounded; the objective is bounded by "
                            "construction");
        }

        const double distance = -sol.objective;
        if (distance < result.distance) {
            result.distance = distance;
            result.facet = i;
            result.point.assign(n, 0.0);
            for (std::size_t j = 0; j < n; ++j) {
                result.point[j] = a[j] + sol.primal[j] - sol.primal[n + j];
            }
        }
    }

    if (!std::isfinite(result.distance)) {
        throw LpFailure("every facet hyperplane misses the set; the system does "
                        "not bound a region with a boundary");
    }
    return result;
}

// ---------------------------------------------------------------------------
// Axis-certificate check
// ---------------------------------------------------------------------------

AxisCertificateReport axis_certificate_check(
    const std::function<bool(const Vector&)>& contains, std::size_t dimension,
    double distance, const NormSpec& spec, double slack) {
    if (dimension == 0) {
        throw DimensionError("axis certificate needs at least one dimension");
    }
    if (!std::isfinite(distance) || distance <= 0.0) {
        throw DomainError("axis certificate needs a finite positive distance");
    }
    if (!(slack > 0.0)) {
        throw DomainError("axis certificate needs a positive slack");
    }
    spec.require_dim(dimension);

    AxisCertificateReport report;
    report.distance = distance;
    report.slack = slack;
    report.closure_ok = true;

    Vector point(dimension, 0.0);
    for (std::size_t j = 0; j < dimension; ++j) {
        const double w = spec.weight(j);
        if (w <= kZeroTol) {
            continue; // no point at positive weighted distance along this axis
        }
        // Step whose weighted distance from the origin is exactly `distance`.
        const double step = std::pow(distance / w, 1.0 / spec.p());
        const double inner = std::max(step - slack, 0.0);
        const double outer = step + slack;

        for (const int sign : {+1, -1}) {
            point[j] = sign * inner;
            if (!contains(point)) {
                report.closure_ok = false;
                if (!report.offending_point) {
                    report.offending_point = point;
                }
            }
            point[j] = sign * outer;
            if (!contains(point)) {
                report.boundary_contacts.emplace_back(j, sign);
            }
        }
        point[j] = 0.0;
    }

    report.boundary_touched = !report.boundary_contacts.empty();
    return report;
}

// ---------------------------------------------------------------------------
// Ray-sampling globality check
// ---------------------------------------------------------------------------

RaySamplingReport ray_sampling_check(
    const RayExit& ray_exit, std::size_t dimension, double reported_distance,
    const std::function<double(const Vector&)>& boundary_distance,
    std::size_t samples, std::uint64_t seed, double tolerance) {
    if (dimension == 0) {
        throw DimensionError("ray sampling needs at least one dimension");
    }
    if (!std::isfinite(reported_distance)) {
        throw DomainError("ray sampling needs a finite reported distance");
    }

    RaySamplingReport report;
    report.samples = samples;
    report.seed = seed;
    report.reported_distance = reported_distance;
    report.tolerance = tolerance;
    report.sampled_min = kInf;

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    Vector direction(dimension, 0.0);
    Vector point(dimension, 0.0);
    for (std::size_t s = 0; s < samples; ++s) {
        // Gaussian draw normalized to the unit sphere: uniform direction.
        double norm = 0.0;
        do {
            norm = 0.0;
            for (std::size_t j = 0; j < dimension; ++j) {
                direction[j] = gauss(rng);
                norm += direction[j] * direction[j];
            }
            norm = std::sqrt(norm);
        } while (norm < 1e-12);
        for (std::size_t j = 0; j < dimension; ++j) {
            direction[j] /= norm;
        }

        const double t = ray_exit(direction);
        if (!std::isfinite(t)) {
            continue; // the set never ends along this ray
        }
        for (std::size_t j = 0; j < dimension; ++j) {
            point[j] = t * direction[j];
        }
        const double dist = boundary_distance(point);
        if (dist < report.sampled_min) {
            report.sampled_min = dist;
            report.worst_direction = direction;
        }
        if (dist < reported_distance - tolerance) {
            ++report.violations;
        }
    }

    report.passed = report.violations == 0;
    return report;
}

RayExit hrep_ray_exit(HPolyhedron translated) {
    for (const double bi : translated.b()) {
        if (!(bi > kInteriorTol)) {
            throw NotInteriorError("translated system must have the origin "
                                   "strictly inside (every b entry positive)");
        }
    }
    return [T = std::move(translated)](const Vector& u) -> double {
        if (u.size() != T.dim()) {
            throw DimensionError("direction has dimension " + std::to_string(u.size()) +
                                 ", polyhedron has " + std::to_string(T.dim()));
        }
        const Matrix& A = T.A();
        const Vector& b = T.b();
        double best = kInf;
        for (std::size_t i = 0; i < A.rows(); ++i) {
            double dot = 0.0;
            for (std::size_t j = 0; j < A.cols(); ++j) {
                dot += A(i, j) * u[j];
            }
            if (dot > kZeroTol) {
                best = std::min(best, b[i] / dot);
            }
        }
        return best;
    };
}

RayExit vrep_ray_exit(VPolytope translated) {
    return [V = std::move(translated)](const Vector& u) -> double {
        const std::size_t n = V.dim();
        if (u.size() != n) {
            throw DimensionError("direction has dimension " + std::to_string(u.size()) +
                                 ", polytope has " + std::to_string(n));
        }
        const std::size_t k = V.size();
        // Variables: exit step t, then one hull coefficient per vertex.
        lp::Problem prob(1 + k);
        Vector objective(1 + k, 0.0);
        objective[0] = 1.0;
        prob.maximize(std::move(objective));
        for (std::size_t r = 0; r < n; ++r) {
            Vector coeffs(1 + k, 0.0);
            coeffs[0] = u[r];
            for (std::size_t v = 0; v < k; ++v) {
                coeffs[1 + v] = -V.vertices()[v][r];
            }
            prob.add_eq(std::move(coeffs), 0.0);
        }
        Vector hull_row(1 + k, 1.0);
        hull_row[0] = 0.0;
        prob.add_le(std::move(hull_row), 1.0);

        const lp::Solution sol = lp::solve(prob);
        if (sol.status != lp::Status::Optimal) {
            throw LpFailure("ray-exit program did not reach an optimum; a "
                            "polytope bounds every ray");
        }
        return sol.objective;
    };
}

RayExit oracle_ray_exit(ConvexBody body, Vector a) {
    if (a.size() != body.dimension) {
        throw DimensionError("query point has dimension " + std::to_string(a.size()) +
                             ", body has " + std::to_string(body.dimension));
    }
    check_finite(a, "query point");
    if (!body.contains(a)) {
        throw NotInteriorError("query point is outside the body");
    }
    if (!(body.radius_hint > 0.0) || !std::isfinite(body.radius_hint)) {
        throw DomainError("body needs a finite positive radius hint");
    }
    return [body = std::move(body), a = std::move(a)](const Vector& u) -> double {
        const std::size_t n = body.dimension;
        if (u.size() != n) {
            throw DimensionError("direction has dimension " + std::to_string(u.size()) +
                                 ", body has " + std::to_string(n));
        }
        double umax = 0.0;
        for (const double c : u) {
            umax = std::max(umax, std::abs(c));
        }
        if (umax <= 0.0) {
            throw DomainError("ray direction must be nonzero");
        }

        Vector probe(n, 0.0);
        const auto inside_at = [&](double t) {
            for (std::size_t j = 0; j < n; ++j) {
                probe[j] = a[j] + t * u[j];
            }
            return body.contains(probe);
        };

        // Everything within the hint box stays below this step; the tiny
        // inflation keeps a body that exactly touches its hint box legal.
        const double cap = body.radius_hint * (1.0 + 1e-9) / umax;
        if (inside_at(cap)) {
            throw RadiusHintViolation("membership holds beyond the stated "
                                      "enclosing radius");
        }

        double lo = 0.0;
        double hi = std::min(1.0, cap / 2.0);
        while (inside_at(hi)) {
            lo = hi;
            if (hi >= cap) {
                break; // unreachable: cap membership already rejected
            }
            hi = std::min(hi * 2.0, cap);
        }
        while (hi - lo > kBisectTol) {
            const double mid = 0.5 * (lo + hi);
            if (inside_at(mid)) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    };
}

double lq_norm(const Vector& x, double q) {
    if (!(q > 0.0)) {
        throw DomainError("exponent must be positive");
    }
    double sum = 0.0;
    for (const double c : x) {
        sum += std::pow(std::abs(c), q);
    }
    return std::pow(sum, 1.0 / q);
}

// ---------------------------------------------------------------------------
// Random instances
// ---------------------------------------------------------------------------

HPolyhedron random_bounded_hpolyhedron(std::mt19937_64& rng, std::size_t dimension,
                                       std::size_t extra_rows) {
    if (dimension == 0) {
        throw DimensionError("instances need at least one dimension");
    }
    std::uniform_real_distribution<double> box_rhs(1.5, 4.0);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::uniform_real_distribution<double> extra_rhs(0.3, 3.0);

    const std::size_t m = 2 * dimension + extra_rows;
    Matrix A(m, dimension, 0.0);
    Vector b(m, 0.0);

    // Signed box rows make the feasible set bounded regardless of the
    // random rows that follow.
    for (std::size_t j = 0; j < dimension; ++j) {
        A(2 * j, j) = 1.0;
        b[2 * j] = box_rhs(rng);
        A(2 * j + 1, j) = -1.0;
        b[2 * j + 1] = box_rhs(rng);
    }

    for (std::size_t r = 2 * dimension; r < m; ++r) {
        double largest = 0.0;
        do {
            largest = 0.0;
            for (std::size_t j = 0; j < dimension; ++j) {
                A(r, j) = coeff(rng);
                largest = std::max(largest, std::abs(A(r, j)));
            }
        } while (largest <= 0.1); // avoid near-zero rows
        b[r] = extra_rhs(rng); // positive: origin stays strictly inside
    }

    return HPolyhedron(std::move(A), std::move(b));
}

} // namespace l1proj
