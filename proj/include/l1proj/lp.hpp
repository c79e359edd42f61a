#pragma once

#include "l1proj/types.hpp"

/// Self-contained dense two-phase simplex solver for the small linear
/// programs arising from vertex-representation projections and the
/// facet oracle. Bland's anti-cycling rule is always on; problems here
/// are desk-scale, so robustness beats speed.
namespace l1proj::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Tolerances {
    double feasibility = 1e-8;  ///< phase-1 objective and residual acceptance
    double pivot = 1e-10;       ///< smallest admissible pivot magnitude
    double reduced_cost = 1e-9; ///< optimality threshold on reduced costs
};

/// Linear program over `num_vars` decision variables, assembled as
/// maximize c.z subject to equality and <= rows. Variables default to
/// z >= 0; individual variables can be marked free. Free variables are
/// split into positive and negative parts and <= rows receive slack
/// variables when the tableau is built, so the solver always works on
/// one canonical equality form.
class Problem {
public:
    explicit Problem(std::size_t num_vars);

    void maximize(Vector objective);
    void set_free(std::size_t var);
    void add_eq(Vector coeffs, double rhs);
    void add_le(Vector coeffs, double rhs);

    std::size_t num_vars() const { return num_vars_; }
    const Vector& objective() const { return objective_; }
    bool is_free(std::size_t var) const { return free_[var] != 0; }

    struct Row {
        Vector coeffs;
        double rhs = 0.0;
        bool is_eq = false;
    };
    const std::vector<Row>& rows() const { return rows_; }

private:
    std::size_t num_vars_;
    Vector objective_;
    std::vector<char> free_;
    std::vector<Row> rows_;
};

struct Solution {
    Status status = Status::Infeasible;
    double objective = 0.0; ///< defined only when Optimal
    Vector primal;          ///< original variable space; defined only when Optimal
};

/// Two-phase simplex. Deterministic: re-solving the same problem yields
/// the identical status, objective and primal point. Throws
/// NumericalBreakdown when no admissible pivot exists above the pivot
/// tolerance (never silently returns a wrong status).
Solution solve(const Problem& prob, const Tolerances& tol = {});

} // namespace l1proj::lp
