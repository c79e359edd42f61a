#include "l1proj/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace l1proj::lp {

Problem::Problem(std::size_t num_vars)
    : num_vars_(num_vars), objective_(num_vars, 0.0), free_(num_vars, 0) {
    if (num_vars == 0) throw DimensionError("linear program needs at least one variable");
}

void Problem::maximize(Vector objective) {
    if (objective.size() != num_vars_)
        throw DimensionError("objective length does not match the variable count");
    check_finite(objective, "objective");
    objective_ = std::move(objective);
}

void Problem::set_free(std::size_t var) {
    if (var >= num_vars_) throw DimensionError("variable index out of range");
    free_[var] = 1;
}

void Problem::add_eq(Vector coeffs, double rhs) {
    if (coeffs.size() != num_vars_)
        throw DimensionError("constraint length does not match the variable count");
    check_finite(coeffs, "constraint row");
    if (!std::isfinite(rhs)) throw DomainError("constraint right-hand side is not finite");
    rows_.push_back(Row{std::move(coeffs), rhs, true});
}

void Problem::add_le(Vector coeffs, double rhs) {
    if (coeffs.size() != num_vars_)
        throw DimensionError("constraint length does not match the variable count");
    check_finite(coeffs, "constraint row");
    if (!std::isfinite(rhs)) throw DomainError("constraint right-hand side is not finite");
    rows_.push_back(Row{std::move(coeffs), rhs, false});
}

namespace {

constexpr std::size_t kNoColumn = static_cast<std::size_t>(-1);

/// Dense tableau in canonical equality form with an incrementally
/// maintained reduced-cost row.
class Tableau {
public:
    Tableau(const Problem& prob, const Tolerances& tol) : tol_(tol) {
        const std::size_t n_user = prob.num_vars();
        col_pos_.assign(n_user, kNoColumn);
        col_neg_.assign(n_user, kNoColumn);
        std::size_t next = 0;
        for (std::size_t v = 0; v < n_user; ++v) {
            col_pos_[v] = next++;
            if (prob.is_free(v)) col_neg_[v] = next++;
        }
        const std::size_t n_structural = next;
        std::size_t n_slack = 0;
        for (const auto& row : prob.rows())
            if (!row.is_eq) ++n_slack;
        const std::size_t m = prob.rows().size();
        n_cols_ = n_structural + n_slack + m; // worst case: artificial in every row
        first_artificial_ = n_structural + n_slack;

        rows_.assign(m, Vector(n_cols_ + 1, 0.0));
        basis_.assign(m, kNoColumn);
        artificial_.assign(n_cols_, false);

        std::size_t slack = n_structural;
        std::size_t artificial = first_artificial_;
        for (std::size_t i = 0; i < m; ++i) {
            const auto& row = prob.rows()[i];
            Vector& t = rows_[i];
            for (std::size_t v = 0; v < n_user; ++v) {
                t[col_pos_[v]] = row.coeffs[v];
                if (col_neg_[v] != kNoColumn) t[col_neg_[v]] = -row.coeffs[v];
            }
            std::size_t slack_col = kNoColumn;
            if (!row.is_eq) {
                slack_col = slack++;
                t[slack_col] = 1.0;
            }
            t[n_cols_] = row.rhs;
            if (t[n_cols_] < 0.0)
                for (double& x : t) x = -x;

            if (slack_col != kNoColumn && t[slack_col] > 0.0) {
                basis_[i] = slack_col; // slack provides the identity column
            } else {
                const std::size_t a = artificial++;
                t[a] = 1.0;
                artificial_[a] = true;
                basis_[i] = a;
            }
        }
        n_artificials_ = artificial - first_artificial_;

        cost_.assign(n_cols_ + 1, 0.0);
        allowed_.assign(n_cols_, true);
    }

    /// Runs both phases; fills `sol` on the Optimal path.
    Status run(const Problem& prob, Solution& sol) {
        // Phase 1: maximize -(sum of artificials).
        Vector phase1(n_cols_, 0.0);
        for (std::size_t j = first_artificial_; j < first_artificial_ + n_artificials_; ++j)
            phase1[j] = -1.0;
        price(phase1);
        iterate(/*phase1=*/true);
        if (objective_value_ < -tol_.feasibility) return Status::Infeasible;
        drive_out_artificials();
        for (std::size_t j = 0; j < n_cols_; ++j)
            if (artificial_[j]) allowed_[j] = false;

        // Phase 2: the caller's objective over the structural columns.
        Vector phase2(n_cols_, 0.0);
        for (std::size_t v = 0; v < prob.num_vars(); ++v) {
            phase2[col_pos_[v]] = prob.objective()[v];
            if (col_neg_[v] != kNoColumn) phase2[col_neg_[v]] = -prob.objective()[v];
        }
        price(phase2);
        if (!iterate(/*phase1=*/false)) return Status::Unbounded;

        extract(prob, sol);
        return Status::Optimal;
    }

private:
    void price(const Vector& cost) {
        for (std::size_t j = 0; j <= n_cols_; ++j)
            cost_[j] = j < n_cols_ ? cost[j] : 0.0;
        objective_value_ = 0.0;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const double cb = cost[basis_[i]];
            if (cb == 0.0) continue;
            for (std::size_t j = 0; j < n_cols_; ++j) cost_[j] -= cb * rows_[i][j];
            objective_value_ += cb * rows_[i][n_cols_];
        }
    }

    /// Bland's rule in both steps: lowest eligible column enters, and ratio
    /// ties leave by the lowest basic column index. Returns false on an
    /// unbounded phase-2 ray.
    bool iterate(bool phase1) {
        const std::size_t cap = 2000 + 50 * (rows_.size() + n_cols_);
        for (std::size_t iter = 0;; ++iter) {
            if (iter > cap)
                throw NumericalBreakdown("simplex iteration limit exceeded");

            std::size_t entering = kNoColumn;
            for (std::size_t j = 0; j < n_cols_; ++j)
                if (allowed_[j] && cost_[j] > tol_.reduced_cost) {
                    entering = j;
                    break;
                }
            if (entering == kNoColumn) return true;

            std::size_t leaving = kNoColumn;
            double best_ratio = std::numeric_limits<double>::infinity();
            double column_max = -std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const double a = rows_[i][entering];
                column_max = std::max(column_max, a);
                if (a <= tol_.pivot) continue;
                const double ratio = rows_[i][n_cols_] / a;
                if (ratio < best_ratio ||
                    (ratio == best_ratio && leaving != kNoColumn &&
                     basis_[i] < basis_[leaving])) {
                    best_ratio = ratio;
                    leaving = i;
                }
            }
            if (leaving == kNoColumn) {
                if (column_max > 0.0 || phase1)
                    throw NumericalBreakdown(
                        "no admissible pivot above the pivot tolerance");
                return false; // unbounded improving ray
            }
            pivot(leaving, entering);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        Vector& pr = rows_[row];
        const double inv = 1.0 / pr[col];
        for (double& x : pr) x *= inv;
        pr[col] = 1.0; // exact after normalization
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == row) continue;
            eliminate(rows_[i], pr, col);
        }
        const double factor = cost_[col];
        if (factor != 0.0) {
            for (std::size_t j = 0; j <= n_cols_; ++j) cost_[j] -= factor * pr[j];
            objective_value_ += factor * pr[n_cols_];
            cost_[col] = 0.0;
        }
        basis_[row] = col;
    }

    static void eliminate(Vector& target, const Vector& pivot_row, std::size_t col) {
        const double factor = target[col];
        if (factor == 0.0) return;
        for (std::size_t j = 0; j < target.size(); ++j)
            target[j] -= factor * pivot_row[j];
        target[col] = 0.0;
    }

    /// Pivots zero-level artificials out of the basis; rows where no
    /// structural pivot exists encode redundant equations and are dropped.
    void drive_out_artificials() {
        for (std::size_t i = 0; i < rows_.size();) {
            if (!artificial_[basis_[i]]) {
                ++i;
                continue;
            }
            std::size_t col = kNoColumn;
            for (std::size_t j = 0; j < first_artificial_; ++j)
                if (std::abs(rows_[i][j]) > tol_.pivot) {
                    col = j;
                    break;
                }
            if (col != kNoColumn) {
                pivot(i, col);
                ++i;
            } else {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    void extract(const Problem& prob, Solution& sol) const {
        Vector col_value(n_cols_, 0.0);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            col_value[basis_[i]] = rows_[i][n_cols_];
        sol.primal.assign(prob.num_vars(), 0.0);
        double objective = 0.0;
        for (std::size_t v = 0; v < prob.num_vars(); ++v) {
            double x = col_value[col_pos_[v]];
            if (col_neg_[v] != kNoColumn) x -= col_value[col_neg_[v]];
            sol.primal[v] = x;
            objective += prob.objective()[v] * x;
        }
        sol.objective = objective;
    }

    Tolerances tol_;
    std::vector<Vector> rows_; // tableau rows, rhs in the last column
    Vector cost_;              // reduced costs, objective offset unused
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> col_pos_, col_neg_;
    std::vector<bool> artificial_;
    std::vector<bool> allowed_;
    std::size_t n_cols_ = 0;
    std::size_t first_artificial_ = 0;
    std::size_t n_artificials_ = 0;
    double objective_value_ = 0.0;
};

/// Residual verification of an Optimal outcome against the original rows.
void verify_solution(const Problem& prob, const Solution& sol, const Tolerances& tol) {
    double scale = 1.0;
    for (const auto& row : prob.rows()) scale = std::max(scale, std::abs(row.rhs));
    const double limit = 100.0 * tol.feasibility * scale;
    for (const auto& row : prob.rows()) {
        double lhs = 0.0;
        for (std::size_t v = 0; v < prob.num_vars(); ++v) lhs += row.coeffs[v] * sol.primal[v];
        const double violation = row.is_eq ? std::abs(lhs - row.rhs) : lhs - row.rhs;
        if (violation > limit)
            throw NumericalBreakdown("optimal point violates a constraint beyond tolerance");
    }
    for (std::size_t v = 0; v < prob.num_vars(); ++v)
        if (!prob.is_free(v) && sol.primal[v] < -limit)
            throw NumericalBreakdown("optimal point violates a variable bound");
}

} // namespace

Solution solve(const Problem& prob, const Tolerances& tol) {
    Tableau tableau(prob, tol);
    Solution sol;
    sol.status = tableau.run(prob, sol);
    if (sol.status != Status::Optimal) {
        sol.objective = 0.0;
        sol.primal.clear();
    } else {
        verify_solution(prob, sol, tol);
    }
    return sol;
}

} // namespace l1proj::lp
