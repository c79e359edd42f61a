#include "l1proj/types.hpp"

#include <cmath>
#include <limits>

namespace l1proj {

ZeroRowError::ZeroRowError(std::size_t row_index)
    : Error("constraint row " + std::to_string(row_index) +
            " is entirely zero (all entries below tolerance)"),
      row(row_index) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, double value)
    : rows_(rows), cols_(cols), data_(rows * cols, value) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw DimensionError("matrix rows have unequal lengths");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    Matrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (const auto& row : rows) {
        if (row.size() != m.cols_)
            throw DimensionError("matrix rows have unequal lengths");
        m.data_.insert(m.data_.end(), row.begin(), row.end());
    }
    return m;
}

Vector operator*(const Matrix& m, const Vector& v) {
    if (v.size() != m.cols())
        throw DimensionError("matrix-vector size mismatch: " + std::to_string(m.cols()) +
                             " columns vs vector of length " + std::to_string(v.size()));
    Vector out(m.rows(), 0.0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

void check_finite(const Vector& v, const std::string& what) {
    for (double x : v)
        if (!std::isfinite(x)) throw DomainError(what + " contains a NaN or infinite entry");
}

void check_finite(const Matrix& m, const std::string& what) {
    for (double x : m.data())
        if (!std::isfinite(x)) throw DomainError(what + " contains a NaN or infinite entry");
}

HPolyhedron::HPolyhedron(Matrix A, Vector b) : a_(std::move(A)), b_(std::move(b)) {
    if (a_.rows() < 1 || a_.cols() < 1)
        throw DimensionError("halfspace system needs at least one row and one column");
    if (b_.size() != a_.rows())
        throw DimensionError("right-hand side has length " + std::to_string(b_.size()) +
                             " but the matrix has " + std::to_string(a_.rows()) + " rows");
    check_finite(a_, "constraint matrix");
    check_finite(b_, "right-hand side");
    for (std::size_t i = 0; i < a_.rows(); ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < a_.cols(); ++j)
            if (std::abs(a_(i, j)) > kZeroTol) {
                nonzero = true;
                break;
            }
        if (!nonzero) throw ZeroRowError(i);
    }
}

VPolytope::VPolytope(std::vector<Vector> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw DimensionError("vertex list is empty");
    const std::size_t n = vertices_.front().size();
    if (n < 1) throw DimensionError("vertices must have dimension >= 1");
    for (const auto& v : vertices_) {
        if (v.size() != n) throw DimensionError("vertices have mixed dimensions");
        check_finite(v, "vertex");
    }
}

NormSpec::NormSpec(double p, std::optional<Vector> weights)
    : p_(p), weights_(std::move(weights)) {
    if (!std::isfinite(p_) || p_ <= 0.0 || p_ > 1.0)
        throw DomainError("exponent p must lie in (0, 1]");
    if (weights_) {
        check_finite(*weights_, "weights");
        bool any_positive = false;
        for (double w : *weights_) {
            if (w < 0.0) throw DomainError("weights must be nonnegative");
            if (w > 0.0) any_positive = true;
        }
        if (!any_positive) throw DomainError("at least one weight must be positive");
    }
}

void NormSpec::require_dim(std::size_t n) const {
    if (weights_ && weights_->size() != n)
        throw DimensionError("weight vector has length " + std::to_string(weights_->size()) +
                             " but the space has dimension " + std::to_string(n));
}

double norm_distance(const Vector& x, const Vector& a, const NormSpec& spec) {
    if (x.size() != a.size())
        throw DimensionError("points have different dimensions");
    spec.require_dim(x.size());
    double acc = 0.0;
    if (spec.p() == 1.0) {
        for (std::size_t i = 0; i < x.size(); ++i)
            acc += spec.weight(i) * std::abs(x[i] - a[i]);
    } else {
        for (std::size_t i = 0; i < x.size(); ++i)
            acc += spec.weight(i) * std::pow(std::abs(x[i] - a[i]), spec.p());
    }
    return acc;
}

double weighted_axis_distance(double lambda, double w, double p) {
    if (std::isinf(lambda)) return std::numeric_limits<double>::infinity();
    if (p == 1.0) return w * lambda;
    return w * std::pow(lambda, p);
}

ProjectionResult select_axis_projection(const Vector& query,
                                        std::vector<AxisLambda> table,
                                        const NormSpec& spec) {
    spec.require_dim(query.size());
    std::size_t best = table.size();
    double best_value = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < table.size(); ++k) {
        const double value =
            weighted_axis_distance(table[k].lambda, spec.weight(table[k].axis), spec.p());
        if (value < best_value) {
            best_value = value;
            best = k;
        }
    }
    if (best == table.size())
        throw DomainError("no finite axis step exists; the boundary is unreachable");

    ProjectionResult result;
    result.distance = best_value;
    result.axis = table[best].axis;
    result.sign = table[best].sign;
    result.boundary_point = query;
    result.boundary_point[result.axis] += result.sign * table[best].lambda;
    result.lambda_table = std::move(table);
    return result;
}

} // namespace l1proj
