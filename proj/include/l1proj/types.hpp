#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

/// Core domain types shared by every solver module: dense matrix/vector
/// storage, the two polyhedron representations, the distance specification,
/// and the projection result. All types validate on construction and are
/// immutable afterwards, so they can be shared freely between threads.
namespace l1proj {

using Vector = std::vector<double>;

/// Entry magnitudes at or below this are treated as zero (zero-row detection,
/// coefficient sign classification).
inline constexpr double kZeroTol = 1e-12;

/// Strict-interiority slack: a point is interior only if every constraint
/// holds with at least this much room.
inline constexpr double kInteriorTol = 1e-12;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mismatched vector/matrix dimensions.
struct DimensionError : Error {
    using Error::Error;
};

/// Value outside the admissible domain (NaN/inf input, p outside (0,1],
/// negative weight, ...).
struct DomainError : Error {
    using Error::Error;
};

/// A constraint row whose entries are all below the zero tolerance.
struct ZeroRowError : Error {
    explicit ZeroRowError(std::size_t row_index);
    std::size_t row; ///< offending row, 0-based
};

/// The query point is not strictly inside the set.
struct NotInteriorError : Error {
    using Error::Error;
};

/// The simplex solver could not make progress within its pivot tolerance.
struct NumericalBreakdown : Error {
    using Error::Error;
};

/// An internal linear program failed where the caller required an optimum.
struct LpFailure : Error {
    using Error::Error;
};

/// A membership oracle claimed points beyond its stated enclosing radius.
struct RadiusHintViolation : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Dense storage
// ---------------------------------------------------------------------------

/// Row-major dense matrix. Desk-scale problems only; no sparsity.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double value = 0.0);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    /// Build from a list of equally long rows.
    static Matrix from_rows(const std::vector<Vector>& rows);

    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<double>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Matrix-vector product; DimensionError if sizes disagree.
Vector operator*(const Matrix& m, const Vector& v);

/// Rejects NaN and +-infinity entries with DomainError. `what` names the
/// offending argument in the message.
void check_finite(const Vector& v, const std::string& what);
void check_finite(const Matrix& m, const std::string& what);

// ---------------------------------------------------------------------------
// Polyhedron representations
// ---------------------------------------------------------------------------

/// Halfspace representation S = { x : A x <= b }.
///
/// Construction validates: at least one row and one column, |b| == rows,
/// finite entries, and no row of A entirely below the zero tolerance
/// (a zero row would encode either a vacuous or an infeasible constraint,
/// never a usable facet).
class HPolyhedron {
public:
    HPolyhedron(Matrix A, Vector b);

    const Matrix& A() const { return a_; }
    const Vector& b() const { return b_; }
    std::size_t rows() const { return a_.rows(); }
    std::size_t dim() const { return a_.cols(); }

private:
    Matrix a_;
    Vector b_;
};

/// Vertex representation S = { sum_k a_k mu_k : mu >= 0, sum_k mu_k <= 1 },
/// i.e. the convex hull of the stored points together with the origin.
class VPolytope {
public:
    explicit VPolytope(std::vector<Vector> vertices);

    const std::vector<Vector>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    std::size_t dim() const { return vertices_.front().size(); }

private:
    std::vector<Vector> vertices_;
};

// ---------------------------------------------------------------------------
// Distance specification
// ---------------------------------------------------------------------------

/// Weighted quasi-distance  d(x, a) = sum_i w_i |x_i - a_i|^p  with
/// p in (0, 1] and nonnegative weights (unit weights when none given).
/// Individual zero weights are allowed; all-zero weights are not.
class NormSpec {
public:
    NormSpec() = default; ///< p = 1, unit weights
    explicit NormSpec(double p, std::optional<Vector> weights = std::nullopt);

    double p() const { return p_; }
    const std::optional<Vector>& weights() const { return weights_; }

    /// Weight of axis j (1 when unweighted). No bounds check.
    double weight(std::size_t j) const { return weights_ ? (*weights_)[j] : 1.0; }

    bool unit_weights() const { return !weights_.has_value(); }

    /// DimensionError unless explicit weights (if any) have length n.
    void require_dim(std::size_t n) const;

private:
    double p_ = 1.0;
    std::optional<Vector> weights_;
};

/// sum_i w_i |x_i - a_i|^p. DimensionError on size mismatch.
double norm_distance(const Vector& x, const Vector& a, const NormSpec& spec = {});

/// w * lambda^p as used for comparing axis candidates; +infinity stays
/// +infinity even under a zero weight (an unreachable direction can never
/// certify a projection).
double weighted_axis_distance(double lambda, double w, double p);

// ---------------------------------------------------------------------------
// Projection results
// ---------------------------------------------------------------------------

/// Largest admissible step along one signed axis of the translated set.
/// `lambda` is +infinity when the set is unbounded in that direction;
/// `binding_row` identifies the constraint attaining the step (halfspace
/// representation only, absent otherwise or when infinite).
struct AxisLambda {
    std::size_t axis = 0; ///< 0-based; serialized 1-based
    int sign = +1;        ///< +1 or -1
    double lambda = 0.0;
    std::optional<std::size_t> binding_row;
};

/// Outcome of a boundary projection. The boundary point differs from the
/// query point in exactly one coordinate, and `distance` equals the
/// weighted quasi-distance between the two.
struct ProjectionResult {
    double distance = 0.0;
    std::size_t axis = 0; ///< 0-based; serialized 1-based
    int sign = +1;
    Vector boundary_point;              ///< original, untranslated coordinates
    std::vector<AxisLambda> lambda_table; ///< 2n entries, axis-major, + before -
};

/// Shared selection step: pick the table entry minimizing w_j * lambda^p
/// (lowest axis wins ties, + before -) and assemble the result around the
/// untranslated query point. DomainError if every entry is infinite.
ProjectionResult select_axis_projection(const Vector& query,
                                        std::vector<AxisLambda> table,
                                        const NormSpec& spec);

} // namespace l1proj
