#pragma once

#include <optional>
#include <vector>

#include "covact/scalar.hpp"

namespace covact {

/// Dense matrix of exact scalars, row major. All entries share one field.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Matrix transposed() const;
    /// Appends `col` as a new rightmost column.
    Matrix with_column(const std::vector<Scalar>& col) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    FieldSpec field_;
    std::vector<Scalar> a_;
};

/// Reduced row echelon form with deterministic leftmost-nonzero pivoting.
/// Factor once, then answer rank/solve/membership queries.
class Rref {
public:
    explicit Rref(Matrix m);

    std::size_t rank() const { return pivot_cols_.size(); }
    const std::vector<std::size_t>& pivot_cols() const { return pivot_cols_; }

    /// First solution of (original)·x = b under the fixed pivot order
    /// (free variables zero); nullopt when inconsistent.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;

    /// True iff v lies in the column span of the original matrix.
    bool contains(const std::vector<Scalar>& v) const;

    /// A basis of the null space (deterministic order).
    std::vector<std::vector<Scalar>> kernel_basis() const;

    /// Echelon rows of the row space (nonzero rows of the RREF of the
    /// transpose are NOT what this returns; these are rows of RREF(m)).
    std::vector<std::vector<Scalar>> echelon_rows() const;

private:
    Matrix r_;                   // rref of the original
    Matrix ops_;                 // row operations applied (r_ = ops_ · original)
    std::vector<std::size_t> pivot_cols_;
};

/// Solves A·x = b; deterministic first solution, nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve_linear(const Matrix& A, const std::vector<Scalar>& b);

std::size_t rank(const Matrix& A);

/// True iff v is a linear combination of the columns in S.
bool in_span(const std::vector<Scalar>& v, const std::vector<std::vector<Scalar>>& S,
             const FieldSpec& field);

} // namespace covact
