#include "covact/linalg.hpp"

namespace covact {

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldSpec& field)
    : rows_(rows), cols_(cols), field_(field), a_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::with_column(const std::vector<Scalar>& col) const {
    if (col.size() != rows_) throw UsageError("with_column: length mismatch");
    Matrix m(rows_, cols_ + 1, field_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
        m.at(r, cols_) = col[r];
    }
    return m;
}

Rref::Rref(Matrix m) : r_(std::move(m)) {
    const auto& f = r_.field();
    const std::size_t nr = r_.rows(), nc = r_.cols();
    ops_ = Matrix(nr, nr, f);
    for (std::size_t i = 0; i < nr; ++i) ops_.at(i, i) = Scalar::one(f);

    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        // leftmost column, topmost nonzero entry: fixed, reproducible pivots
        std::size_t pivot = nr;
        for (std::size_t r = row; r < nr; ++r)
            if (!r_.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot == nr) continue;
        if (pivot != row) {
            for (std::size_t c = 0; c < nc; ++c) std::swap(r_.at(pivot, c), r_.at(row, c));
            for (std::size_t c = 0; c < nr; ++c) std::swap(ops_.at(pivot, c), ops_.at(row, c));
        }
        Scalar inv = r_.at(row, col).inverse();
        for (std::size_t c = 0; c < nc; ++c) r_.at(row, c) = r_.at(row, c) * inv;
        for (std::size_t c = 0; c < nr; ++c) ops_.at(row, c) = ops_.at(row, c) * inv;
        for (std::size_t r = 0; r < nr; ++r) {
            if (r == row || r_.at(r, col).is_zero()) continue;
            Scalar factor = r_.at(r, col);
            for (std::size_t c = 0; c < nc; ++c)
                r_.at(r, c) = r_.at(r, c) - factor * r_.at(row, c);
            for (std::size_t c = 0; c < nr; ++c)
                ops_.at(r, c) = ops_.at(r, c) - factor * ops_.at(row, c);
        }
        pivot_cols_.push_back(col);
        ++row;
    }
}

std::optional<std::vector<Scalar>> Rref::solve(const std::vector<Scalar>& b) const {
    if (b.size() != r_.rows()) throw UsageError("solve: rhs length mismatch");
    const auto& f = r_.field();
    // rhs under the recorded row operations
    std::vector<Scalar> t(r_.rows(), Scalar::zero(f));
    for (std::size_t r = 0; r < r_.rows(); ++r)
        for (std::size_t c = 0; c < r_.rows(); ++c)
            if (!ops_.at(r, c).is_zero() && !b[c].is_zero()) t[r] = t[r] + ops_.at(r, c) * b[c];
    // consistency: zero rows of the rref must have zero rhs
    for (std::size_t r = pivot_cols_.size(); r < r_.rows(); ++r)
        if (!t[r].is_zero()) return std::nullopt;
    std::vector<Scalar> x(r_.cols(), Scalar::zero(f));
    for (std::size_t i = 0; i < pivot_cols_.size(); ++i) x[pivot_cols_[i]] = t[i];
    return x;
}

bool Rref::contains(const std::vector<Scalar>& v) const { return solve(v).has_value(); }

std::vector<std::vector<Scalar>> Rref::kernel_basis() const {
    const auto& f = r_.field();
    std::vector<std::vector<Scalar>> basis;
    std::vector<bool> is_pivot(r_.cols(), false);
    for (auto c : pivot_cols_) is_pivot[c] = true;
    for (std::size_t free_col = 0; free_col < r_.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(r_.cols(), Scalar::zero(f));
        v[free_col] = Scalar::one(f);
        for (std::size_t i = 0; i < pivot_cols_.size(); ++i)
            v[pivot_cols_[i]] = -r_.at(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Scalar>> Rref::echelon_rows() const {
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t r = 0; r < pivot_cols_.size(); ++r) {
        std::vector<Scalar> row(r_.cols(), Scalar::zero(r_.field()));
        for (std::size_t c = 0; c < r_.cols(); ++c) row[c] = r_.at(r, c);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::optional<std::vector<Scalar>> solve_linear(const Matrix& A, const std::vector<Scalar>& b) {
    if (A.rows() != b.size()) throw UsageError("solve_linear: dimension mismatch");
    return Rref(A).solve(b);
}

std::size_t rank(const Matrix& A) { return Rref(A).rank(); }

bool in_span(const std::vector<Scalar>& v, const std::vector<std::vector<Scalar>>& S,
             const FieldSpec& field) {
    if (S.empty()) {
        for (const auto& s : v)
            if (!s.is_zero()) return false;
        return true;
    }
    const std::size_t n = S.front().size();
    if (v.size() != n) throw UsageError("in_span: dimension mismatch");
    Matrix m(n, S.size(), field);
    for (std::size_t c = 0; c < S.size(); ++c) {
        if (S[c].size() != n) throw UsageError("in_span: ragged span set");
        for (std::size_t r = 0; r < n; ++r) m.at(r, c) = S[c][r];
    }
    return Rref(m).contains(v);
}

} // namespace covact
