#pragma once

#include "spinorlab/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace spinorlab {

using Vector = std::vector<Scalar>;

/// Sparse vector: (index, value) pairs sorted by index, no zero values.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t dim);
/// a + factor * b
SparseVector axpy(const SparseVector& a, const Scalar& factor, const SparseVector& b);
Scalar sparse_get(const SparseVector& v, std::size_t index);

/// Dense matrix over the Gaussian rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector apply(const Vector& v) const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Row-major sparse matrix, the representation operator matrices are built
/// in.
class SparseMatrix {
public:
    SparseMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    void add(std::size_t r, std::size_t c, const Scalar& v);
    /// Add `column` (indexed by row) into column c.
    void add_column(std::size_t c, const SparseVector& column);
    const SparseVector& row(std::size_t r) const;
    void append_rows(const SparseMatrix& other);

    static SparseMatrix from_dense(const Matrix& m);

private:
    std::vector<std::map<std::size_t, Scalar>> rows_;
    std::size_t cols_;
    mutable std::vector<SparseVector> cache_;
    mutable bool cache_valid_ = false;
};

/// Incremental Gauss-Jordan elimination that keeps its pivot rows in reduced
/// row echelon form. Rows are reduced in insertion order and the pivot of a
/// row is its lowest-index surviving column, so the resulting basis is fully
/// determined by the input order.
class RowReducer {
public:
    /// Columns >= pivot_limit never become pivots (used for right-hand sides
    /// and bookkeeping columns).
    explicit RowReducer(std::size_t pivot_limit);

    /// Reduce `row` against the current pivots and, if something with a
    /// pivotable column survives, adopt it. Returns the reduced row.
    SparseVector insert(SparseVector row);
    SparseVector reduce(SparseVector row) const;

    std::size_t rank() const { return pivots_.size(); }
    const std::map<std::size_t, SparseVector>& pivots() const { return pivots_; }

private:
    std::size_t limit_;
    std::map<std::size_t, SparseVector> pivots_;
};

std::size_t rank(const Matrix& a);
std::size_t rank(const SparseMatrix& a);
std::size_t rank(const std::vector<SparseVector>& vectors);

/// Exact null space basis, one vector per free column in ascending order
/// (free entry 1, other free entries 0).
std::vector<Vector> kernel_basis(const Matrix& a);
std::vector<SparseVector> kernel_basis(const SparseMatrix& a);

/// A particular solution of a.x = b (free variables set to zero), or empty
/// when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Coordinates of vectors with respect to a fixed list of spanning vectors.
/// Independent blocks of coordinates are reduced separately.
class SpanSolver {
public:
    SpanSolver(std::vector<SparseVector> basis, std::size_t dim);

    std::size_t rank() const { return rank_; }
    bool independent() const { return rank_ == basis_size_; }
    /// Coefficients c with sum c_b basis_b == v, or empty if v is outside the
    /// span. When the basis is dependent a particular choice is returned.
    std::optional<SparseVector> coordinates(const SparseVector& v) const;

private:
    struct Block {
        std::vector<std::size_t> members;  // basis indices
        RowReducer reducer{0};
    };
    std::size_t dim_;
    std::size_t basis_size_;
    std::size_t rank_ = 0;
    std::vector<Block> blocks_;
    std::vector<std::size_t> coord_block_;  // coordinate -> block or npos
};

}  // namespace spinorlab
