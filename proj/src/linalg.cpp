#include "spinorlab/linalg.hpp"

#include "spinorlab/errors.hpp"

#include <algorithm>
#include <numeric>

namespace spinorlab {

SparseVector to_sparse(const Vector& v) {
    SparseVector out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) out.emplace_back(i, v[i]);
    }
    return out;
}

Vector to_dense(const SparseVector& v, std::size_t dim) {
    Vector out(dim);
    for (const auto& [i, x] : v) {
        if (i >= dim) throw UsageError("to_dense: index out of range");
        out[i] = x;
    }
    return out;
}

SparseVector axpy(const SparseVector& a, const Scalar& factor, const SparseVector& b) {
    SparseVector out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->first < ia->first) {
            Scalar v = factor * ib->second;
            if (!v.is_zero()) out.emplace_back(ib->first, std::move(v));
            ++ib;
        } else {
            Scalar v = ia->second + factor * ib->second;
            if (!v.is_zero()) out.emplace_back(ia->first, std::move(v));
            ++ia;
            ++ib;
        }
    }
    return out;
}

Scalar sparse_get(const SparseVector& v, std::size_t index) {
    auto it = std::lower_bound(v.begin(), v.end(), index,
                               [](const auto& e, std::size_t i) { return e.first < i; });
    if (it == v.end() || it->first != index) return Scalar();
    return it->second;
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw UsageError("Matrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw UsageError("Matrix::apply: dimension mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& a = (*this)(r, c);
            if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
        }
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw UsageError("Matrix product: dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) {
                if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
            }
        }
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw UsageError("Matrix sum: dimension mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix out = a;
    for (auto& x : out.data_) x *= s;
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return x.is_zero(); });
}

// ---------------------------------------------------------- SparseMatrix

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

void SparseMatrix::add(std::size_t r, std::size_t c, const Scalar& v) {
    if (r >= rows_.size() || c >= cols_) throw UsageError("SparseMatrix::add: index out of range");
    if (v.is_zero()) return;
    cache_valid_ = false;
    auto [it, inserted] = rows_[r].try_emplace(c, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) rows_[r].erase(it);
    }
}

void SparseMatrix::add_column(std::size_t c, const SparseVector& column) {
    for (const auto& [r, v] : column) add(r, c, v);
}

const SparseVector& SparseMatrix::row(std::size_t r) const {
    if (!cache_valid_) {
        cache_.assign(rows_.size(), {});
        for (std::size_t i = 0; i < rows_.size(); ++i)
            cache_[i].assign(rows_[i].begin(), rows_[i].end());
        cache_valid_ = true;
    }
    return cache_.at(r);
}

void SparseMatrix::append_rows(const SparseMatrix& other) {
    if (other.cols_ != cols_) throw UsageError("SparseMatrix::append_rows: column mismatch");
    rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
    cache_valid_ = false;
}

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
    SparseMatrix s(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) s.add(r, c, m(r, c));
    return s;
}

// ------------------------------------------------------------ RowReducer

RowReducer::RowReducer(std::size_t pivot_limit) : limit_(pivot_limit) {}

SparseVector RowReducer::reduce(SparseVector row) const {
    // Pivot rows are in RREF, so each pivot column present in the input is
    // cleared by exactly one subtraction and never reintroduced.
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (const auto& [c, v] : row) {
        if (c >= limit_) break;
        if (pivots_.count(c)) hits.emplace_back(c, v);
    }
    for (const auto& [c, v] : hits) row = axpy(row, -v, pivots_.at(c));
    return row;
}

SparseVector RowReducer::insert(SparseVector row) {
    row = reduce(std::move(row));
    if (row.empty() || row.front().first >= limit_) return row;
    const std::size_t lead = row.front().first;
    const Scalar inv = Scalar(1) / row.front().second;
    for (auto& [c, v] : row) v *= inv;
    for (auto& [pc, prow] : pivots_) {
        const Scalar f = sparse_get(prow, lead);
        if (!f.is_zero()) prow = axpy(prow, -f, row);
    }
    pivots_.emplace(lead, row);
    return row;
}

// ------------------------------------------------- connected components

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Groups row indices by the connected component (over shared columns) that
// they belong to; components are ordered by their smallest column.
std::vector<std::vector<std::size_t>> row_components(const SparseMatrix& a) {
    UnionFind uf(a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const auto& row = a.row(r);
        for (std::size_t i = 1; i < row.size(); ++i) uf.unite(row[0].first, row[i].first);
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const auto& row = a.row(r);
        if (!row.empty()) groups[uf.find(row[0].first)].push_back(r);
    }
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, rows] : groups) out.push_back(std::move(rows));
    return out;
}

}  // namespace

std::size_t rank(const SparseMatrix& a) {
    std::size_t total = 0;
    for (const auto& rows : row_components(a)) {
        RowReducer red(a.cols());
        for (std::size_t r : rows) red.insert(a.row(r));
        total += red.rank();
    }
    return total;
}

std::size_t rank(const Matrix& a) { return rank(SparseMatrix::from_dense(a)); }

std::size_t rank(const std::vector<SparseVector>& vectors) {
    std::size_t dim = 0;
    for (const auto& v : vectors)
        if (!v.empty()) dim = std::max(dim, v.back().first + 1);
    SparseMatrix m(vectors.size(), dim);
    for (std::size_t r = 0; r < vectors.size(); ++r)
        for (const auto& [c, x] : vectors[r]) m.add(r, c, x);
    return rank(m);
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& a) {
    const std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    // free column -> kernel vector entries (pivot col, value)
    std::map<std::size_t, SparseVector> kernel;
    for (const auto& rows : row_components(a)) {
        RowReducer red(n);
        for (std::size_t r : rows) red.insert(a.row(r));
        for (const auto& [pc, prow] : red.pivots()) {
            is_pivot[pc] = true;
            for (const auto& [c, v] : prow) {
                if (c != pc) kernel[c].emplace_back(pc, -v);
            }
        }
    }
    std::vector<SparseVector> out;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        SparseVector v;
        auto it = kernel.find(f);
        if (it != kernel.end()) v = std::move(it->second);
        v.emplace_back(f, Scalar(1));
        std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Vector> kernel_basis(const Matrix& a) {
    std::vector<Vector> out;
    for (const auto& v : kernel_basis(SparseMatrix::from_dense(a))) out.push_back(to_dense(v, a.cols()));
    return out;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw UsageError("solve: dimension mismatch");
    const std::size_t n = a.cols();
    RowReducer red(n);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        SparseVector row;
        for (std::size_t c = 0; c < n; ++c)
            if (!a(r, c).is_zero()) row.emplace_back(c, a(r, c));
        if (!b[r].is_zero()) row.emplace_back(n, b[r]);
        SparseVector rest = red.insert(std::move(row));
        if (!rest.empty() && rest.front().first >= n) return std::nullopt;
    }
    Vector x(n);
    for (const auto& [pc, prow] : red.pivots()) x[pc] = sparse_get(prow, n);
    return x;
}

// ------------------------------------------------------------ SpanSolver

SpanSolver::SpanSolver(std::vector<SparseVector> basis, std::size_t dim)
    : dim_(dim), basis_size_(basis.size()), coord_block_(dim, static_cast<std::size_t>(-1)) {
    // Union basis vectors that share a coordinate.
    UnionFind uf(basis.size());
    std::vector<std::size_t> owner(dim, static_cast<std::size_t>(-1));
    for (std::size_t b = 0; b < basis.size(); ++b) {
        for (const auto& [c, v] : basis[b]) {
            if (c >= dim) throw UsageError("SpanSolver: coordinate out of range");
            if (owner[c] == static_cast<std::size_t>(-1)) {
                owner[c] = b;
            } else {
                uf.unite(owner[c], b);
            }
        }
    }
    std::map<std::size_t, std::size_t> root_to_block;
    for (std::size_t b = 0; b < basis.size(); ++b) {
        const std::size_t root = uf.find(b);
        auto [it, inserted] = root_to_block.try_emplace(root, blocks_.size());
        if (inserted) blocks_.push_back(Block{{}, RowReducer(dim)});
        blocks_[it->second].members.push_back(b);
    }
    for (std::size_t c = 0; c < dim; ++c) {
        if (owner[c] != static_cast<std::size_t>(-1)) coord_block_[c] = root_to_block.at(uf.find(owner[c]));
    }
    for (auto& block : blocks_) {
        for (std::size_t local = 0; local < block.members.size(); ++local) {
            SparseVector row = basis[block.members[local]];
            row.emplace_back(dim + local, Scalar(1));
            block.reducer.insert(std::move(row));
        }
        rank_ += block.reducer.rank();
    }
}

std::optional<SparseVector> SpanSolver::coordinates(const SparseVector& v) const {
    std::vector<SparseVector> parts(blocks_.size());
    for (const auto& [c, x] : v) {
        if (c >= dim_) throw UsageError("SpanSolver::coordinates: index out of range");
        const std::size_t b = coord_block_[c];
        if (b == static_cast<std::size_t>(-1)) return std::nullopt;
        parts[b].emplace_back(c, x);
    }
    SparseVector coeffs;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (parts[b].empty()) continue;
        SparseVector r = blocks_[b].reducer.reduce(std::move(parts[b]));
        if (!r.empty() && r.front().first < dim_) return std::nullopt;
        for (const auto& [c, x] : r) coeffs.emplace_back(blocks_[b].members[c - dim_], -x);
    }
    std::sort(coeffs.begin(), coeffs.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return coeffs;
}

}  // namespace spinorlab
