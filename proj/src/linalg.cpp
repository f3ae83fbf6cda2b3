#include "k3fm/linalg.hpp"

#include <sstream>
#include <utility>

#include "k3fm/errors.hpp"

namespace k3fm {

CMatrix::CMatrix(std::initializer_list<std::initializer_list<GaussRational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

CMatrix CMatrix::from_columns(std::span<const CVector> columns, std::size_t rows) {
    CMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw DimensionMismatch("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

CMatrix CMatrix::transpose() const {
    CMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

CMatrix CMatrix::conj() const {
    CMatrix out = *this;
    for (auto& z : out.data_) z = z.conj();
    return out;
}

CMatrix CMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("block out of range");
    CMatrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

void CMatrix::set_block(std::size_t r0, std::size_t c0, const CMatrix& m) {
    if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw DimensionMismatch("block out of range");
    for (std::size_t r = 0; r < m.rows_; ++r)
        for (std::size_t c = 0; c < m.cols_; ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

CVector CMatrix::column(std::size_t c) const {
    CVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

bool CMatrix::is_zero() const {
    for (const auto& z : data_)
        if (!z.is_zero()) return false;
    return true;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

CMatrix CMatrix::operator-() const {
    CMatrix out = *this;
    for (auto& z : out.data_) z = -z;
    return out;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
    CMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const GaussRational& lhs = a(r, k);
            if (lhs.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) {
                if (!b(k, c).is_zero()) out(r, c) += lhs * b(k, c);
            }
        }
    }
    return out;
}

CMatrix operator*(const GaussRational& s, const CMatrix& m) {
    CMatrix out = m;
    for (auto& z : out.data_) z *= s;
    return out;
}

CVector operator*(const CMatrix& m, const CVector& v) {
    if (m.cols_ != v.size()) throw DimensionMismatch("matrix-vector product");
    CVector out(m.rows_);
    for (std::size_t r = 0; r < m.rows_; ++r)
        for (std::size_t c = 0; c < m.cols_; ++c)
            if (!v[c].is_zero()) out[r] += m(r, c) * v[c];
    return out;
}

std::string CMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    }
    os << "]";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CMatrix& m) { return os << m.to_string(); }

std::vector<std::size_t> rref(CMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
        }
        GaussRational inv = m(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            GaussRational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(CMatrix m) { return rref(m).size(); }

CMatrix inverse(const CMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    CMatrix aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, CMatrix::identity(n));
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
    return aug.block(0, n, n, n);
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(std::span<const CVector> vectors, std::size_t ambient) {
    CMatrix m(vectors.size(), ambient);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != ambient) throw DimensionMismatch("vector length mismatch");
        for (std::size_t c = 0; c < ambient; ++c) m(r, c) = vectors[r][c];
    }
    auto pivots = rref(m);
    Subspace s(ambient);
    s.basis_ = m.block(0, 0, pivots.size(), ambient);
    return s;
}

std::vector<CVector> Subspace::vectors() const {
    std::vector<CVector> out;
    out.reserve(dim());
    for (std::size_t r = 0; r < dim(); ++r) {
        CVector v(ambient_);
        for (std::size_t c = 0; c < ambient_; ++c) v[c] = basis_(r, c);
        out.push_back(std::move(v));
    }
    return out;
}

bool Subspace::contains(const CVector& v) const {
    auto vs = vectors();
    vs.push_back(v);
    return span(vs, ambient_).dim() == dim();
}

Subspace Subspace::conj() const {
    auto vs = vectors();
    for (auto& v : vs)
        for (auto& z : v) z = z.conj();
    return span(vs, ambient_);
}

Subspace Subspace::transformed(const CMatrix& change) const {
    auto vs = vectors();
    for (auto& v : vs) v = change * v;
    return span(vs, change.rows());
}

Subspace Subspace::sum(const Subspace& o) const {
    if (o.ambient_ != ambient_) throw DimensionMismatch("subspace sum");
    auto vs = vectors();
    auto ws = o.vectors();
    vs.insert(vs.end(), ws.begin(), ws.end());
    return span(vs, ambient_);
}

Subspace kernel(const CMatrix& m) {
    CMatrix r = m;
    auto pivots = rref(r);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<CVector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        CVector v(n);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
        basis.push_back(std::move(v));
    }
    return Subspace::span(basis, n);
}

Subspace eigenspace_i(const CMatrix& m) {
    if (!m.is_square()) throw DimensionMismatch("eigenspace of non-square matrix");
    return kernel(m - GaussRational::i() * CMatrix::identity(m.rows()));
}

CMatrix graph_extract(const Subspace& L, std::size_t base_dim) {
    const std::size_t n = L.ambient_dim();
    if (L.dim() != base_dim || base_dim > n) {
        throw NotAGraph("subspace of dimension " + std::to_string(L.dim()) + " is not a graph over " +
                        std::to_string(base_dim) + " base coordinates");
    }
    // Columns are basis vectors; split into base (top) and fibre (bottom) parts.
    const CMatrix cols = L.basis().transpose();
    const CMatrix base = cols.block(0, 0, base_dim, base_dim);
    const CMatrix fibre = cols.block(base_dim, 0, n - base_dim, base_dim);
    CMatrix base_inv;
    try {
        base_inv = inverse(base);
    } catch (const SingularMatrix&) {
        throw NotAGraph("projection onto the base coordinates is singular");
    }
    return fibre * base_inv;
}

Subspace graph_of(const CMatrix& a) {
    const std::size_t k = a.cols();
    const std::size_t n = k + a.rows();
    std::vector<CVector> vs;
    for (std::size_t j = 0; j < k; ++j) {
        CVector v(n);
        v[j] = 1;
        for (std::size_t r = 0; r < a.rows(); ++r) v[k + r] = a(r, j);
        vs.push_back(std::move(v));
    }
    return Subspace::span(vs, n);
}

} // namespace k3fm
