#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "k3fm/scalar.hpp"

namespace k3fm {

using CVector = std::vector<GaussRational>;

/// Dense row-major matrix over Q(i).
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    CMatrix(std::initializer_list<std::initializer_list<GaussRational>> rows);

    static CMatrix identity(std::size_t n);
    static CMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    /// Matrix whose columns are the given vectors.
    static CMatrix from_columns(std::span<const CVector> columns, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    GaussRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const GaussRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    CMatrix transpose() const;
    CMatrix conj() const;
    CMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const CMatrix& m);
    CVector column(std::size_t c) const;

    bool is_zero() const;
    bool is_square() const noexcept { return rows_ == cols_; }

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    CMatrix operator-() const;
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator*(const GaussRational& s, const CMatrix& m);
    friend CVector operator*(const CMatrix& m, const CVector& v);

    friend bool operator==(const CMatrix& a, const CMatrix& b) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussRational> data_;
};

std::ostream& operator<<(std::ostream& os, const CMatrix& m);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(CMatrix& m);
std::size_t rank(CMatrix m);
/// Throws SingularMatrix if m is not invertible.
CMatrix inverse(const CMatrix& m);

/// Linear subspace of Q(i)^n stored as the nonzero rows of a reduced row
/// echelon form. The echelon form is unique, so equality is data equality.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient), basis_(0, ambient) {}

    /// Span of arbitrary vectors.
    static Subspace span(std::span<const CVector> vectors, std::size_t ambient);

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.rows(); }
    /// Rows are the canonical basis vectors.
    const CMatrix& basis() const noexcept { return basis_; }
    std::vector<CVector> vectors() const;

    bool contains(const CVector& v) const;
    Subspace conj() const;
    /// Image under an invertible change of coordinates.
    Subspace transformed(const CMatrix& change) const;
    Subspace sum(const Subspace& o) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_;
    CMatrix basis_;
};

/// Exact null space.
Subspace kernel(const CMatrix& m);

/// kernel(m - i Id).
Subspace eigenspace_i(const CMatrix& m);

/// For L projecting isomorphically onto the first `base_dim` coordinates,
/// returns A with L = {(v, A v)}. Throws NotAGraph otherwise.
CMatrix graph_extract(const Subspace& L, std::size_t base_dim);

/// {(v, A v)} for an (n - k) x k matrix A.
Subspace graph_of(const CMatrix& a);

} // namespace k3fm
