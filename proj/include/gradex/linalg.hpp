#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gradex/cyclotomic.hpp"
#include "gradex/rational.hpp"

namespace gradex {

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Dense row-major matrix over an exact field type (Rational or Scalar).
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T{}) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    void append_row(const std::vector<T>& r) {
        if (cols_ == 0 && rows_ == 0) cols_ = r.size();
        if (r.size() != cols_) throw DimensionMismatch("row length does not match matrix width");
        data_.insert(data_.end(), r.begin(), r.end());
        ++rows_;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

/// In-place reduced row echelon form with deterministic pivoting: first
/// nonzero entry in column order. Returns the pivot columns.
template <typename T>
std::vector<std::size_t> rref(Matrix<T>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        T inv_pivot = m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) / inv_pivot;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            T f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Rank by fraction-free (Bareiss) elimination. Divisions are exact in the
/// Bareiss scheme, so this works over any exact field type as well.
template <typename T>
std::size_t rank(Matrix<T> m) {
    std::size_t rk = 0;
    T prev_pivot{};
    bool have_prev = false;
    for (std::size_t c = 0; c < m.cols() && rk < m.rows(); ++c) {
        std::size_t p = rk;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != rk)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(rk, j));
        T pivot = m(rk, c);
        for (std::size_t i = rk + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                T v = pivot * m(i, j) - m(i, c) * m(rk, j);
                m(i, j) = have_prev ? v / prev_pivot : std::move(v);
            }
            m(i, c) = T{};
        }
        prev_pivot = pivot;
        have_prev = true;
        ++rk;
    }
    return rk;
}

/// A linear subspace of F^ambient_dim held as a canonical RREF basis.
/// Equal subspaces compare equal componentwise.
template <typename T>
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<std::vector<T>>& vectors) {
        Subspace s(ambient);
        Matrix<T> m;
        for (const auto& v : vectors) {
            if (v.size() != ambient) throw DimensionMismatch("vector length != ambient dimension");
            m.append_row(v);
        }
        if (m.rows() == 0) return s;
        rref(m);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            auto row = m.row(i);
            bool nonzero = false;
            for (const auto& x : row)
                if (!gradex::is_zero(x)) {
                    nonzero = true;
                    break;
                }
            if (nonzero) s.basis_.push_back(std::move(row));
        }
        return s;
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    const std::vector<std::vector<T>>& basis() const { return basis_; }

    bool contains(const std::vector<T>& v) const {
        if (v.size() != ambient_) throw DimensionMismatch("vector length != ambient dimension");
        std::vector<T> w = v;
        for (const auto& b : basis_) {
            std::size_t lead = leading_index(b);
            if (gradex::is_zero(w[lead])) continue;
            T f = w[lead];
            for (std::size_t j = lead; j < ambient_; ++j) w[j] -= f * b[j];
        }
        for (const auto& x : w)
            if (!gradex::is_zero(x)) return false;
        return true;
    }

    bool contains(const Subspace& other) const {
        for (const auto& b : other.basis_)
            if (!contains(b)) return false;
        return true;
    }

    Subspace sum(const Subspace& other) const {
        if (ambient_ != other.ambient_) throw DimensionMismatch("subspace ambient mismatch");
        std::vector<std::vector<T>> all = basis_;
        all.insert(all.end(), other.basis_.begin(), other.basis_.end());
        return span(ambient_, all);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    static std::size_t leading_index(const std::vector<T>& row) {
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!gradex::is_zero(row[j])) return j;
        return row.size();
    }

    std::size_t ambient_ = 0;
    std::vector<std::vector<T>> basis_;
};

/// span{ u*v : u in basis(U), v in basis(V) } for a bilinear multiplication
/// given as a callback on coordinate vectors.
template <typename T>
Subspace<T> subspace_product(
    const Subspace<T>& u, const Subspace<T>& v,
    const std::function<std::vector<T>(const std::vector<T>&, const std::vector<T>&)>& mult) {
    if (u.ambient_dim() != v.ambient_dim())
        throw DimensionMismatch("subspace product: ambient mismatch");
    std::vector<std::vector<T>> products;
    for (const auto& x : u.basis())
        for (const auto& y : v.basis()) products.push_back(mult(x, y));
    return Subspace<T>::span(u.ambient_dim(), products);
}

/// Null space of m (solutions of m * x = 0). `one` supplies the field unit
/// for the free-variable coordinates.
template <typename T>
std::vector<std::vector<T>> kernel(Matrix<T> m, const T& one) {
    std::size_t n = m.cols();
    auto pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<T> v(n, T{});
        v[free_col] = one;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = T{} - m(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace gradex
