#pragma once

#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "plelin/coefficients.hpp"
#include "plelin/errors.hpp"
#include "plelin/permutation.hpp"

namespace plelin {

// Dense row-major matrix with explicit dimensions; 0 x n and m x 0 shapes
// are legal everywhere. Values are immutable in spirit: operations return
// fresh matrices.
template <ring_coefficients T>
class Matrix {
public:
    Matrix() : nrows_(0), ncols_(0) {}

    Matrix(std::size_t nrows, std::size_t ncols)
        : nrows_(nrows),
          ncols_(ncols),
          rows_(nrows, std::vector<T>(ncols, ring_traits<T>::zero())) {}

    // Throws dimension_error on ragged input.
    static Matrix from_rows(std::vector<std::vector<T>> rows) {
        const std::size_t nrows = rows.size();
        const std::size_t ncols = nrows == 0 ? 0 : rows.front().size();
        for (const auto& row : rows)
            if (row.size() != ncols) throw dimension_error("Matrix: ragged rows");
        Matrix m;
        m.nrows_ = nrows;
        m.ncols_ = ncols;
        m.rows_ = std::move(rows);
        return m;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.rows_[i][i] = ring_traits<T>::one();
        return m;
    }

    std::size_t nrows() const { return nrows_; }
    std::size_t ncols() const { return ncols_; }

    const T& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    T& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }

    const std::vector<T>& row(std::size_t i) const { return rows_[i]; }
    std::vector<T>& row(std::size_t i) { return rows_[i]; }

    bool is_zero() const {
        for (const auto& row : rows_)
            for (const auto& entry : row)
                if (!ring_traits<T>::is_zero(entry)) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.nrows_ == b.nrows_ && a.ncols_ == b.ncols_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t nrows_;
    std::size_t ncols_;
    std::vector<std::vector<T>> rows_;
};

template <ring_coefficients T>
Matrix<T> matrix_add(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.nrows() != b.nrows() || a.ncols() != b.ncols())
        throw dimension_error("matrix_add: shapes differ");
    Matrix<T> sum(a.nrows(), a.ncols());
    for (std::size_t i = 0; i < a.nrows(); ++i)
        for (std::size_t j = 0; j < a.ncols(); ++j) sum(i, j) = a(i, j) + b(i, j);
    return sum;
}

// Classical triple loop.
template <ring_coefficients T>
Matrix<T> matrix_mul(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.ncols() != b.nrows()) throw dimension_error("matrix_mul: inner dimensions differ");
    Matrix<T> product(a.nrows(), b.ncols());
    for (std::size_t i = 0; i < a.nrows(); ++i)
        for (std::size_t k = 0; k < a.ncols(); ++k) {
            const T& aik = a(i, k);
            if (ring_traits<T>::is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.ncols(); ++j)
                product(i, j) = product(i, j) + aik * b(k, j);
        }
    return product;
}

template <ring_coefficients T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
    return matrix_add(a, b);
}

template <ring_coefficients T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    return matrix_mul(a, b);
}

// Row i of the input appears at row p(i) of the output.
template <ring_coefficients T>
Matrix<T> permute_rows(const RowPermutation& p, const Matrix<T>& m) {
    if (p.size() != m.nrows()) throw dimension_error("permute_rows: size mismatch");
    Matrix<T> out(m.nrows(), m.ncols());
    for (std::size_t i = 0; i < m.nrows(); ++i) out.row(p(i)) = m.row(i);
    return out;
}

// 0/1 matrix P with P * m == permute_rows(p, m).
template <ring_coefficients T>
Matrix<T> permutation_to_matrix(const RowPermutation& p) {
    Matrix<T> m(p.size(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i) m(p(i), i) = ring_traits<T>::one();
    return m;
}

template <ring_coefficients T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        for (std::size_t j = 0; j < m.ncols(); ++j) {
            if (j > 0) os << ' ';
            os << m(i, j);
        }
        os << '\n';
    }
    return os;
}

}  // namespace plelin
