#pragma once

// Brute-force reference implementations the tests check the library
// against. Deliberately written on plain vectors with the most classical
// algorithms available, independent of the hook machinery.

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "plelin/coefficients.hpp"
#include "plelin/matrix.hpp"

namespace plelin::oracles {

// Schoolbook iterative extended Euclid.
inline std::pair<mpz_class, mpz_class> naive_xgcd(mpz_class a, mpz_class b) {
    mpz_class x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        mpz_class q = a / b;
        mpz_class r = a - q * b;
        a = std::move(b);
        b = std::move(r);
        mpz_class nx = x0 - q * x1;
        mpz_class ny = y0 - q * y1;
        x0 = std::move(x1);
        y0 = std::move(y1);
        x1 = std::move(nx);
        y1 = std::move(ny);
    }
    return {x0, y0};
}

inline mpz_class naive_gcd(mpz_class a, mpz_class b) {
    while (b != 0) {
        mpz_class r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Plain Gauss-Jordan on copies of the rows: normalize each pivot, clear the
// whole column, move on. Returns the reduced row echelon form.
template <division_ring_coefficients T>
Matrix<T> gauss_jordan_rref(const Matrix<T>& m) {
    std::vector<std::vector<T>> rows;
    rows.reserve(m.nrows());
    for (std::size_t i = 0; i < m.nrows(); ++i) rows.push_back(m.row(i));

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.ncols() && pivot_row < m.nrows(); ++col) {
        std::size_t r = pivot_row;
        while (r < m.nrows() && ring_traits<T>::is_zero(rows[r][col])) ++r;
        if (r == m.nrows()) continue;
        std::swap(rows[r], rows[pivot_row]);
        const T inv = ring_traits<T>::reciprocal(rows[pivot_row][col]);
        for (std::size_t j = col; j < m.ncols(); ++j)
            rows[pivot_row][j] = rows[pivot_row][j] * inv;
        for (std::size_t i = 0; i < m.nrows(); ++i) {
            if (i == pivot_row || ring_traits<T>::is_zero(rows[i][col])) continue;
            const T factor = rows[i][col];
            for (std::size_t j = col; j < m.ncols(); ++j)
                rows[i][j] = rows[i][j] - factor * rows[pivot_row][j];
        }
        ++pivot_row;
    }

    Matrix<T> result(m.nrows(), m.ncols());
    for (std::size_t i = 0; i < m.nrows(); ++i)
        for (std::size_t j = 0; j < m.ncols(); ++j) result(i, j) = rows[i][j];
    return result;
}

template <division_ring_coefficients T>
std::size_t gauss_jordan_rank(const Matrix<T>& m) {
    const Matrix<T> reduced = gauss_jordan_rref(m);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < m.ncols(); ++j)
            if (!ring_traits<T>::is_zero(reduced(i, j))) nonzero = true;
        if (nonzero) ++rank;
    }
    return rank;
}

// Determinant by cofactor expansion along the first row; fine up to 5 x 5.
inline mpz_class cofactor_det(const std::vector<std::vector<mpz_class>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    mpz_class det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<mpz_class>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<mpz_class> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        const mpz_class term = m[0][j] * cofactor_det(minor);
        det += j % 2 == 0 ? term : mpz_class{-term};
    }
    return det;
}

inline mpz_class cofactor_det(const Matrix<mpz_class>& m) {
    std::vector<std::vector<mpz_class>> rows;
    for (std::size_t i = 0; i < m.nrows(); ++i) rows.push_back(m.row(i));
    return cofactor_det(rows);
}

}  // namespace plelin::oracles
