#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "plelin/coefficients.hpp"
#include "plelin/echelon_form.hpp"
#include "plelin/errors.hpp"
#include "plelin/matrix.hpp"
#include "plelin/permutation.hpp"
#include "plelin/rational.hpp"
#include "plelin/reduce.hpp"

namespace plelin {

struct FFGEResult {
    Matrix<mpz_class> echelon;
    RowPermutation perm;
    // Sign times the final pivot: the determinant for square full-rank
    // input, 0 for singular square input.
    mpz_class det_factor;
    std::size_t rank = 0;
};

inline Matrix<Rational> to_rational_matrix(const Matrix<mpz_class>& m) {
    Matrix<Rational> result(m.nrows(), m.ncols());
    for (std::size_t i = 0; i < m.nrows(); ++i)
        for (std::size_t j = 0; j < m.ncols(); ++j) result(i, j) = Rational{m(i, j)};
    return result;
}

namespace detail {

// Every Bareiss division must come out exact; a remainder means the
// recurrence was fed something inconsistent.
inline mpz_class exact_div(const mpz_class& numerator, const mpz_class& divisor) {
    if (mpz_divisible_p(numerator.get_mpz_t(), divisor.get_mpz_t()) == 0)
        throw internal_error("ffge: inexact Bareiss division");
    mpz_class quotient;
    mpz_divexact(quotient.get_mpz_t(), numerator.get_mpz_t(), divisor.get_mpz_t());
    return quotient;
}

}  // namespace detail

// One-step Bareiss elimination over the integers. Pivots are the first
// nonzero entry by row index in the leftmost eligible column, the same
// choice the classical path makes, so both algorithms walk identical pivot
// sequences on shared inputs.
inline FFGEResult ffge_int(Matrix<mpz_class> m) {
    const std::size_t nrows = m.nrows();
    const std::size_t ncols = m.ncols();
    std::vector<std::size_t> origin(nrows);
    for (std::size_t i = 0; i < nrows; ++i) origin[i] = i;
    int sign = 1;

    mpz_class prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t pivot_row = row;
        while (pivot_row < nrows && m(pivot_row, col) == 0) ++pivot_row;
        if (pivot_row == nrows) continue;
        if (pivot_row != row) {
            std::swap(m.row(pivot_row), m.row(row));
            std::swap(origin[pivot_row], origin[row]);
            sign = -sign;
        }
        const mpz_class pivot = m(row, col);
        for (std::size_t i = row + 1; i < nrows; ++i) {
            if (m(i, col) == 0) {
                for (std::size_t j = col + 1; j < ncols; ++j)
                    m(i, j) = detail::exact_div(pivot * m(i, j), prev);
                continue;
            }
            for (std::size_t j = col + 1; j < ncols; ++j)
                m(i, j) = detail::exact_div(pivot * m(i, j) - m(i, col) * m(row, j), prev);
            m(i, col) = 0;
        }
        prev = pivot;
        ++row;
    }

    std::vector<std::size_t> images(nrows);
    for (std::size_t k = 0; k < nrows; ++k) images[origin[k]] = k;

    FFGEResult result{std::move(m), RowPermutation::from_images(std::move(images)), 0, row};
    const bool square = nrows == ncols;
    if (square && result.rank < nrows)
        result.det_factor = 0;
    else
        result.det_factor = sign < 0 ? mpz_class{-prev} : prev;
    return result;
}

struct FFGERationalResult {
    FFGEResult result;
    // Row i of the input was scaled by row_scalings[i] (the LCM of its
    // denominators) before the integer elimination.
    std::vector<mpz_class> row_scalings;
};

// Clears denominators row by row, then runs the integer elimination. Row
// scaling preserves zero patterns, so the pivot sequence matches what
// ffge_int would see, and the scaling record keeps the result row-equivalent
// to the input.
inline FFGERationalResult ffge_rational(const Matrix<Rational>& m) {
    Matrix<mpz_class> scaled(m.nrows(), m.ncols());
    std::vector<mpz_class> scalings;
    scalings.reserve(m.nrows());
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        mpz_class row_lcm = 1;
        for (std::size_t j = 0; j < m.ncols(); ++j) row_lcm = lcm(row_lcm, m(i, j).denominator());
        for (std::size_t j = 0; j < m.ncols(); ++j)
            scaled(i, j) = m(i, j).numerator() *
                           detail::exact_div(row_lcm, m(i, j).denominator());
        scalings.push_back(std::move(row_lcm));
    }
    return FFGERationalResult{ffge_int(std::move(scaled)), std::move(scalings)};
}

// Reduced row echelon form by the fraction-free route: eliminate over the
// integers, divide each pivot row by its pivot, and clear upward with the
// echelon-reduction fold. Cross-checks the classical rref in benchmarks and
// tests.
inline Matrix<Rational> ffge_rref(const Matrix<Rational>& m) {
    const FFGEResult res = ffge_rational(m).result;
    std::vector<EchelonFormRow<Rational>> rows;
    rows.reserve(res.rank);
    for (std::size_t i = 0; i < res.rank; ++i) {
        std::size_t j = 0;
        while (j < res.echelon.ncols() && res.echelon(i, j) == 0) ++j;
        if (j == res.echelon.ncols()) throw internal_error("ffge_rref: zero row inside the rank");
        const Rational pivot_inv = Rational{res.echelon(i, j)}.reciprocal();
        std::vector<Rational> entries;
        entries.reserve(res.echelon.ncols() - j);
        for (std::size_t k = j; k < res.echelon.ncols(); ++k)
            entries.push_back(Rational{res.echelon(i, k)} * pivot_inv);
        rows.emplace_back(j, std::move(entries));
    }
    EchelonForm<Rational> normalized(m.nrows(), m.ncols(), std::move(rows));
    auto [u, reduced] = reduce_echelon(normalized);
    return reduced.to_matrix();
}

}  // namespace plelin
