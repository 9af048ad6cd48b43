#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "plelin/coefficients.hpp"
#include "plelin/errors.hpp"
#include "plelin/matrix.hpp"

namespace plelin {

// One column of an echelon transformation: offset is the diagonal position,
// the diagonal entry is an implicit 1, entries holds the rows strictly above
// it (entries[i] sits at row i).
template <division_ring_coefficients T>
class EchelonTransformationColumn {
public:
    EchelonTransformationColumn(std::size_t offset, std::vector<T> entries)
        : offset_(offset), entries_(std::move(entries)) {
        if (entries_.size() != offset_)
            throw dimension_error("EchelonTransformationColumn: need one entry per row above");
    }

    std::size_t offset() const { return offset_; }
    const std::vector<T>& entries() const { return entries_; }

    friend bool operator==(const EchelonTransformationColumn& a,
                           const EchelonTransformationColumn& b) {
        return a.offset_ == b.offset_ && a.entries_ == b.entries_;
    }

private:
    std::size_t offset_;
    std::vector<T> entries_;
};

// Upper triangular with unit diagonal, stored as the columns that differ
// from the identity, in ascending offset order.
template <division_ring_coefficients T>
class EchelonTransformation {
public:
    EchelonTransformation() : nrows_(0) {}

    EchelonTransformation(std::size_t nrows, std::vector<EchelonTransformationColumn<T>> columns)
        : nrows_(nrows), columns_(std::move(columns)) {
        for (std::size_t k = 0; k < columns_.size(); ++k) {
            if (columns_[k].offset() >= nrows_)
                throw dimension_error("EchelonTransformation: column offset out of range");
            if (k > 0 && columns_[k].offset() <= columns_[k - 1].offset())
                throw dimension_error("EchelonTransformation: column offsets must increase");
        }
    }

    static EchelonTransformation identity(std::size_t nrows) {
        return EchelonTransformation(nrows, {});
    }

    std::size_t nrows() const { return nrows_; }
    const std::vector<EchelonTransformationColumn<T>>& columns() const { return columns_; }

    Matrix<T> to_matrix() const {
        Matrix<T> m = Matrix<T>::identity(nrows_);
        for (const auto& column : columns_)
            for (std::size_t i = 0; i < column.offset(); ++i)
                m(i, column.offset()) = column.entries()[i];
        return m;
    }

    // U * x for the leading rows of a column vector; reads only x, so entry
    // order does not matter.
    std::vector<T> apply_to_vector(const std::vector<T>& x) const {
        std::vector<T> result = x;
        for (const auto& column : columns_) {
            if (column.offset() >= x.size())
                throw dimension_error("EchelonTransformation: vector too short");
            const T& source = x[column.offset()];
            if (ring_traits<T>::is_zero(source)) continue;
            for (std::size_t i = 0; i < column.offset(); ++i)
                result[i] = result[i] + column.entries()[i] * source;
        }
        return result;
    }

    // U * x where only the first nrows() entries of x are acted on.
    Matrix<T> apply_to_matrix(const Matrix<T>& x) const {
        if (x.nrows() != nrows_)
            throw dimension_error("EchelonTransformation: row count mismatch");
        Matrix<T> result = x;
        for (const auto& column : columns_) {
            const std::size_t c = column.offset();
            for (std::size_t j = 0; j < x.ncols(); ++j) {
                const T& source = x(c, j);
                if (ring_traits<T>::is_zero(source)) continue;
                for (std::size_t i = 0; i < c; ++i)
                    result(i, j) = result(i, j) + column.entries()[i] * source;
            }
        }
        return result;
    }

    // Inverse, again unit upper triangular with the same column support.
    // Column j of the inverse is -U^-1 u_j, computed in ascending offset
    // order so earlier inverted columns can be reused.
    EchelonTransformation inverse() const {
        std::vector<EchelonTransformationColumn<T>> inverted;
        inverted.reserve(columns_.size());
        for (const auto& column : columns_) {
            std::vector<T> w = column.entries();
            for (const auto& done : inverted) {
                const T& factor = column.entries()[done.offset()];
                if (ring_traits<T>::is_zero(factor)) continue;
                for (std::size_t i = 0; i < done.offset(); ++i)
                    w[i] = w[i] + done.entries()[i] * factor;
            }
            for (auto& entry : w) entry = -entry;
            inverted.emplace_back(column.offset(), std::move(w));
        }
        return EchelonTransformation(nrows_, std::move(inverted));
    }

    friend bool operator==(const EchelonTransformation& a, const EchelonTransformation& b) {
        return a.nrows_ == b.nrows_ && a.columns_ == b.columns_;
    }

private:
    std::size_t nrows_;
    std::vector<EchelonTransformationColumn<T>> columns_;
};

// blockdiag(left, I) * right for left of size u embedded into right's size.
// Right columns must sit at offsets >= u, which holds for every sequence the
// echelon reduction unfolds.
template <division_ring_coefficients T>
EchelonTransformation<T> et_block_mul(const EchelonTransformation<T>& left,
                                      const EchelonTransformation<T>& right) {
    const std::size_t u = left.nrows();
    if (u > right.nrows())
        throw dimension_error("et_block_mul: left factor larger than right");
    std::vector<EchelonTransformationColumn<T>> columns(left.columns());
    for (const auto& column : right.columns()) {
        if (column.offset() < u)
            throw dimension_error("et_block_mul: right column inside the left block");
        std::vector<T> entries = column.entries();
        std::vector<T> head(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(u));
        head = left.apply_to_vector(head);
        std::copy(head.begin(), head.end(), entries.begin());
        columns.emplace_back(column.offset(), std::move(entries));
    }
    return EchelonTransformation<T>(right.nrows(), std::move(columns));
}

}  // namespace plelin
