#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "plelin/coefficients.hpp"
#include "plelin/errors.hpp"
#include "plelin/matrix.hpp"

namespace plelin {

// One pivot row of a normalized echelon form, stored from the pivot column
// (the offset) rightward. The leading entry is always 1.
template <division_ring_coefficients T>
class EchelonFormRow {
public:
    EchelonFormRow(std::size_t offset, std::vector<T> entries)
        : offset_(offset), entries_(std::move(entries)) {
        if (entries_.empty() || !(entries_.front() == ring_traits<T>::one()))
            throw dimension_error("EchelonFormRow: leading entry must be 1");
    }

    std::size_t offset() const { return offset_; }
    const std::vector<T>& entries() const { return entries_; }
    std::vector<T>& entries() { return entries_; }

    friend bool operator==(const EchelonFormRow& a, const EchelonFormRow& b) {
        return a.offset_ == b.offset_ && a.entries_ == b.entries_;
    }

private:
    std::size_t offset_;
    std::vector<T> entries_;
};

// Normalized echelon matrix: pivot rows with strictly increasing offsets,
// zero rows left implicit at the bottom. Column offsets are absolute with
// respect to the full matrix the form belongs to.
template <division_ring_coefficients T>
class EchelonForm {
public:
    EchelonForm() : nrows_(0), ncols_(0) {}

    EchelonForm(std::size_t nrows, std::size_t ncols, std::vector<EchelonFormRow<T>> rows)
        : nrows_(nrows), ncols_(ncols), rows_(std::move(rows)) {
        if (rows_.size() > nrows_) throw dimension_error("EchelonForm: more rows than fit");
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if (rows_[k].offset() + rows_[k].entries().size() != ncols_)
                throw dimension_error("EchelonForm: row does not reach the right edge");
            if (k > 0 && rows_[k].offset() <= rows_[k - 1].offset())
                throw dimension_error("EchelonForm: pivot offsets must strictly increase");
        }
    }

    static EchelonForm zero(std::size_t nrows, std::size_t ncols) {
        return EchelonForm(nrows, ncols, {});
    }

    std::size_t nrows() const { return nrows_; }
    std::size_t ncols() const { return ncols_; }
    const std::vector<EchelonFormRow<T>>& rows() const { return rows_; }
    std::size_t nmb_pivots() const { return rows_.size(); }

    // Explicit rows at the top, implicit zero rows below.
    Matrix<T> to_matrix() const {
        Matrix<T> m(nrows_, ncols_);
        for (std::size_t k = 0; k < rows_.size(); ++k)
            for (std::size_t j = 0; j < rows_[k].entries().size(); ++j)
                m(k, rows_[k].offset() + j) = rows_[k].entries()[j];
        return m;
    }

    friend bool operator==(const EchelonForm& a, const EchelonForm& b) {
        return a.nrows_ == b.nrows_ && a.ncols_ == b.ncols_ && a.rows_ == b.rows_;
    }

private:
    std::size_t nrows_;
    std::size_t ncols_;
    std::vector<EchelonFormRow<T>> rows_;
};

// Reads a normalized echelon form off a plain matrix; throws dimension_error
// if the matrix is not in normalized echelon shape.
template <division_ring_coefficients T>
EchelonForm<T> echelon_form_from_matrix(const Matrix<T>& m) {
    std::vector<EchelonFormRow<T>> rows;
    long last_offset = -1;
    bool seen_zero_row = false;
    for (std::size_t i = 0; i < m.nrows(); ++i) {
        std::size_t j = 0;
        while (j < m.ncols() && ring_traits<T>::is_zero(m(i, j))) ++j;
        if (j == m.ncols()) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row || static_cast<long>(j) <= last_offset)
            throw dimension_error("echelon_form_from_matrix: not in echelon form");
        last_offset = static_cast<long>(j);
        std::vector<T> entries(m.row(i).begin() + static_cast<std::ptrdiff_t>(j),
                               m.row(i).end());
        rows.emplace_back(j, std::move(entries));
    }
    return EchelonForm<T>(m.nrows(), m.ncols(), std::move(rows));
}

}  // namespace plelin
