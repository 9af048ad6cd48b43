#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "plelin/coefficients.hpp"
#include "plelin/errors.hpp"
#include "plelin/matrix.hpp"

namespace plelin {

// One column of a left transformation: the diagonal position (offset), the
// diagonal entry itself (head, guaranteed nonzero), and everything below it.
template <division_ring_coefficients T>
class LeftTransformationColumn {
public:
    LeftTransformationColumn(std::size_t offset, T head, std::vector<T> tail)
        : offset_(offset), head_(std::move(head)), tail_(std::move(tail)) {
        if (!ring_traits<T>::is_unit(head_))
            throw dimension_error("LeftTransformationColumn: head must be a unit");
    }

    std::size_t offset() const { return offset_; }
    const T& head() const { return head_; }
    const std::vector<T>& tail() const { return tail_; }

    friend bool operator==(const LeftTransformationColumn& a, const LeftTransformationColumn& b) {
        return a.offset_ == b.offset_ && a.head_ == b.head_ && a.tail_ == b.tail_;
    }

private:
    std::size_t offset_;
    T head_;
    std::vector<T> tail_;
};

// Compact invertible lower-triangular factor: identity except for the listed
// columns, which sit at consecutive offsets and are stored without their
// leading zeros.
template <division_ring_coefficients T>
class LeftTransformation {
public:
    LeftTransformation() : nrows_(0) {}

    LeftTransformation(std::size_t nrows, std::vector<LeftTransformationColumn<T>> columns)
        : nrows_(nrows), columns_(std::move(columns)) {
        for (std::size_t k = 0; k < columns_.size(); ++k) {
            const auto& column = columns_[k];
            if (column.offset() >= nrows_)
                throw dimension_error("LeftTransformation: column offset out of range");
            if (column.offset() + 1 + column.tail().size() != nrows_)
                throw dimension_error("LeftTransformation: tail length mismatch");
            if (k > 0 && column.offset() != columns_[k - 1].offset() + 1)
                throw dimension_error("LeftTransformation: column offsets must be consecutive");
        }
    }

    static LeftTransformation identity(std::size_t nrows) { return LeftTransformation(nrows, {}); }

    std::size_t nrows() const { return nrows_; }
    const std::vector<LeftTransformationColumn<T>>& columns() const { return columns_; }
    bool is_identity_shape() const { return columns_.empty(); }

    Matrix<T> to_matrix() const {
        Matrix<T> m = Matrix<T>::identity(nrows_);
        for (const auto& column : columns_) {
            const std::size_t j = column.offset();
            m(j, j) = column.head();
            for (std::size_t k = 0; k < column.tail().size(); ++k)
                m(j + 1 + k, j) = column.tail()[k];
        }
        return m;
    }

    friend bool operator==(const LeftTransformation& a, const LeftTransformation& b) {
        return a.nrows_ == b.nrows_ && a.columns_ == b.columns_;
    }

private:
    std::size_t nrows_;
    std::vector<LeftTransformationColumn<T>> columns_;
};

}  // namespace plelin
