#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "plelin/coefficients.hpp"
#include "plelin/echelon_form.hpp"
#include "plelin/errors.hpp"
#include "plelin/left_transformation.hpp"
#include "plelin/matrix.hpp"
#include "plelin/permutation.hpp"

namespace plelin {

template <division_ring_coefficients T>
struct PLEMatrices {
    Matrix<T> p;
    Matrix<T> l;
    Matrix<T> e;
};

// A PLE hook of size n: permutation, left transformation and echelon form
// with rank/corank bookkeeping. With s = n - rank - corank, the hook's
// supports are confined to
//   - P - I on indices >= s,
//   - L - I on columns [s, s + rank),
//   - E on rows [s, s + rank),
// so the echelon rows materialize starting at row s. Accumulated hooks have
// s = 0; hooks embedded from a partially eliminated submatrix have s > 0.
template <division_ring_coefficients T>
class PLEHook {
public:
    PLEHook(RowPermutation perm, LeftTransformation<T> lt, EchelonForm<T> ef, std::size_t rank,
            std::size_t corank)
        : perm_(std::move(perm)),
          lt_(std::move(lt)),
          ef_(std::move(ef)),
          rank_(rank),
          corank_(corank) {
        validate();
    }

    std::size_t size() const { return perm_.size(); }
    const RowPermutation& perm() const { return perm_; }
    const LeftTransformation<T>& lt() const { return lt_; }
    const EchelonForm<T>& ef() const { return ef_; }
    std::size_t rank() const { return rank_; }
    std::size_t corank() const { return corank_; }

    std::size_t support_start() const { return size() - rank_ - corank_; }

    // Support invariants of the rank/corank definition; throws on violation.
    void validate() const {
        const std::size_t n = perm_.size();
        if (lt_.nrows() != n || ef_.nrows() != n)
            throw dimension_error("PLEHook: factor sizes disagree");
        if (rank_ + corank_ > n) throw dimension_error("PLEHook: rank + corank exceeds size");
        const std::size_t start = n - rank_ - corank_;
        for (std::size_t i = 0; i < start; ++i)
            if (perm_(i) != i)
                throw dimension_error("PLEHook: permutation moves a row before the support");
        if (lt_.columns().size() != rank_)
            throw dimension_error("PLEHook: left transformation must list one column per rank");
        if (!lt_.columns().empty() && lt_.columns().front().offset() != start)
            throw dimension_error("PLEHook: left-transformation columns outside the support");
        if (ef_.rows().size() != rank_)
            throw dimension_error("PLEHook: echelon form must carry one row per rank");
    }

    PLEMatrices<T> to_matrices() const {
        Matrix<T> e(size(), ef_.ncols());
        const std::size_t start = support_start();
        const auto& rows = ef_.rows();
        for (std::size_t k = 0; k < rows.size(); ++k)
            for (std::size_t j = 0; j < rows[k].entries().size(); ++j)
                e(start + k, rows[k].offset() + j) = rows[k].entries()[j];
        return PLEMatrices<T>{permutation_to_matrix<T>(perm_), lt_.to_matrix(), std::move(e)};
    }

    friend bool operator==(const PLEHook& a, const PLEHook& b) {
        return a.perm_ == b.perm_ && a.lt_ == b.lt_ && a.ef_ == b.ef_ && a.rank_ == b.rank_ &&
               a.corank_ == b.corank_;
    }

private:
    RowPermutation perm_;
    LeftTransformation<T> lt_;
    EchelonForm<T> ef_;
    std::size_t rank_;
    std::size_t corank_;
};

// Neutral element of the fold: identity factors, all-zero echelon form,
// rank 0, corank nrs.
template <division_ring_coefficients T>
PLEHook<T> first_hook(std::size_t nrs, std::size_t ncs) {
    return PLEHook<T>(RowPermutation::identity(nrs), LeftTransformation<T>::identity(nrs),
                      EchelonForm<T>::zero(nrs, ncs), 0, nrs);
}

template <division_ring_coefficients T>
struct SplitOffHook {
    PLEHook<T> hook;
    Matrix<T> remainder;
};

// One Gaussian step: find the leftmost nonzero column, swap its topmost
// nonzero entry up, record the raw column in L, the normalized pivot row in
// E, and return the eliminated bottom-right block. col_base is the absolute
// column index of m's first column within the original matrix, so echelon
// offsets come out absolute. Nothing is returned iff m is zero or has no
// rows.
template <division_ring_coefficients T>
std::optional<SplitOffHook<T>> split_off_hook(const Matrix<T>& m, std::size_t col_base = 0) {
    const std::size_t n = m.nrows();
    if (n == 0) return std::nullopt;

    std::size_t pivot_col = m.ncols();
    std::size_t pivot_row = 0;
    for (std::size_t j = 0; j < m.ncols() && pivot_col == m.ncols(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (!ring_traits<T>::is_zero(m(i, j))) {
                pivot_col = j;
                pivot_row = i;
                break;
            }
    if (pivot_col == m.ncols()) return std::nullopt;

    const T& head = m(pivot_row, pivot_col);
    const T head_inv = ring_traits<T>::reciprocal(head);

    std::vector<T> pivot_entries;
    pivot_entries.reserve(m.ncols() - pivot_col);
    pivot_entries.push_back(ring_traits<T>::one());
    for (std::size_t j = pivot_col + 1; j < m.ncols(); ++j)
        pivot_entries.push_back(m(pivot_row, j) * head_inv);

    // Sub-pivot column of the permuted matrix, unscaled.
    std::vector<T> tail;
    tail.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) tail.push_back(m(i == pivot_row ? 0 : i, pivot_col));

    Matrix<T> remainder(n - 1, m.ncols() - pivot_col - 1);
    for (std::size_t i = 1; i < n; ++i) {
        const std::size_t src = i == pivot_row ? 0 : i;
        const T& factor = tail[i - 1];
        if (ring_traits<T>::is_zero(factor)) {
            for (std::size_t j = pivot_col + 1; j < m.ncols(); ++j)
                remainder(i - 1, j - pivot_col - 1) = m(src, j);
        } else {
            for (std::size_t j = pivot_col + 1; j < m.ncols(); ++j)
                remainder(i - 1, j - pivot_col - 1) =
                    m(src, j) - factor * pivot_entries[j - pivot_col];
        }
    }

    LeftTransformation<T> lt(n, {LeftTransformationColumn<T>(0, head, std::move(tail))});
    EchelonForm<T> ef(n, col_base + m.ncols(),
                      {EchelonFormRow<T>(col_base + pivot_col, std::move(pivot_entries))});
    return SplitOffHook<T>{PLEHook<T>(RowPermutation::transposition(n, 0, pivot_row),
                                      std::move(lt), std::move(ef), 1, n - 1),
                           std::move(remainder)};
}

// Lifts a hook of a trailing submatrix to full size: the permutation fixes
// the new top rows, left-transformation offsets shift down-right, echelon
// column offsets stay put (they are absolute). Rank and corank carry over;
// the grown support start records the extra fixed rows.
template <division_ring_coefficients T>
PLEHook<T> embed_hook(const PLEHook<T>& h, std::size_t into) {
    if (into < h.size()) throw dimension_error("embed_hook: hook larger than target size");
    const std::size_t d = into - h.size();
    if (d == 0) return h;

    std::vector<std::size_t> images(into);
    for (std::size_t i = 0; i < d; ++i) images[i] = i;
    for (std::size_t i = 0; i < h.size(); ++i) images[d + i] = d + h.perm()(i);

    std::vector<LeftTransformationColumn<T>> columns;
    columns.reserve(h.lt().columns().size());
    for (const auto& column : h.lt().columns())
        columns.emplace_back(column.offset() + d, column.head(), column.tail());

    return PLEHook<T>(RowPermutation::from_images(std::move(images)),
                      LeftTransformation<T>(into, std::move(columns)),
                      EchelonForm<T>(into, h.ef().ncols(), h.ef().rows()), h.rank(), h.corank());
}

// Partially-defined associative product
//   (P1, L1, E1) * (P2, L2, E2) = (P1 P2, (P2^-1 L1 P2) L2, E1 + E2),
// defined when corank(a) >= rank(b) + corank(b). The conjugated L1 stays
// lower triangular because P2 fixes everything at or left of L1's columns;
// E1 + E2 is row concatenation since the supports cannot overlap. A gap
// between the supports (strict inequality) is only meaningful when the left
// factor is trivial, i.e. a first_hook; anything else is rejected rather
// than silently misplacing rows.
template <division_ring_coefficients T>
PLEHook<T> hook_mul(const PLEHook<T>& a, const PLEHook<T>& b) {
    if (a.size() != b.size())
        throw dimension_error("hook_mul: hooks of different sizes; embed first");
    if (a.ef().ncols() != b.ef().ncols())
        throw dimension_error("hook_mul: echelon widths disagree");
    if (a.corank() < b.rank() + b.corank())
        throw hook_product_error("hook_mul: product undefined, corank(a) < rank(b) + corank(b)");
    const std::size_t slack = a.corank() - b.rank() - b.corank();
    const bool a_trivial = a.rank() == 0 && a.perm().is_identity() && a.lt().is_identity_shape() &&
                           a.ef().rows().empty();
    if (slack > 0 && !a_trivial)
        throw hook_product_error("hook_mul: product undefined, supports leave a gap");

    const RowPermutation& p2 = b.perm();

    std::vector<LeftTransformationColumn<T>> columns;
    columns.reserve(a.lt().columns().size() + b.lt().columns().size());
    if (!a.lt().columns().empty()) {
        const std::size_t max_offset = a.lt().columns().back().offset();
        for (std::size_t i = 0; i <= max_offset; ++i)
            if (p2(i) != i)
                throw hook_product_error("hook_mul: conjugation would break triangularity");
        for (const auto& column : a.lt().columns()) {
            const std::size_t j = column.offset();
            std::vector<T> tail(column.tail().size(), ring_traits<T>::zero());
            for (std::size_t i = j + 1; i < a.size(); ++i)
                tail[i - j - 1] = column.tail()[p2(i) - j - 1];
            columns.emplace_back(j, column.head(), std::move(tail));
        }
    }
    for (const auto& column : b.lt().columns()) {
        if (!columns.empty() && column.offset() != columns.back().offset() + 1)
            throw hook_product_error("hook_mul: left-transformation columns not contiguous");
        columns.push_back(column);
    }

    std::vector<EchelonFormRow<T>> rows = a.ef().rows();
    rows.reserve(rows.size() + b.ef().rows().size());
    for (const auto& row : b.ef().rows()) {
        if (!rows.empty() && row.offset() <= rows.back().offset())
            throw hook_product_error("hook_mul: overlapping echelon supports");
        rows.push_back(row);
    }

    return PLEHook<T>(a.perm() * p2, LeftTransformation<T>(a.size(), std::move(columns)),
                      EchelonForm<T>(a.size(), a.ef().ncols(), std::move(rows)),
                      a.rank() + b.rank(), b.corank());
}

template <division_ring_coefficients T>
PLEHook<T> operator*(const PLEHook<T>& a, const PLEHook<T>& b) {
    return hook_mul(a, b);
}

// Runs the unfold and hands every hook, already embedded to full size, to
// the sink in fold order.
template <division_ring_coefficients T, typename Sink>
void unfold_ple(const Matrix<T>& m, Sink&& sink) {
    Matrix<T> current = m;
    std::size_t col_base = 0;
    while (auto step = split_off_hook(current, col_base)) {
        col_base = step->hook.ef().rows().front().offset() + 1;
        sink(embed_hook(step->hook, m.nrows()));
        current = std::move(step->remainder);
    }
}

template <division_ring_coefficients T>
std::vector<PLEHook<T>> unfold_hooks(const Matrix<T>& m) {
    std::vector<PLEHook<T>> hooks;
    unfold_ple(m, [&](PLEHook<T>&& h) { hooks.push_back(std::move(h)); });
    return hooks;
}

// Normalized PLE decomposition: fold of the hook product over the unfolded
// Gaussian steps.
template <division_ring_coefficients T>
PLEHook<T> ple(const Matrix<T>& m) {
    PLEHook<T> acc = first_hook<T>(m.nrows(), m.ncols());
    unfold_ple(m, [&](PLEHook<T>&& h) { acc = hook_mul(acc, h); });
    return acc;
}

}  // namespace plelin
