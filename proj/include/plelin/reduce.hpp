#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "plelin/coefficients.hpp"
#include "plelin/echelon_form.hpp"
#include "plelin/echelon_transformation.hpp"
#include "plelin/errors.hpp"
#include "plelin/matrix.hpp"
#include "plelin/ple.hpp"

namespace plelin {

// Intermediate state when reducing an echelon form from its rightmost pivot
// leftward: the transformation accumulated so far, the block of rows that
// still sit above unprocessed pivots (restricted to the processed columns),
// and the already-reduced trailing echelon form.
template <division_ring_coefficients T>
class ERHook {
public:
    ERHook(EchelonTransformation<T> et, Matrix<T> block, EchelonForm<T> ef)
        : et_(std::move(et)), block_(std::move(block)), ef_(std::move(ef)) {
        if (block_.nrows() + ef_.nrows() != et_.nrows())
            throw dimension_error("ERHook: block and echelon rows must fill the transformation");
        if (!ef_.rows().empty() &&
            block_.ncols() != ef_.ncols() - ef_.rows().front().offset())
            throw dimension_error("ERHook: block width disagrees with echelon span");
    }

    static ERHook identity() {
        return ERHook(EchelonTransformation<T>::identity(0), Matrix<T>(0, 0),
                      EchelonForm<T>::zero(0, 0));
    }

    bool is_identity() const {
        return et_.nrows() == 0 && block_.nrows() == 0 && block_.ncols() == 0 &&
               ef_.nrows() == 0 && ef_.ncols() == 0;
    }

    const EchelonTransformation<T>& et() const { return et_; }
    const Matrix<T>& block() const { return block_; }
    const EchelonForm<T>& ef() const { return ef_; }

private:
    EchelonTransformation<T> et_;
    Matrix<T> block_;
    EchelonForm<T> ef_;
};

template <division_ring_coefficients T>
struct SplitOffERHook {
    ERHook<T> hook;
    EchelonForm<T> remaining;
};

// Splits off the rightmost pivot of a normalized echelon form: U clears the
// column above that pivot, the hook keeps the cleared block and the pivot
// row (plus trailing zero rows), and the part left of the pivot column stays
// behind for the next step. Nothing is returned once no pivot rows remain.
template <division_ring_coefficients T>
std::optional<SplitOffERHook<T>> split_off_er_hook(const EchelonForm<T>& e) {
    if (e.rows().empty()) return std::nullopt;

    const std::size_t nmb_pivots = e.rows().size();
    const EchelonFormRow<T>& pivot = e.rows().back();
    const std::size_t c = pivot.offset();

    std::vector<EchelonFormRow<T>> remaining_rows;
    remaining_rows.reserve(nmb_pivots - 1);
    std::vector<T> above;
    above.reserve(nmb_pivots - 1);
    Matrix<T> cleared(nmb_pivots - 1, e.ncols() - c);
    for (std::size_t k = 0; k + 1 < nmb_pivots; ++k) {
        const EchelonFormRow<T>& row = e.rows()[k];
        const std::size_t split_at = c - row.offset();
        remaining_rows.emplace_back(
            row.offset(), std::vector<T>(row.entries().begin(),
                                         row.entries().begin() +
                                             static_cast<std::ptrdiff_t>(split_at)));
        const T factor = row.entries()[split_at];
        above.push_back(-factor);
        // cleared row = right part minus factor * pivot row; first entry 0
        for (std::size_t j = 1; j < cleared.ncols(); ++j)
            cleared(k, j) = row.entries()[split_at + j] - factor * pivot.entries()[j];
    }

    EchelonTransformation<T> u(
        e.nrows(), {EchelonTransformationColumn<T>(nmb_pivots - 1, std::move(above))});
    EchelonForm<T> tail(e.nrows() - (nmb_pivots - 1), e.ncols(), {pivot});
    EchelonForm<T> remaining(nmb_pivots - 1, c, std::move(remaining_rows));
    return SplitOffERHook<T>{ERHook<T>(std::move(u), std::move(cleared), std::move(tail)),
                             std::move(remaining)};
}

// Product of ER hooks,
//   (U, M, E) * (U', M', E')
//     = ( [U U't; U'b], [M | (U M')t], [[E, (U M')b], [0, E']] ),
// where U' splits below row count(U) and U M' splits below row count(M).
// The left factor is the newer hook (further left in the echelon form), the
// right factor the accumulation of everything to its right.
template <division_ring_coefficients T>
ERHook<T> er_hook_mul(const ERHook<T>& a, const ERHook<T>& b) {
    if (a.is_identity()) return b;
    if (b.is_identity()) return a;

    const std::size_t u = a.et().nrows();
    if (b.block().nrows() != u)
        throw dimension_error("er_hook_mul: right block rows must match left size");

    const Matrix<T> transformed = a.et().apply_to_matrix(b.block());
    const std::size_t block_rows = a.block().nrows();
    const std::size_t ef_rows = a.ef().nrows();
    const std::size_t explicit_rows = a.ef().rows().size();

    // Zero rows of the left echelon part may not sit above anything nonzero.
    for (std::size_t i = explicit_rows; i < ef_rows; ++i) {
        for (std::size_t j = 0; j < transformed.ncols(); ++j)
            if (!ring_traits<T>::is_zero(transformed(block_rows + i, j)))
                throw dimension_error("er_hook_mul: nonzero block beside implicit zero rows");
        if (!b.ef().rows().empty())
            throw dimension_error("er_hook_mul: implicit zero rows above a nonempty tail");
    }

    Matrix<T> block(block_rows, a.block().ncols() + transformed.ncols());
    for (std::size_t i = 0; i < block_rows; ++i) {
        for (std::size_t j = 0; j < a.block().ncols(); ++j) block(i, j) = a.block()(i, j);
        for (std::size_t j = 0; j < transformed.ncols(); ++j)
            block(i, a.block().ncols() + j) = transformed(i, j);
    }

    std::vector<EchelonFormRow<T>> rows;
    rows.reserve(explicit_rows + b.ef().rows().size());
    for (std::size_t k = 0; k < explicit_rows; ++k) {
        std::vector<T> entries = a.ef().rows()[k].entries();
        entries.reserve(entries.size() + transformed.ncols());
        for (std::size_t j = 0; j < transformed.ncols(); ++j)
            entries.push_back(transformed(block_rows + k, j));
        rows.emplace_back(a.ef().rows()[k].offset(), std::move(entries));
    }
    for (const auto& row : b.ef().rows()) rows.push_back(row);

    return ERHook<T>(et_block_mul(a.et(), b.et()), std::move(block),
                     EchelonForm<T>(ef_rows + b.ef().nrows(), b.ef().ncols(), std::move(rows)));
}

template <division_ring_coefficients T>
ERHook<T> operator*(const ERHook<T>& a, const ERHook<T>& b) {
    return er_hook_mul(a, b);
}

template <division_ring_coefficients T, typename Sink>
void unfold_echelon_reduction(const EchelonForm<T>& e, Sink&& sink) {
    EchelonForm<T> current = e;
    while (auto step = split_off_er_hook(current)) {
        sink(std::move(step->hook));
        current = std::move(step->remaining);
    }
}

template <division_ring_coefficients T>
std::vector<ERHook<T>> unfold_er_hooks(const EchelonForm<T>& e) {
    std::vector<ERHook<T>> hooks;
    unfold_echelon_reduction(e, [&](ERHook<T>&& h) { hooks.push_back(std::move(h)); });
    return hooks;
}

// Reduces a normalized echelon form: returns (U, E') with E = U * E' and E'
// in reduced row echelon form. The folded hook carries the clearing
// transformation (it maps E to E'), so the returned factor is its inverse.
// Zero rows never enter the loop; they ride along in the first hook's tail.
template <division_ring_coefficients T>
std::pair<EchelonTransformation<T>, EchelonForm<T>> reduce_echelon(const EchelonForm<T>& e) {
    ERHook<T> acc = ERHook<T>::identity();
    unfold_echelon_reduction(e, [&](ERHook<T>&& h) { acc = er_hook_mul(h, acc); });
    if (acc.is_identity())
        return {EchelonTransformation<T>::identity(e.nrows()), e};
    if (acc.block().nrows() != 0)
        throw internal_error("reduce_echelon: fold left unprocessed rows behind");
    return {acc.et().inverse(), acc.ef()};
}

template <division_ring_coefficients T>
struct PLUEMatrices {
    Matrix<T> p;
    Matrix<T> l;
    Matrix<T> u;
    Matrix<T> e;
};

// P L U E' decomposition: P, L from the PLE hook, U and the reduced form E'
// from reducing its echelon factor.
template <division_ring_coefficients T>
class PLUEHook {
public:
    PLUEHook(RowPermutation perm, LeftTransformation<T> lt, EchelonTransformation<T> et,
             EchelonForm<T> ef)
        : perm_(std::move(perm)), lt_(std::move(lt)), et_(std::move(et)), ef_(std::move(ef)) {}

    const RowPermutation& perm() const { return perm_; }
    const LeftTransformation<T>& lt() const { return lt_; }
    const EchelonTransformation<T>& et() const { return et_; }
    const EchelonForm<T>& ef() const { return ef_; }
    std::size_t rank() const { return ef_.rows().size(); }

    PLUEMatrices<T> to_matrices() const {
        return PLUEMatrices<T>{permutation_to_matrix<T>(perm_), lt_.to_matrix(), et_.to_matrix(),
                               ef_.to_matrix()};
    }

private:
    RowPermutation perm_;
    LeftTransformation<T> lt_;
    EchelonTransformation<T> et_;
    EchelonForm<T> ef_;
};

template <division_ring_coefficients T>
PLUEHook<T> rref(const Matrix<T>& m) {
    PLEHook<T> hook = ple(m);
    auto [u, reduced] = reduce_echelon(hook.ef());
    return PLUEHook<T>(hook.perm(), hook.lt(), std::move(u), std::move(reduced));
}

}  // namespace plelin
