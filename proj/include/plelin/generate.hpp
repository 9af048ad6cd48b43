#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "plelin/echelon_form.hpp"
#include "plelin/left_transformation.hpp"
#include "plelin/matrix.hpp"
#include "plelin/permutation.hpp"
#include "plelin/prime_field.hpp"
#include "plelin/rational.hpp"
#include "plelin/rng.hpp"

namespace plelin {

// Random-matrix parameterization. Sizes of numerators and denominator
// factors are bounds in 64-bit words; denominators are products of up to
// nden factors.
struct GenParams {
    std::size_t nrs = 10;
    std::size_t ncs = 10;
    std::size_t snum = 1;
    std::size_t nden = 1;
    std::size_t sden = 1;
    std::uint64_t seed = 0;

    void validate() const {
        if (snum < 1 || nden < 1 || sden < 1)
            throw std::invalid_argument("GenParams: snum, nden, sden must be at least 1");
    }
};

namespace detail {

struct RationalEntrySample {
    Rational value;
    std::vector<mpz_class> denominator_factors;
};

// Numerator uniform in [-2^(64 snum), 2^(64 snum)]; denominator a product of
// k factors, k uniform in [1, nden], each factor uniform in [1, 2^(64 sden)].
inline RationalEntrySample sample_rational_entry(Rng& rng, const GenParams& params) {
    mpz_class numerator = rng.symmetric(64 * params.snum);
    const std::size_t nmb_factors = 1 + static_cast<std::size_t>(rng.below(params.nden));
    std::vector<mpz_class> factors;
    factors.reserve(nmb_factors);
    mpz_class denominator = 1;
    for (std::size_t k = 0; k < nmb_factors; ++k) {
        mpz_class factor = rng.bits(64 * params.sden) + 1;
        denominator *= factor;
        factors.push_back(std::move(factor));
    }
    return RationalEntrySample{Rational{std::move(numerator), std::move(denominator)},
                               std::move(factors)};
}

struct RationalSampler {
    const GenParams& params;
    Rational operator()(Rng& rng) const { return sample_rational_entry(rng, params).value; }
};

struct PrimeFieldSampler {
    const PrimeField& field;
    PrimeFieldElement operator()(Rng& rng) const {
        return field.element_from_residue(rng.below(field.modulus()));
    }
};

template <typename Sampler>
auto sample_nonzero(Rng& rng, const Sampler& sampler) {
    auto value = sampler(rng);
    while (value.is_zero()) value = sampler(rng);
    return value;
}

template <typename T, typename Sampler>
Matrix<T> random_matrix(Rng& rng, std::size_t nrs, std::size_t ncs, const Sampler& sampler) {
    Matrix<T> m(nrs, ncs);
    for (std::size_t i = 0; i < nrs; ++i)
        for (std::size_t j = 0; j < ncs; ++j) m(i, j) = sampler(rng);
    return m;
}

inline RowPermutation random_permutation(Rng& rng, std::size_t n) {
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = i;
    for (std::size_t i = n; i > 1; --i)
        std::swap(images[i - 1], images[rng.below(i)]);
    return RowPermutation::from_images(std::move(images));
}

// rank strictly increasing pivot columns, uniform among all such choices
// (selection sampling).
inline std::vector<std::size_t> random_pivot_columns(Rng& rng, std::size_t rank,
                                                     std::size_t ncs) {
    std::vector<std::size_t> pivots;
    pivots.reserve(rank);
    std::size_t needed = rank;
    for (std::size_t j = 0; j < ncs && needed > 0; ++j) {
        if (rng.below(ncs - j) < needed) {
            pivots.push_back(j);
            --needed;
        }
    }
    return pivots;
}

// M = P * L * E with random permutation, left transformation and normalized
// echelon form, the structure a PLE decomposition itself produces.
template <typename T, typename Sampler>
Matrix<T> random_ple_matrix(Rng& rng, std::size_t nrs, std::size_t ncs, const Sampler& sampler,
                            std::optional<std::size_t> forced_rank) {
    const std::size_t max_rank = nrs < ncs ? nrs : ncs;
    std::size_t rank = forced_rank ? *forced_rank : rng.below(max_rank + 1);
    if (rank > max_rank) throw std::invalid_argument("random_ple_matrix: rank too large");

    const RowPermutation perm = random_permutation(rng, nrs);

    std::vector<LeftTransformationColumn<T>> columns;
    columns.reserve(rank);
    for (std::size_t k = 0; k < rank; ++k) {
        T head = sample_nonzero(rng, sampler);
        std::vector<T> tail;
        tail.reserve(nrs - k - 1);
        for (std::size_t i = k + 1; i < nrs; ++i) tail.push_back(sampler(rng));
        columns.emplace_back(k, std::move(head), std::move(tail));
    }
    const LeftTransformation<T> lt(nrs, std::move(columns));

    const std::vector<std::size_t> pivots = random_pivot_columns(rng, rank, ncs);
    std::vector<EchelonFormRow<T>> rows;
    rows.reserve(rank);
    for (std::size_t k = 0; k < rank; ++k) {
        std::vector<T> entries;
        entries.reserve(ncs - pivots[k]);
        entries.push_back(ring_traits<T>::one());
        for (std::size_t j = pivots[k] + 1; j < ncs; ++j) entries.push_back(sampler(rng));
        rows.emplace_back(pivots[k], std::move(entries));
    }
    const EchelonForm<T> ef(nrs, ncs, std::move(rows));

    return permute_rows(perm, matrix_mul(lt.to_matrix(), ef.to_matrix()));
}

}  // namespace detail

inline Matrix<Rational> gen_random_matrix(const GenParams& params) {
    params.validate();
    Rng rng(params.seed);
    return detail::random_matrix<Rational>(rng, params.nrs, params.ncs,
                                           detail::RationalSampler{params});
}

inline Matrix<Rational> gen_random_ple_matrix(const GenParams& params,
                                              std::optional<std::size_t> forced_rank = {}) {
    params.validate();
    Rng rng(params.seed);
    return detail::random_ple_matrix<Rational>(rng, params.nrs, params.ncs,
                                               detail::RationalSampler{params}, forced_rank);
}

inline Matrix<PrimeFieldElement> gen_random_matrix(const GenParams& params,
                                                   const PrimeField& field) {
    params.validate();
    Rng rng(params.seed);
    return detail::random_matrix<PrimeFieldElement>(rng, params.nrs, params.ncs,
                                                    detail::PrimeFieldSampler{field});
}

inline Matrix<PrimeFieldElement> gen_random_ple_matrix(const GenParams& params,
                                                       const PrimeField& field,
                                                       std::optional<std::size_t> forced_rank = {}) {
    params.validate();
    Rng rng(params.seed);
    return detail::random_ple_matrix<PrimeFieldElement>(
        rng, params.nrs, params.ncs, detail::PrimeFieldSampler{field}, forced_rank);
}

}  // namespace plelin
