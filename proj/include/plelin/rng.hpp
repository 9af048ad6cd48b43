#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace plelin {

// xoshiro256** seeded through splitmix64. Generated matrices must be
// byte-identical for a given seed across platforms and standard-library
// implementations, so no <random> distributions appear anywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    // Uniform in [0, bound), bound >= 1. Rejection sampling, unbiased.
    std::uint64_t below(std::uint64_t bound);

    // Uniform in [0, 2^bits), assembled from 64-bit words.
    mpz_class bits(std::size_t bits);

    // Uniform in [-2^bits, 2^bits], endpoints included.
    mpz_class symmetric(std::size_t bits);

    // Derive an independent generator; used to give every matrix of a
    // benchmark corpus its own reproducible stream.
    Rng split(std::uint64_t salt) const;

private:
    std::uint64_t state_[4];
};

}  // namespace plelin
