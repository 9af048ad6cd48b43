#include "plelin/rng.hpp"

namespace plelin {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64(s);
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t draw;
    do {
        draw = next_u64();
    } while (draw >= limit);
    return draw % bound;
}

mpz_class Rng::bits(std::size_t bits) {
    mpz_class value = 0;
    std::size_t produced = 0;
    while (produced < bits) {
        std::uint64_t word = next_u64();
        const std::size_t take = bits - produced < 64 ? bits - produced : 64;
        if (take < 64) word &= (std::uint64_t{1} << take) - 1;
        mpz_class chunk{static_cast<unsigned long>(word)};
        chunk <<= produced;
        value |= chunk;
        produced += take;
    }
    return value;
}

mpz_class Rng::symmetric(std::size_t nmb_bits) {
    // 2^(bits+1) + 1 values; draw bits+2 and reject the overshoot.
    const mpz_class bound = (mpz_class{1} << (nmb_bits + 1)) + 1;
    mpz_class draw;
    do {
        draw = bits(nmb_bits + 2);
    } while (draw >= bound);
    return draw - (mpz_class{1} << nmb_bits);
}

Rng Rng::split(std::uint64_t salt) const {
    std::uint64_t mix = state_[0] ^ rotl(salt, 13);
    return Rng{splitmix64(mix)};
}

}  // namespace plelin
