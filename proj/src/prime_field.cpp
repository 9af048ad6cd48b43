#include "plelin/prime_field.hpp"

#include <ostream>
#include <stdexcept>

#include <gmpxx.h>

#include "plelin/xgcd.hpp"

namespace plelin {

namespace {

using u128 = unsigned __int128;

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    const std::uint64_t s = a + b;  // p < 2^63, no overflow
    return s >= p ? s - p : s;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(u128{a} * b % p);
}

}  // namespace

std::uint64_t PrimeFieldElement::joint_modulus(const PrimeFieldElement& a,
                                               const PrimeFieldElement& b) {
    if (a.modulus_ == b.modulus_) return a.modulus_;
    if (a.modulus_ == 0) return b.modulus_;
    if (b.modulus_ == 0) return a.modulus_;
    throw std::invalid_argument("PrimeFieldElement: mixing moduli " +
                                std::to_string(a.modulus_) + " and " + std::to_string(b.modulus_));
}

PrimeFieldElement PrimeFieldElement::reciprocal() const {
    if (residue_ == 0) throw std::domain_error("PrimeFieldElement: reciprocal of zero");
    if (modulus_ == 0) return *this;  // neutral one
    const auto bezout = xgcd<std::int64_t>(static_cast<std::int64_t>(residue_),
                                           static_cast<std::int64_t>(modulus_));
    std::int64_t x = bezout.x % static_cast<std::int64_t>(modulus_);
    if (x < 0) x += static_cast<std::int64_t>(modulus_);
    return PrimeFieldElement{static_cast<std::uint64_t>(x), modulus_, trusted{}};
}

PrimeFieldElement PrimeFieldElement::operator-() const {
    if (residue_ == 0) return *this;
    if (modulus_ == 0)
        throw std::invalid_argument("PrimeFieldElement: negating a neutral scalar");
    return PrimeFieldElement{modulus_ - residue_, modulus_, trusted{}};
}

PrimeFieldElement& PrimeFieldElement::operator+=(const PrimeFieldElement& other) {
    const std::uint64_t p = joint_modulus(*this, other);
    if (p == 0) {
        residue_ += other.residue_;  // neutral scalars only: 0 or 1 each
        return *this;
    }
    residue_ = add_mod(residue_ % p, other.residue_ % p, p);
    modulus_ = p;
    return *this;
}

PrimeFieldElement& PrimeFieldElement::operator-=(const PrimeFieldElement& other) {
    const std::uint64_t p = joint_modulus(*this, other);
    if (p == 0) {
        if (residue_ < other.residue_)
            throw std::invalid_argument("PrimeFieldElement: negative neutral scalar");
        residue_ -= other.residue_;
        return *this;
    }
    const std::uint64_t neg = other.residue_ % p == 0 ? 0 : p - other.residue_ % p;
    residue_ = add_mod(residue_ % p, neg, p);
    modulus_ = p;
    return *this;
}

PrimeFieldElement& PrimeFieldElement::operator*=(const PrimeFieldElement& other) {
    const std::uint64_t p = joint_modulus(*this, other);
    if (p == 0) {
        residue_ *= other.residue_;
        return *this;
    }
    residue_ = mul_mod(residue_ % p, other.residue_ % p, p);
    modulus_ = p;
    return *this;
}

PrimeFieldElement& PrimeFieldElement::operator/=(const PrimeFieldElement& other) {
    return *this *= other.reciprocal();
}

bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    const std::uint64_t p = PrimeFieldElement::joint_modulus(a, b);
    if (p == 0) return a.residue_ == b.residue_;
    return a.residue_ % p == b.residue_ % p;
}

std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& value) {
    return os << value.residue();
}

PrimeField::PrimeField(std::uint64_t p) : modulus_(p) {
    if (p >= (std::uint64_t{1} << 63))
        throw std::domain_error("PrimeField: modulus must be below 2^63");
    mpz_class m{static_cast<unsigned long>(p)};
    if (mpz_probab_prime_p(m.get_mpz_t(), 40) == 0)
        throw std::domain_error("PrimeField: " + std::to_string(p) + " is not prime");
}

PrimeFieldElement PrimeField::element(std::int64_t value) const {
    std::int64_t r = value % static_cast<std::int64_t>(modulus_);
    if (r < 0) r += static_cast<std::int64_t>(modulus_);
    return PrimeFieldElement{static_cast<std::uint64_t>(r), modulus_, PrimeFieldElement::trusted{}};
}

PrimeFieldElement PrimeField::element_from_residue(std::uint64_t residue) const {
    return PrimeFieldElement{residue % modulus_, modulus_, PrimeFieldElement::trusted{}};
}

}  // namespace plelin
