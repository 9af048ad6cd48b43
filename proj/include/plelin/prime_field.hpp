#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace plelin {

// Element of F_p for a word-sized prime p. The modulus travels inside the
// value, so accidental mixing of different fields is caught at run time by
// every binary operation instead of silently computing garbage.
//
// A default-constructed element (modulus 0) is the neutral scalar used for
// the generic zero()/one() constants; it adopts the modulus of whatever it
// is combined with. Proper elements always satisfy residue < modulus.
class PrimeFieldElement {
public:
    PrimeFieldElement() : residue_(0), modulus_(0) {}

    std::uint64_t residue() const { return residue_; }
    std::uint64_t modulus() const { return modulus_; }

    bool is_zero() const { return residue_ == 0; }
    bool is_unit() const { return residue_ != 0; }

    // Inverse through the extended Euclid; throws std::domain_error on zero.
    PrimeFieldElement reciprocal() const;

    static PrimeFieldElement zero() { return PrimeFieldElement{}; }
    static PrimeFieldElement one() { return PrimeFieldElement{1, 0, trusted{}}; }

    PrimeFieldElement operator-() const;
    PrimeFieldElement& operator+=(const PrimeFieldElement& other);
    PrimeFieldElement& operator-=(const PrimeFieldElement& other);
    PrimeFieldElement& operator*=(const PrimeFieldElement& other);
    PrimeFieldElement& operator/=(const PrimeFieldElement& other);

    friend PrimeFieldElement operator+(PrimeFieldElement a, const PrimeFieldElement& b) {
        return a += b;
    }
    friend PrimeFieldElement operator-(PrimeFieldElement a, const PrimeFieldElement& b) {
        return a -= b;
    }
    friend PrimeFieldElement operator*(PrimeFieldElement a, const PrimeFieldElement& b) {
        return a *= b;
    }
    friend PrimeFieldElement operator/(PrimeFieldElement a, const PrimeFieldElement& b) {
        return a /= b;
    }

    friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b);
    friend bool operator!=(const PrimeFieldElement& a, const PrimeFieldElement& b) {
        return !(a == b);
    }

    std::string str() const { return std::to_string(residue_); }

private:
    friend class PrimeField;
    struct trusted {};
    PrimeFieldElement(std::uint64_t residue, std::uint64_t modulus, trusted)
        : residue_(residue), modulus_(modulus) {}

    // Resolves the common modulus of two operands; throws std::invalid_argument
    // when both carry one and they differ.
    static std::uint64_t joint_modulus(const PrimeFieldElement& a, const PrimeFieldElement& b);

    std::uint64_t residue_;
    std::uint64_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& value);

// The field F_p itself; the only way to mint proper elements. Primality is
// verified once here and trusted by element arithmetic from then on.
class PrimeField {
public:
    // Throws std::domain_error unless p is a prime below 2^63.
    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return modulus_; }

    // Reduces any signed value into [0, p).
    PrimeFieldElement element(std::int64_t value) const;
    PrimeFieldElement element_from_residue(std::uint64_t residue) const;

private:
    std::uint64_t modulus_;
};

}  // namespace plelin
