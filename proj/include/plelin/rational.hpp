#pragma once

#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace plelin {

// Arbitrary-precision rational in canonical form: denominator positive,
// numerator and denominator coprime, zero stored as 0/1. Equality is plain
// field comparison.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int value) : num_(value), den_(1) {}
    Rational(long value) : num_(value), den_(1) {}
    explicit Rational(mpz_class numerator) : num_(std::move(numerator)), den_(1) {}

    // Throws std::domain_error on a zero denominator.
    Rational(mpz_class numerator, mpz_class denominator);

    // Parses "p/q" or "p"; throws std::invalid_argument on malformed input.
    static Rational parse(const std::string& text);

    const mpz_class& numerator() const { return num_; }
    const mpz_class& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_unit() const { return num_ != 0; }

    // Multiplicative inverse; throws std::domain_error on zero.
    Rational reciprocal() const;

    static Rational zero() { return Rational{}; }
    static Rational one() { return Rational{1}; }

    Rational operator-() const;
    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);
    Rational& operator/=(const Rational& other);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }
    friend bool operator!=(const Rational& lhs, const Rational& rhs) { return !(lhs == rhs); }

    // "p/q", or just "p" when the denominator is 1.
    std::string str() const;

private:
    mpz_class num_;
    mpz_class den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace plelin
