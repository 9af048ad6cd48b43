#include "plelin/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace plelin {

Rational::Rational(mpz_class numerator, mpz_class denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    mpz_class g = gcd(num_, den_);
    if (g != 1) {
        mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational{mpz_class{text}};
        return Rational{mpz_class{text.substr(0, slash)}, mpz_class{text.substr(slash + 1)}};
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");
    }
}

Rational Rational::reciprocal() const {
    if (num_ == 0) throw std::domain_error("Rational: reciprocal of zero");
    Rational result;
    if (num_ < 0) {
        result.num_ = -den_;
        result.den_ = -num_;
    } else {
        result.num_ = den_;
        result.den_ = num_;
    }
    return result;
}

Rational Rational::operator-() const {
    Rational result = *this;
    result.num_ = -result.num_;
    return result;
}

Rational& Rational::operator+=(const Rational& other) {
    // mpq-style addition: cancel gcd of the denominators first so the
    // numerator gcd that remains is a divisor of that small gcd.
    mpz_class g = gcd(den_, other.den_);
    if (g == 1) {
        num_ = num_ * other.den_ + other.num_ * den_;
        den_ *= other.den_;
        return *this;
    }
    mpz_class den_red, other_den_red;
    mpz_divexact(den_red.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(other_den_red.get_mpz_t(), other.den_.get_mpz_t(), g.get_mpz_t());
    mpz_class t = num_ * other_den_red + other.num_ * den_red;
    mpz_class g2 = gcd(t, g);
    if (g2 != 1) {
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), g2.get_mpz_t());
        mpz_divexact(g.get_mpz_t(), g.get_mpz_t(), g2.get_mpz_t());
    }
    num_ = std::move(t);
    den_ = den_red * g * other_den_red;
    if (num_ == 0) den_ = 1;
    return *this;
}

Rational& Rational::operator-=(const Rational& other) { return *this += -other; }

Rational& Rational::operator*=(const Rational& other) {
    // Cross-cancel before multiplying to keep intermediates small.
    mpz_class g1 = gcd(num_, other.den_);
    mpz_class g2 = gcd(other.num_, den_);
    mpz_class num_red, den_red, other_num_red, other_den_red;
    mpz_divexact(num_red.get_mpz_t(), num_.get_mpz_t(), g1.get_mpz_t());
    mpz_divexact(other_den_red.get_mpz_t(), other.den_.get_mpz_t(), g1.get_mpz_t());
    mpz_divexact(other_num_red.get_mpz_t(), other.num_.get_mpz_t(), g2.get_mpz_t());
    mpz_divexact(den_red.get_mpz_t(), den_.get_mpz_t(), g2.get_mpz_t());
    num_ = num_red * other_num_red;
    den_ = den_red * other_den_red;
    if (num_ == 0) den_ = 1;
    return *this;
}

Rational& Rational::operator/=(const Rational& other) { return *this *= other.reciprocal(); }

std::string Rational::str() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace plelin
