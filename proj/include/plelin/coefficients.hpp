#pragma once

#include <concepts>
#include <sstream>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "plelin/prime_field.hpp"
#include "plelin/rational.hpp"

namespace plelin {

// Uniform access to the constants and predicates a coefficient domain must
// provide. The primary template covers types exposing them as members;
// foreign types (mpz_class) get their own specialization below.
template <typename T>
struct ring_traits {
    static T zero() { return T::zero(); }
    static T one() { return T::one(); }
    static bool is_zero(const T& x) { return x.is_zero(); }
    static bool is_unit(const T& x) { return x.is_unit(); }
    static T reciprocal(const T& x) { return x.reciprocal(); }
};

template <>
struct ring_traits<mpz_class> {
    static mpz_class zero() { return mpz_class{0}; }
    static mpz_class one() { return mpz_class{1}; }
    static bool is_zero(const mpz_class& x) { return x == 0; }
    static bool is_unit(const mpz_class& x) { return x == 1 || x == -1; }
};

// Ring coefficients: enough for matrix arithmetic.
template <typename T>
concept ring_coefficients = requires(const T a, const T b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a == b } -> std::convertible_to<bool>;
    { ring_traits<T>::zero() } -> std::convertible_to<T>;
    { ring_traits<T>::one() } -> std::convertible_to<T>;
    { ring_traits<T>::is_zero(a) } -> std::convertible_to<bool>;
};

// Division-ring coefficients: every nonzero element invertible, with
// decidable zero and unit tests. What the PLE decomposition requires.
template <typename T>
concept division_ring_coefficients = ring_coefficients<T> && requires(const T a) {
    { ring_traits<T>::is_unit(a) } -> std::convertible_to<bool>;
    { ring_traits<T>::reciprocal(a) } -> std::convertible_to<T>;
};

static_assert(division_ring_coefficients<Rational>);
static_assert(division_ring_coefficients<PrimeFieldElement>);
static_assert(ring_coefficients<mpz_class>);

template <typename T>
std::string coefficient_str(const T& value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

}  // namespace plelin
