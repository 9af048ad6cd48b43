#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace plelin {

// Extended Euclid on non-negative integers, written as an unfold of
// reduction steps followed by a fold of inverted elementary matrices.
//
// A single reduction rewrites the row vector (a b) as (b r) * T with
// T = [[t,1],[1,0]] and a = t*b + r. Unfolding yields T_1..T_k with
// (a b) = (g 0) * T_k^... ; folding accumulates (T_1 ... T_k)^-1, whose
// first column holds the Bezout coefficients.

template <typename T>
struct XgcdState {
    // Pair still being reduced.
    T a;
    T b;
    // Accumulated inverse product, row-major: [[x0, x1], [y0, y1]].
    T x0{1};
    T x1{0};
    T y0{0};
    T y1{1};
};

// One unfold step; returns the emitted quotient and advances the pair,
// or nothing once the pair is fully reduced.
template <typename T>
std::optional<T> xgcd_reduce(T& a, T& b) {
    if (b == 0) return std::nullopt;
    if (a == 0) {
        a = b;
        return T{-1};
    }
    T t = a / b;
    T r = a % b;
    a = std::move(b);
    b = std::move(r);
    return t;
}

// One fold step: multiply the accumulator by the inverse of [[t,1],[1,0]].
template <typename T>
void xgcd_accumulate(XgcdState<T>& state, const T& t) {
    T nx1 = state.x0 - t * state.x1;
    state.x0 = std::move(state.x1);
    state.x1 = std::move(nx1);
    T ny1 = state.y0 - t * state.y1;
    state.y0 = std::move(state.y1);
    state.y1 = std::move(ny1);
}

// Quotient sequence of the unfold; exposed so tests can replay the
// elementary-matrix identity step by step.
template <typename T>
std::vector<T> xgcd_quotients(T a, T b) {
    if (a < 0 || b < 0) throw std::domain_error("xgcd: arguments must be non-negative");
    std::vector<T> quotients;
    while (auto t = xgcd_reduce(a, b)) quotients.push_back(*std::move(t));
    return quotients;
}

template <typename T>
struct Bezout {
    T x;
    T y;
};

// Bezout coefficients: x*a + y*b = gcd(a, b), with gcd(0, 0) taken as 0
// (empty unfold, identity accumulator, so xgcd(0, 0) = (1, 0)).
template <typename T>
Bezout<T> xgcd(const T& a, const T& b) {
    XgcdState<T> state{a, b};
    for (const T& t : xgcd_quotients(a, b)) xgcd_accumulate(state, t);
    return Bezout<T>{state.x0, state.y0};
}

}  // namespace plelin
