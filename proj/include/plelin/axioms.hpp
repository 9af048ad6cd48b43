#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "plelin/coefficients.hpp"

namespace plelin {

// Randomized/exhaustive checks that a coefficient implementation respects
// the ring and division-ring axioms. Failures are report entries carrying a
// counterexample, never exceptions.

struct AxiomResult {
    std::string axiom;
    bool passed = true;
    std::string counterexample;
};

struct AxiomReport {
    std::vector<AxiomResult> results;

    bool all_passed() const {
        for (const auto& r : results)
            if (!r.passed) return false;
        return true;
    }

    const AxiomResult* find(const std::string& axiom) const {
        for (const auto& r : results)
            if (r.axiom == axiom) return &r;
        return nullptr;
    }
};

struct AxiomOptions {
    bool commutative_multiplication = true;
    // Checks is_unit <=> !is_zero and the reciprocal laws.
    bool division_ring = true;
};

namespace detail {

template <typename T>
class AxiomRun {
public:
    explicit AxiomRun(AxiomOptions opts) : opts_(opts) {}

    void visit_triple(const T& x, const T& y, const T& z) {
        check("addition associative", (x + y) + z == x + (y + z), x, y, z);
        check("multiplication associative", (x * y) * z == x * (y * z), x, y, z);
        check("left distributive", x * (y + z) == x * y + x * z, x, y, z);
        check("right distributive", (x + y) * z == x * z + y * z, x, y, z);
        check("addition commutative", x + y == y + x, x, y);
        if (opts_.commutative_multiplication)
            check("multiplication commutative", x * y == y * x, x, y);
        visit_single(x);
    }

    void visit_single(const T& x) {
        const T zero = ring_traits<T>::zero();
        const T one = ring_traits<T>::one();
        check("additive identity", x + zero == x && zero + x == x, x);
        check("additive inverse", ring_traits<T>::is_zero(x + (-x)), x);
        check("multiplicative identity", x * one == x && one * x == x, x);
        check("zero annihilates", ring_traits<T>::is_zero(x * zero) &&
                                      ring_traits<T>::is_zero(zero * x),
              x);
        check("is_zero agrees with zero", ring_traits<T>::is_zero(x) == (x == zero), x);
        if (opts_.division_ring) {
            check("is_unit iff nonzero",
                  ring_traits<T>::is_unit(x) == !ring_traits<T>::is_zero(x), x);
            if (!ring_traits<T>::is_zero(x)) {
                const T inv = ring_traits<T>::reciprocal(x);
                check("reciprocal law", x * inv == one && inv * x == one, x);
            }
        }
    }

    AxiomReport report() const { return AxiomReport{results_}; }

private:
    template <typename... Args>
    void check(const char* axiom, bool ok, const Args&... witnesses) {
        AxiomResult* slot = nullptr;
        for (auto& r : results_)
            if (r.axiom == axiom) slot = &r;
        if (!slot) {
            results_.push_back(AxiomResult{axiom, true, {}});
            slot = &results_.back();
        }
        if (ok || !slot->passed) return;
        slot->passed = false;
        std::string witness;
        ((witness += (witness.empty() ? "" : ", ") + coefficient_str(witnesses)), ...);
        slot->counterexample = witness;
    }

    AxiomOptions opts_;
    std::vector<AxiomResult> results_;
};

}  // namespace detail

// Randomized mode: draws nmb_samples triples from the sampler.
template <typename T, typename Sampler>
AxiomReport run_axiom_suite(Sampler&& sample, std::size_t nmb_samples, AxiomOptions opts = {}) {
    detail::AxiomRun<T> run(opts);
    for (std::size_t i = 0; i < nmb_samples; ++i) {
        T x = sample();
        T y = sample();
        T z = sample();
        run.visit_triple(x, y, z);
    }
    return run.report();
}

// Small-exhaustive mode: all ordered triples over the given elements.
template <typename T>
AxiomReport run_axiom_suite_exhaustive(const std::vector<T>& elements, AxiomOptions opts = {}) {
    detail::AxiomRun<T> run(opts);
    for (const T& x : elements)
        for (const T& y : elements)
            for (const T& z : elements) run.visit_triple(x, y, z);
    return run.report();
}

}  // namespace plelin
