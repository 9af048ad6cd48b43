#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <vector>

#include "oracles.hpp"
#include "plelin/generate.hpp"
#include "plelin/ple.hpp"
#include "plelin/prime_field.hpp"
#include "plelin/rational.hpp"
#include "plelin/rng.hpp"

using namespace plelin;

namespace {

Rational q(long num, long den = 1) { return Rational{num, den}; }

template <division_ring_coefficients T>
Matrix<T> reconstruct(const PLEHook<T>& hook) {
    const auto f = hook.to_matrices();
    return matrix_mul(f.p, matrix_mul(f.l, f.e));
}

Matrix<Rational> usage_matrix() {
    return Matrix<Rational>::from_rows({
        {84, 168, 588, -252, 336, 49},
        {672, 1344, 4704, -1992, 4722, 2552},
        {-504, -1008, -3528, 2100, -1575, -4998},
        {168, 336, 1176, -168, 1428, -2002},
    });
}

// Size 4, rank 2, corank 1 example triple.
PLEHook<Rational> example_hook() {
    LeftTransformation<Rational> lt(
        4, {LeftTransformationColumn<Rational>(1, q(1, 2), {q(-3), q(7, 3)}),
            LeftTransformationColumn<Rational>(2, q(4), {q(-17)})});
    EchelonForm<Rational> ef(4, 6,
                             {EchelonFormRow<Rational>(3, {q(1), q(-3), q(1, 13)}),
                              EchelonFormRow<Rational>(4, {q(1), q(0)})});
    return PLEHook<Rational>(RowPermutation::from_images({0, 2, 3, 1}), std::move(lt),
                             std::move(ef), 2, 1);
}

}  // namespace

TEST_CASE("split_off_hook: zero and degenerate matrices give nothing") {
    CHECK_FALSE(split_off_hook(Matrix<Rational>(3, 3)).has_value());
    CHECK_FALSE(split_off_hook(Matrix<Rational>(0, 4)).has_value());
    CHECK_FALSE(split_off_hook(Matrix<Rational>(4, 0)).has_value());
}

TEST_CASE("split_off_hook on [[0,2],[3,4]]") {
    const auto m = Matrix<Rational>::from_rows({{0, 2}, {3, 4}});
    const auto step = split_off_hook(m);
    REQUIRE(step.has_value());

    const auto& hook = step->hook;
    CHECK(hook.rank() == 1);
    CHECK(hook.corank() == 1);
    CHECK(hook.perm() == RowPermutation::transposition(2, 0, 1));

    REQUIRE(hook.lt().columns().size() == 1);
    const auto& column = hook.lt().columns().front();
    CHECK(column.offset() == 0);
    CHECK(column.head() == q(3));
    CHECK(column.tail() == std::vector<Rational>{q(0)});

    REQUIRE(hook.ef().rows().size() == 1);
    const auto& row = hook.ef().rows().front();
    CHECK(row.offset() == 0);
    CHECK(row.entries() == std::vector<Rational>{q(1), q(4, 3)});

    CHECK(step->remainder == Matrix<Rational>::from_rows({{2}}));

    // M = P L (E + M'): pad the remainder into the full shape and check.
    Matrix<Rational> padded(2, 2);
    padded(1, 1) = q(2);
    const auto f = hook.to_matrices();
    CHECK(matrix_mul(f.p, matrix_mul(f.l, matrix_add(f.e, padded))) == m);
}

TEST_CASE("split_off_hook on the 4x6 example: first Gaussian step") {
    const auto step = split_off_hook(usage_matrix());
    REQUIRE(step.has_value());

    const auto& column = step->hook.lt().columns().front();
    CHECK(column.head() == q(84));
    CHECK(column.tail() == std::vector<Rational>{q(672), q(-504), q(168)});

    const auto& row = step->hook.ef().rows().front();
    CHECK(row.offset() == 0);
    CHECK(row.entries() ==
          std::vector<Rational>{q(1), q(2), q(7), q(-3), q(4), q(7, 12)});

    REQUIRE(step->remainder.nrows() == 3);
    REQUIRE(step->remainder.ncols() == 5);
    CHECK(step->remainder.row(0) ==
          std::vector<Rational>{q(0), q(0), q(24), q(2034), q(2160)});
}

TEST_CASE("split_off_hook skips leading zero columns with absolute offsets") {
    const auto m = Matrix<Rational>::from_rows({{0, 0, 5, 1}, {0, 0, 10, 3}});
    const auto step = split_off_hook(m, 7);
    REQUIRE(step.has_value());
    CHECK(step->hook.ef().rows().front().offset() == 7 + 2);
    CHECK(step->hook.ef().ncols() == 7 + 4);
    CHECK(step->remainder == Matrix<Rational>::from_rows({{1}}));
}

TEST_CASE("first_hook") {
    const auto hook = first_hook<Rational>(4, 6);
    const auto f = hook.to_matrices();
    CHECK(f.p == Matrix<Rational>::identity(4));
    CHECK(f.l == Matrix<Rational>::identity(4));
    CHECK(f.e == Matrix<Rational>(4, 6));
    CHECK(hook.rank() == 0);
    CHECK(hook.corank() == 4);

    CHECK(first_hook<Rational>(5, 3).rank() == 0);
    CHECK(first_hook<Rational>(5, 3).corank() == 5);

    const auto degenerate = first_hook<Rational>(0, 0);
    CHECK(degenerate.size() == 0);
    CHECK(degenerate.to_matrices().e == Matrix<Rational>(0, 0));
}

TEST_CASE("first_hook is a left identity for every unfold-produced hook") {
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const GenParams params{5, 7, 1, 1, 1, rng.next_u64()};
        const auto m = gen_random_matrix(params);
        for (const auto& hook : unfold_hooks(m))
            CHECK(hook_mul(first_hook<Rational>(5, 7), hook) == hook);
        const auto folded = ple(m);
        CHECK(hook_mul(first_hook<Rational>(5, 7), folded) == folded);
    }
}

TEST_CASE("embed_hook") {
    const auto m = Matrix<Rational>::from_rows({{0, 2}, {3, 4}});
    const auto hook = split_off_hook(m)->hook;

    CHECK(embed_hook(hook, 2) == hook);
    CHECK_THROWS_AS(embed_hook(hook, 1), dimension_error);

    const auto embedded = embed_hook(hook, 3);
    CHECK(embedded.size() == 3);
    CHECK(embedded.perm() == RowPermutation::transposition(3, 1, 2));
    CHECK(embedded.rank() == 1);
    CHECK(embedded.corank() == 1);
    CHECK(embedded.support_start() == 1);
    REQUIRE(embedded.lt().columns().size() == 1);
    CHECK(embedded.lt().columns().front().offset() == 1);
    CHECK(embedded.lt().columns().front().head() == q(3));

    // materialized blocks: top-left identity, original content shifted
    const auto f = embedded.to_matrices();
    CHECK(f.l == Matrix<Rational>::from_rows({{1, 0, 0}, {0, 3, 0}, {0, 0, 1}}));
    CHECK(f.e == Matrix<Rational>::from_rows({{0, 0}, {1, q(4, 3)}, {0, 0}}));
}

TEST_CASE("embed_hook preserves reconstruction on padded matrices") {
    Rng rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t nrows = 1 + rng.below(5);
        const std::size_t ncols = 1 + rng.below(5);
        const GenParams params{nrows, ncols, 1, 1, 1, rng.next_u64()};
        const auto m = gen_random_matrix(params);
        const auto step = split_off_hook(m);
        if (!step) continue;

        const std::size_t d = 1 + rng.below(3);
        const auto embedded = embed_hook(step->hook, nrows + d);

        // the padded matrix has d zero rows on top
        Matrix<Rational> padded(nrows + d, ncols);
        for (std::size_t i = 0; i < nrows; ++i)
            for (std::size_t j = 0; j < ncols; ++j) padded(d + i, j) = m(i, j);

        // E + M' with the remainder placed below/right of the pivot
        const std::size_t pivot_col = step->hook.ef().rows().front().offset();
        const auto f = embedded.to_matrices();
        Matrix<Rational> e_plus_rest = f.e;
        for (std::size_t i = 0; i < step->remainder.nrows(); ++i)
            for (std::size_t j = 0; j < step->remainder.ncols(); ++j)
                e_plus_rest(d + 1 + i, pivot_col + 1 + j) = step->remainder(i, j);
        CHECK(matrix_mul(f.p, matrix_mul(f.l, e_plus_rest)) == padded);
    }
}

TEST_CASE("hook_mul combines the two hooks of [[0,2],[3,4]]") {
    const auto m = Matrix<Rational>::from_rows({{0, 2}, {3, 4}});
    const auto hooks = unfold_hooks(m);
    REQUIRE(hooks.size() == 2);

    const auto product = hook_mul(hooks[0], hooks[1]);
    const auto f = product.to_matrices();
    CHECK(f.p == Matrix<Rational>::from_rows({{0, 1}, {1, 0}}));
    CHECK(f.l == Matrix<Rational>::from_rows({{3, 0}, {0, 2}}));
    CHECK(f.e == Matrix<Rational>::from_rows({{1, q(4, 3)}, {0, 1}}));
    CHECK(reconstruct(product) == m);
    CHECK(product.rank() == 2);
    CHECK(product.corank() == 0);
}

TEST_CASE("hook_mul rejects products outside the precondition") {
    const auto single = Matrix<Rational>::from_rows({{5}});
    const auto hook = split_off_hook(single)->hook;  // rank 1, corank 0, size 1
    CHECK_THROWS_AS(hook_mul(hook, hook), hook_product_error);
}

TEST_CASE("conjugation inside hook_mul keeps L lower triangular") {
    Rng rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t nrows = 2 + rng.below(6);
        const GenParams params{nrows, nrows, 1, 1, 1, rng.next_u64()};
        const auto m = gen_random_matrix(params);
        const auto hooks = unfold_hooks(m);
        auto acc = first_hook<Rational>(nrows, nrows);
        for (const auto& hook : hooks) {
            // materialize P2^-1 L1 P2 directly and check triangularity
            const auto l1 = acc.lt().to_matrix();
            const auto p2 = permutation_to_matrix<Rational>(hook.perm());
            const auto p2inv = permutation_to_matrix<Rational>(hook.perm().inverse());
            const auto conjugated = matrix_mul(p2inv, matrix_mul(l1, p2));
            for (std::size_t i = 0; i < nrows; ++i)
                for (std::size_t j = i + 1; j < nrows; ++j)
                    CHECK(conjugated(i, j) == q(0));
            acc = hook_mul(acc, hook);
        }
        CHECK(reconstruct(acc) == m);
    }
}

TEST_CASE("unfolded hook sequences satisfy the product precondition and associativity") {
    Rng rng(59);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t nrows = 3 + rng.below(5);
        const std::size_t ncols = 3 + rng.below(5);
        const GenParams params{nrows, ncols, 1, 1, 1, rng.next_u64()};
        const auto m = gen_random_matrix(params);
        const auto hooks = unfold_hooks(m);

        auto acc = first_hook<Rational>(nrows, ncols);
        for (const auto& hook : hooks) {
            CHECK(acc.corank() >= hook.rank() + hook.corank());
            acc = hook_mul(acc, hook);
        }

        for (std::size_t k = 0; k + 2 < hooks.size(); ++k) {
            const auto left = hook_mul(hook_mul(hooks[k], hooks[k + 1]), hooks[k + 2]);
            const auto right = hook_mul(hooks[k], hook_mul(hooks[k + 1], hooks[k + 2]));
            CHECK(left == right);
        }
    }
}

TEST_CASE("ple: identity and zero matrices") {
    const auto id_hook = ple(Matrix<Rational>::identity(2));
    const auto id = id_hook.to_matrices();
    CHECK(id.p == Matrix<Rational>::identity(2));
    CHECK(id.l == Matrix<Rational>::identity(2));
    CHECK(id.e == Matrix<Rational>::identity(2));
    CHECK(id_hook.rank() == 2);

    const auto zero_hook = ple(Matrix<Rational>(3, 4));
    const auto zero = zero_hook.to_matrices();
    CHECK(zero.p == Matrix<Rational>::identity(3));
    CHECK(zero.l == Matrix<Rational>::identity(3));
    CHECK(zero.e == Matrix<Rational>(3, 4));
    CHECK(zero_hook.rank() == 0);
}

TEST_CASE("ple of the 4x6 example reproduces the printed factors") {
    const auto m = usage_matrix();
    const auto hook = ple(m);
    const auto f = hook.to_matrices();

    CHECK(f.p == Matrix<Rational>::identity(4));
    CHECK(f.l == Matrix<Rational>::from_rows({
                     {84, 0, 0, 0},
                     {672, 24, 0, 0},
                     {-504, 588, -49392, 0},
                     {168, 336, -27720, 1},
                 }));
    // rows below the first; the top row is pinned by reconstruction
    CHECK(f.e.row(1) == std::vector<Rational>{q(0), q(0), q(0), q(1), q(339, 4), q(90)});
    CHECK(f.e.row(2) == std::vector<Rational>{q(0), q(0), q(0), q(0), q(1), q(7, 6)});
    CHECK(f.e.row(3) == std::vector<Rational>(6, q(0)));
    CHECK(hook.rank() == 3);
    CHECK(reconstruct(hook) == m);
}

TEST_CASE("ple of an echelon matrix is the trivial decomposition") {
    const auto e = Matrix<Rational>::from_rows({
        {1, 2, 0, 5},
        {0, 0, 1, q(3, 7)},
        {0, 0, 0, 0},
    });
    const auto f = ple(e).to_matrices();
    CHECK(f.p == Matrix<Rational>::identity(3));
    CHECK(f.l == Matrix<Rational>::identity(3));
    CHECK(f.e == e);
}

TEST_CASE("ple rank matches the brute-force oracle") {
    Rng rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t nrows = 1 + rng.below(6);
        const std::size_t ncols = 1 + rng.below(6);
        const GenParams params{nrows, ncols, 1, 1, 1, rng.next_u64()};
        const auto m = gen_random_matrix(params);
        CHECK(ple(m).rank() == oracles::gauss_jordan_rank(m));
    }
    // known rank by construction
    for (std::size_t rank = 0; rank <= 4; ++rank) {
        const GenParams params{5, 6, 1, 1, 1, 1234 + rank};
        const auto m = gen_random_ple_matrix(params, rank);
        CHECK(ple(m).rank() == rank);
    }
}

TEST_CASE("ple reconstructs 200 random 6x8 matrices over F_101") {
    const PrimeField field(101);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const GenParams params{6, 8, 1, 1, 1, seed};
        const auto m = gen_random_matrix(params, field);
        const auto hook = ple(m);
        hook.validate();
        CHECK(reconstruct(hook) == m);
    }
}

TEST_CASE("ple of degenerate shapes") {
    CHECK(ple(Matrix<Rational>(0, 5)).rank() == 0);
    CHECK(ple(Matrix<Rational>(5, 0)).rank() == 0);
    CHECK(ple(Matrix<Rational>(5, 0)).to_matrices().l == Matrix<Rational>::identity(5));
}

TEST_CASE("the size-4 rank-2 corank-1 triple round-trips through the hook") {
    const auto hook = example_hook();
    hook.validate();
    CHECK(hook.rank() == 2);
    CHECK(hook.corank() == 1);

    const auto f = hook.to_matrices();
    CHECK(f.p == Matrix<Rational>::from_rows(
                     {{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
    CHECK(f.l == Matrix<Rational>::from_rows({{1, 0, 0, 0},
                                              {0, q(1, 2), 0, 0},
                                              {0, -3, 4, 0},
                                              {0, q(7, 3), -17, 1}}));
    CHECK(f.e == Matrix<Rational>::from_rows({{0, 0, 0, 0, 0, 0},
                                              {0, 0, 0, 1, -3, q(1, 13)},
                                              {0, 0, 0, 0, 1, 0},
                                              {0, 0, 0, 0, 0, 0}}));
}

TEST_CASE("echelon shape invariants hold on random decompositions") {
    Rng rng(67);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t nrows = 1 + rng.below(7);
        const std::size_t ncols = 1 + rng.below(7);
        const GenParams params{nrows, ncols, 1, 2, 1, rng.next_u64()};
        const auto m = gen_random_matrix(params);
        const auto hook = ple(m);
        hook.validate();

        const auto f = hook.to_matrices();
        // L lower triangular with nonzero diagonal
        for (std::size_t i = 0; i < nrows; ++i) {
            CHECK_FALSE(f.l(i, i).is_zero());
            for (std::size_t j = i + 1; j < nrows; ++j) CHECK(f.l(i, j) == q(0));
        }
        // pivots 1 at strictly increasing columns, zero rows at the bottom
        long last = -1;
        for (const auto& row : hook.ef().rows()) {
            CHECK(static_cast<long>(row.offset()) > last);
            last = static_cast<long>(row.offset());
            CHECK(row.entries().front() == q(1));
        }
        CHECK(reconstruct(hook) == m);
    }
}
