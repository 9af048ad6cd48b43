#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "oracles.hpp"
#include "plelin/ffge.hpp"
#include "plelin/generate.hpp"
#include "plelin/matrix.hpp"
#include "plelin/permutation.hpp"
#include "plelin/rational.hpp"
#include "plelin/rng.hpp"

using namespace plelin;

namespace {

Matrix<Rational> random_rational_matrix(Rng& rng, std::size_t nrows, std::size_t ncols) {
    Matrix<Rational> m(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j)
            m(i, j) = Rational{rng.symmetric(16), rng.bits(8) + 1};
    return m;
}

}  // namespace

TEST_CASE("from_rows") {
    const auto m = Matrix<Rational>::from_rows({{1, 2}, {3, 4}});
    CHECK(m.nrows() == 2);
    CHECK(m.ncols() == 2);
    CHECK(m(1, 0) == Rational(3));

    const auto empty = Matrix<Rational>::from_rows({});
    CHECK(empty.nrows() == 0);
    CHECK(empty.ncols() == 0);

    CHECK_THROWS_AS(Matrix<Rational>::from_rows({{1, 2}, {3}}), dimension_error);
}

TEST_CASE("matrix_mul") {
    Rng rng(5);
    const auto m = random_rational_matrix(rng, 3, 4);
    CHECK(matrix_mul(Matrix<Rational>::identity(3), m) == m);

    const auto a = Matrix<Rational>::from_rows({{1, 2}, {3, 4}});
    const auto b = Matrix<Rational>::from_rows({{0}, {1}});
    CHECK(matrix_mul(a, b) == Matrix<Rational>::from_rows({{2}, {4}}));

    CHECK_THROWS_AS(matrix_mul(a, m), dimension_error);
}

TEST_CASE("matrix_mul is associative on random triples") {
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_rational_matrix(rng, 3, 4);
        const auto b = random_rational_matrix(rng, 4, 2);
        const auto c = random_rational_matrix(rng, 2, 5);
        CHECK(matrix_mul(matrix_mul(a, b), c) == matrix_mul(a, matrix_mul(b, c)));
    }
}

TEST_CASE("matrix_add") {
    Rng rng(6);
    const auto m = random_rational_matrix(rng, 2, 3);
    CHECK(matrix_add(m, Matrix<Rational>(2, 3)) == m);
    CHECK(matrix_add(Matrix<Rational>::from_rows({{1}}), Matrix<Rational>::from_rows({{2}})) ==
          Matrix<Rational>::from_rows({{3}}));
    CHECK_THROWS_AS(matrix_add(m, Matrix<Rational>(3, 2)), dimension_error);
}

TEST_CASE("zero-dimension matrices work everywhere") {
    const Matrix<Rational> tall(3, 0);
    const Matrix<Rational> wide(0, 4);
    const auto product = matrix_mul(tall, wide);
    CHECK(product.nrows() == 3);
    CHECK(product.ncols() == 4);
    CHECK(product.is_zero());
    const auto empty = matrix_mul(wide, Matrix<Rational>(4, 0));
    CHECK(empty.nrows() == 0);
    CHECK(empty.ncols() == 0);
}

TEST_CASE("permute_rows") {
    const auto m = Matrix<Rational>::from_rows({{1}, {2}});
    CHECK(permute_rows(RowPermutation::identity(2), m) == m);
    CHECK(permute_rows(RowPermutation::transposition(2, 0, 1), m) ==
          Matrix<Rational>::from_rows({{2}, {1}}));
    CHECK_THROWS_AS(permute_rows(RowPermutation::identity(3), m), dimension_error);
}

TEST_CASE("permutation round trip through its inverse") {
    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = detail::random_permutation(rng, 6);
        const auto m = random_rational_matrix(rng, 6, 3);
        CHECK(permute_rows(p.inverse(), permute_rows(p, m)) == m);
        CHECK((p * p.inverse()).is_identity());
    }
}

TEST_CASE("permutation_to_matrix") {
    CHECK(permutation_to_matrix<Rational>(RowPermutation::identity(4)) ==
          Matrix<Rational>::identity(4));

    // the permutation of the size-4 rank-2 corank-1 hook round trip
    const auto p = RowPermutation::from_images({0, 2, 3, 1});
    CHECK(permutation_to_matrix<Rational>(p) == Matrix<Rational>::from_rows({
                                                    {1, 0, 0, 0},
                                                    {0, 0, 0, 1},
                                                    {0, 1, 0, 0},
                                                    {0, 0, 1, 0},
                                                }));
}

TEST_CASE("permutation matrices multiply like permutations compose") {
    Rng rng(9);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 1 + rng.below(8);
        const auto p = detail::random_permutation(rng, n);
        const auto q = detail::random_permutation(rng, n);
        CHECK(permutation_to_matrix<Rational>(p * q) ==
              matrix_mul(permutation_to_matrix<Rational>(p), permutation_to_matrix<Rational>(q)));
        const auto m = random_rational_matrix(rng, n, 3);
        CHECK(permute_rows(p * q, m) == permute_rows(p, permute_rows(q, m)));
        CHECK(matrix_mul(permutation_to_matrix<Rational>(p), m) == permute_rows(p, m));
    }
}

TEST_CASE("permutation matrices have determinant +-1") {
    Rng rng(10);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 1 + rng.below(5);
        const auto p = detail::random_permutation(rng, n);
        const auto result = ffge_int(permutation_to_matrix<mpz_class>(p));
        CHECK((result.det_factor == 1 || result.det_factor == -1));
        CHECK(result.det_factor == p.sign());
    }
}

TEST_CASE("bijection validation") {
    CHECK_THROWS_AS(RowPermutation::from_images({0, 0}), dimension_error);
    CHECK_THROWS_AS(RowPermutation::from_images({1, 2}), dimension_error);
}
