#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "relhull/matrix.hpp"

using namespace relhull;

TEST_CASE("construction and multiplication") {
    auto f = Field::make(3, 1);
    auto a = MatrixGF::from_codes(f, {{1, 2}, {0, 1}});
    auto b = MatrixGF::from_codes(f, {{1, 1}, {2, 0}});
    auto c = a * b;
    CHECK(c.at(0, 0) == 2);  // 1*1 + 2*2 = 5 = 2
    CHECK(c.at(0, 1) == 1);
    CHECK(c.at(1, 0) == 2);
    CHECK(c.at(1, 1) == 0);
    CHECK(transpose(transpose(a)) == a);

    auto id = MatrixGF::identity(f, 2);
    CHECK(a * id == a);
    CHECK(id * a == a);

    CHECK_THROWS_AS((void)MatrixGF::from_codes(f, {}), Error);
    CHECK_THROWS_AS((void)MatrixGF::from_codes(f, {{1, 2}, {1}}), Error);
    auto g = Field::make(5, 1);
    auto d = MatrixGF::from_codes(g, {{1, 1}, {1, 1}});
    CHECK_THROWS_AS((void)(a * d), Error);
}

TEST_CASE("rref and rank") {
    auto f = Field::make(3, 1);
    auto m = MatrixGF::from_codes(f, {{2, 2, 2}});
    auto [r, piv] = rref(m);
    CHECK(r.at(0, 0) == 1);
    CHECK(r.at(0, 1) == 1);
    CHECK(r.at(0, 2) == 1);
    CHECK(piv == std::vector<std::size_t>{0});

    CHECK(rank(MatrixGF::from_codes(f, {{1, 1}, {2, 2}})) == 1);
    CHECK(rank(MatrixGF::identity(f, 4)) == 4);
    CHECK(rank(MatrixGF(f, 3, 3)) == 0);

    // rref is idempotent and preserves the row space
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        auto a = oracle::random_matrix(f, 4, 6, rng);
        auto [r1, p1] = rref(a);
        auto [r2, p2] = rref(r1);
        CHECK(r1 == r2);
        CHECK(p1 == p2);
    }
}

TEST_CASE("kernel spans the right space") {
    auto f = Field::make(3, 1);
    auto m = MatrixGF::from_codes(f, {{1, 1, 1}});
    auto k = kernel(m);
    CHECK(k.rows() == 2);
    CHECK((m * transpose(k)).is_zero());

    std::mt19937_64 rng(11);
    for (auto field : {Field::make(2, 2), Field::make(3, 2), Field::make(7, 1)}) {
        for (int t = 0; t < 15; ++t) {
            auto a = oracle::random_matrix(field, 3, 5, rng);
            auto kb = kernel(a);
            CHECK(kb.rows() == 5 - rank(a));
            if (kb.rows() > 0) {
                CHECK((a * transpose(kb)).is_zero());
                CHECK(rank(kb) == kb.rows());
            }
        }
    }

    // full column rank: trivial kernel
    auto id = MatrixGF::identity(f, 3);
    CHECK(kernel(id).rows() == 0);
}

TEST_CASE("entrywise frobenius") {
    auto f = Field::make(2, 2);
    auto m = MatrixGF::from_codes(f, {{2, 3}, {1, 0}});
    auto fr = frobenius_entrywise(m, 1);
    CHECK(fr.at(0, 0) == 3);
    CHECK(fr.at(0, 1) == 2);
    CHECK(fr.at(1, 0) == 1);
    CHECK(fr.at(1, 1) == 0);
    CHECK(frobenius_entrywise(fr, 1) == m);
}

// Both evaluation paths of A * I_lambda * P_sigma * B must agree with each
// other and with explicit construction of the monomial matrix.
TEST_CASE("scaled product paths agree") {
    std::mt19937_64 rng(2024);
    for (auto field : {Field::make(3, 2), Field::make(2, 2), Field::make(7, 1)}) {
        for (int t = 0; t < 25; ++t) {
            std::size_t ra = 2 + t % 3, n = 4 + t % 4, cb = 2 + t % 3;
            auto a = oracle::random_matrix(field, ra, n, rng);
            auto b = oracle::random_matrix(field, n, cb, rng);
            auto lambda = oracle::random_scaling(field, n, rng);
            auto sigma = oracle::random_permutation(n, rng);

            MatrixGF mono(field, n, n);
            for (std::size_t i = 0; i < n; ++i) mono.set(i, sigma[i], lambda[i]);
            auto expected = a * (mono * b);

            CHECK(scaled_product(a, lambda, sigma, b, ProductPath::Direct) == expected);
            CHECK(scaled_product(a, lambda, sigma, b, ProductPath::RankUpdate) == expected);
        }
    }
}

TEST_CASE("single coordinate updates move rank by at most one") {
    std::mt19937_64 rng(99);
    auto field = Field::make(3, 2);
    std::size_t n = 6;
    for (int t = 0; t < 30; ++t) {
        auto a = oracle::random_matrix(field, 4, n, rng);
        auto b = oracle::random_matrix(field, n, 4, rng);
        int base = static_cast<int>(rank(a * b));

        std::vector<std::uint32_t> lambda(n, 1);
        lambda[rng() % n] = 1 + static_cast<std::uint32_t>(rng() % (field->q() - 1));
        auto sigma = oracle::random_permutation(n, rng);
        // identity permutation: pure scaling at one coordinate
        std::vector<std::uint32_t> id_sigma(n);
        for (std::size_t i = 0; i < n; ++i) id_sigma[i] = static_cast<std::uint32_t>(i);
        int scaled = static_cast<int>(rank(scaled_product(a, lambda, id_sigma, b, ProductPath::RankUpdate)));
        CHECK(std::abs(scaled - base) <= 1);

        // single transposition, no scaling
        std::vector<std::uint32_t> ones(n, 1);
        std::size_t i = rng() % n, j = rng() % n;
        if (i == j) j = (j + 1) % n;
        std::swap(id_sigma[i], id_sigma[j]);
        int swapped = static_cast<int>(rank(scaled_product(a, ones, id_sigma, b, ProductPath::RankUpdate)));
        CHECK(std::abs(swapped - base) <= 1);
        (void)sigma;
    }
}
