#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "relhull/code.hpp"

using namespace relhull;

TEST_CASE("linear code canonical form and duality") {
    auto f = Field::make(3, 1);
    auto rep = LinearCode::from_rows(f, {{2, 2, 2}});
    CHECK(rep.k() == 1);
    CHECK(rep.gen().at(0, 0) == 1);  // canonicalized
    CHECK(rep == LinearCode::from_rows(f, {{1, 1, 1}, {2, 2, 2}}));

    auto d = dual(rep);
    CHECK(d.k() == 2);
    CHECK(dual(d) == rep);
    CHECK((rep.gen() * transpose(d.gen())).is_zero());

    auto zero = LinearCode::zero(f, 3);
    auto full = LinearCode::full(f, 3);
    CHECK(zero.k() == 0);
    CHECK(dual(zero) == full);
    CHECK(dual(full) == zero);
    CHECK(zero.subset_of(rep));
    CHECK(rep.subset_of(full));
    CHECK(!full.subset_of(rep));
    CHECK(rep.contains({1, 1, 1}));
    CHECK(!rep.contains({1, 2, 1}));
    CHECK(zero.contains({0, 0, 0}));
}

TEST_CASE("enumeration walks exactly the codewords") {
    std::mt19937_64 rng(5150);
    for (auto field : {Field::make(2, 2), Field::make(3, 2), Field::make(5, 1)}) {
        for (int t = 0; t < 10; ++t) {
            auto code = LinearCode::from_matrix(oracle::random_matrix(field, 3, 5, rng));
            auto expected = oracle::naive_codewords(code.gen());
            std::set<std::vector<std::uint32_t>> seen;
            std::uint64_t visits = 0;
            for_each_codeword(code.gen(), [&](const std::vector<std::uint32_t>& w, std::size_t wt) {
                std::size_t check = 0;
                for (auto v : w) check += (v != 0);
                CHECK(check == wt);
                seen.insert(w);
                ++visits;
            });
            CHECK(seen == expected);
            std::uint64_t qk = 1;
            for (std::size_t i = 0; i < code.k(); ++i) qk *= field->q();
            CHECK(visits == qk);
        }
    }
}

TEST_CASE("weight statistics of the ternary repetition code") {
    auto f = Field::make(3, 1);
    auto rep = LinearCode::from_rows(f, {{1, 1, 1}});
    CHECK(min_distance(rep) == 3);
    CHECK(max_weight(rep) == 3);
    CHECK(weight_enumerator(rep).counts == std::vector<std::uint64_t>{1, 0, 0, 2});

    auto d = dual(rep);
    CHECK(min_distance(d) == 2);
    CHECK(weight_enumerator(d).counts == std::vector<std::uint64_t>{1, 0, 6, 2});

    CHECK(max_weight(LinearCode::zero(f, 3)) == 0);
    CHECK_THROWS_AS((void)min_distance(LinearCode::zero(f, 3)), Error);

    auto w = full_weight_word(rep);
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(!full_weight_word(LinearCode::from_rows(f, {{1, 0, 1}})).has_value());
}

TEST_CASE("difference weight") {
    auto f = Field::make(3, 1);
    auto rep = LinearCode::from_rows(f, {{1, 1, 1}});
    auto d = dual(rep);
    auto full = LinearCode::full(f, 3);

    auto w = weight_of_difference(d, rep);
    REQUIRE(w.has_value());
    CHECK(*w == 2);
    CHECK(!weight_of_difference(rep, full).has_value());
    CHECK(!weight_of_difference(LinearCode::zero(f, 3), rep).has_value());
    auto v = weight_of_difference(full, rep);
    REQUIRE(v.has_value());
    CHECK(*v == 1);
}

TEST_CASE("enumeration budget is enforced") {
    CHECK_NOTHROW(check_enumeration_budget(2, 24));
    CHECK_THROWS_AS(check_enumeration_budget(2, 25), Error);
    CHECK_THROWS_AS(check_enumeration_budget(3, 16), Error);
    CHECK_THROWS_AS(check_enumeration_budget(65536, 2), Error);
    auto f = Field::make(2, 1);
    CHECK_THROWS_AS((void)min_distance(LinearCode::full(f, 25)), Error);
    try {
        (void)min_distance(LinearCode::full(f, 25));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::EnumerationTooLarge);
    }
}

TEST_CASE("relative hull against brute force") {
    std::mt19937_64 rng(314);
    for (auto field : {Field::make(2, 2), Field::make(3, 1), Field::make(3, 2)}) {
        for (int t = 0; t < 12; ++t) {
            auto c1 = LinearCode::from_matrix(oracle::random_matrix(field, 2 + t % 2, 5, rng));
            auto c2 = LinearCode::from_matrix(oracle::random_matrix(field, 2 + (t + 1) % 2, 5, rng));
            auto h = relative_hull(c1, c2);
            CHECK(h == oracle::brute_hull(c1, c2));
            CHECK(h.subset_of(c1));

            // both sides lose the same amount against each other
            auto h21 = relative_hull(c2, c1);
            CHECK(c1.k() - h.k() == c2.k() - h21.k());

            std::size_t lo = c1.k() > c2.k() ? c1.k() - c2.k() : 0;
            CHECK(h.k() >= lo);
            CHECK(h.k() <= std::min(c1.k(), c1.n() - c2.k()));
        }
    }

    // hull with the dual of itself is the code
    auto f = Field::make(3, 1);
    auto rep = LinearCode::from_rows(f, {{1, 1, 1}});
    CHECK(relative_hull(rep, dual(rep)) == rep);
}

TEST_CASE("schur products") {
    auto f = Field::make(3, 1);
    auto rep = LinearCode::from_rows(f, {{1, 1, 1}});
    CHECK(schur(rep, rep) == rep);
    auto c = LinearCode::from_rows(f, {{1, 2, 0}});
    CHECK(schur(rep, c) == c);
    CHECK(schur(LinearCode::zero(f, 3), rep) == LinearCode::zero(f, 3));

    auto full = LinearCode::full(f, 3);
    CHECK(schur(full, full) == full);

    // commutative, and every pairwise product of codewords lands inside
    std::mt19937_64 rng(41);
    for (int t = 0; t < 8; ++t) {
        auto a = LinearCode::from_matrix(oracle::random_matrix(f, 2, 4, rng));
        auto b = LinearCode::from_matrix(oracle::random_matrix(f, 2, 4, rng));
        auto s = schur(a, b);
        CHECK(s == schur(b, a));
        for (const auto& x : oracle::naive_codewords(a.gen()))
            for (const auto& y : oracle::naive_codewords(b.gen())) {
                std::vector<std::uint32_t> prod(4);
                for (std::size_t j = 0; j < 4; ++j) prod[j] = f->mul(x[j], y[j]);
                CHECK(s.contains(prod));
            }
    }
}

TEST_CASE("monomial maps") {
    auto f = Field::make(3, 2);
    std::mt19937_64 rng(2718);
    std::size_t n = 5;

    auto id = MonomialMap::identity(f, n);
    CHECK(id.is_identity());
    CHECK(id.apply({1, 2, 3, 4, 5}) == std::vector<std::uint32_t>{1, 2, 3, 4, 5});

    for (int t = 0; t < 20; ++t) {
        MonomialMap m1(f, oracle::random_scaling(f, n, rng), oracle::random_permutation(n, rng));
        MonomialMap m2(f, oracle::random_scaling(f, n, rng), oracle::random_permutation(n, rng));
        std::vector<std::uint32_t> w(n);
        for (auto& v : w) v = static_cast<std::uint32_t>(rng() % f->q());

        // composition applies left to right
        CHECK(MonomialMap::compose(m1, m2).apply(w) == m2.apply(m1.apply(w)));
        CHECK(MonomialMap::compose(m1, m1.inverse()).is_identity());
        CHECK(MonomialMap::compose(m1.inverse(), m1).is_identity());
        CHECK(m1.inverse().apply(m1.apply(w)) == w);
    }

    // scaling and transposition factories
    auto sc = MonomialMap::scaling(f, 3, 1, 4);
    CHECK(sc.apply({1, 1, 1}) == std::vector<std::uint32_t>{1, 4, 1});
    auto tr = MonomialMap::transposition(f, 3, 0, 2);
    CHECK(tr.apply({1, 2, 3}) == std::vector<std::uint32_t>{3, 2, 1});

    CHECK_THROWS_AS(MonomialMap(f, {1, 0, 1}, {0, 1, 2}), Error);
    CHECK_THROWS_AS(MonomialMap(f, {1, 1, 1}, {0, 1, 1}), Error);
    CHECK_THROWS_AS(MonomialMap::scaling(f, 3, 3, 1), Error);
}

TEST_CASE("maps move codes and duals coherently") {
    std::mt19937_64 rng(161803);
    for (auto field : {Field::make(2, 2), Field::make(3, 2)}) {
        std::size_t n = 6;
        for (int t = 0; t < 10; ++t) {
            auto c = LinearCode::from_matrix(oracle::random_matrix(field, 3, n, rng));
            MonomialMap m(field, oracle::random_scaling(field, n, rng),
                          oracle::random_permutation(n, rng));
            auto image = apply_map(c, m);
            CHECK(image.k() == c.k());
            // dual of the image is the dual pushed through the dual map
            CHECK(dual(image) == apply_map(dual(c), m.dual_map()));
            // round trip
            CHECK(apply_map(image, m.inverse()) == c);
        }
    }
}

TEST_CASE("galois image") {
    auto f = Field::make(2, 2);
    auto c = LinearCode::from_rows(f, {{1, 2}});
    auto img = galois_image(c, 1);
    CHECK(img == LinearCode::from_rows(f, {{1, 3}}));
    CHECK(galois_image(img, 1) == c);
    CHECK(galois_image(c, 0) == c);

    // image rows really are the entrywise powers
    auto f9 = Field::make(3, 2);
    auto d = LinearCode::from_rows(f9, {{1, 3, 0, 4}});
    auto di = galois_image(d, 1);
    for (std::size_t j = 0; j < 4; ++j)
        CHECK(di.gen().at(0, j) == f9->frobenius(d.gen().at(0, j), 1));
}
