#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "relhull/quantum.hpp"

using namespace relhull;

namespace {

// first example pair over GF(9), relative hull of dimension 3
LinearCode pair1_c1(const FieldPtr& f9) {
    return LinearCode::from_rows(f9, {{1, 0, 0, 0, 0, 1, 3},
                                      {0, 1, 0, 0, 8, 8, 3},
                                      {0, 0, 1, 0, 4, 4, 4},
                                      {0, 0, 0, 1, 0, 0, 0}});
}

LinearCode pair1_c2(const FieldPtr& f9) {
    return LinearCode::from_rows(f9, {{1, 0, 0, 0, 1, 2, 0},
                                      {0, 1, 0, 0, 1, 8, 3},
                                      {0, 0, 1, 0, 5, 8, 3},
                                      {0, 0, 0, 1, 0, 0, 0}});
}

// impure example sets on GF(4)^2; tuples are (y-degree, x-degree) so that
// the graded lex order with the first position most significant matches the
// published order of the monomials
ExponentSet impure_m1() {
    return ExponentSet(2, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 1}, {1, 0}});
}

ExponentSet impure_m2() {
    return ExponentSet(2, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 0}, {2, 0}, {3, 0}});
}

MonomialMap random_map(const FieldPtr& f, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> unit(1, f->q() - 1);
    std::vector<std::uint32_t> lambda(n), sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    for (auto& v : lambda) v = unit(rng);
    return MonomialMap(f, lambda, sigma);
}

// set-based reference for delta, pure flag and the parameter identities
struct BruteCss {
    bool degenerate;
    std::size_t delta;
    bool pure;
};

BruteCss brute_css(const LinearCode& c1, const LinearCode& c2) {
    auto d1 = oracle::naive_codewords(dual(c1).gen());
    auto d2 = oracle::naive_codewords(dual(c2).gen());
    auto w1 = oracle::naive_codewords(c1.gen());
    auto w2 = oracle::naive_codewords(c2.gen());
    auto wt = [](const std::vector<std::uint32_t>& w) {
        return std::size_t(std::count_if(w.begin(), w.end(), [](std::uint32_t v) { return v != 0; }));
    };
    std::size_t best = 0;
    bool found = false;
    for (const auto& w : d1)
        if (!w2.count(w) && (!found || wt(w) < best)) best = wt(w), found = true;
    for (const auto& w : d2)
        if (!w1.count(w) && (!found || wt(w) < best)) best = wt(w), found = true;
    if (!found) return {true, 0, false};
    std::size_t dd1 = min_distance(dual(c1)), dd2 = min_distance(dual(c2));
    return {false, best, best == std::min(dd1, dd2)};
}

}  // namespace

TEST_CASE("css parameters of the ternary repetition pair") {
    auto f3 = Field::make(3, 1);
    auto rep = LinearCode::from_rows(f3, {{1, 1, 1}});
    CSSParams p = css(rep, rep);
    CHECK(p.n == 3);
    CHECK(p.kappa == 1);
    CHECK(p.delta == 2);
    CHECK(p.c == 0);
    CHECK(p.q == 3);
    CHECK(p.pure);
    CHECK(p.singleton_slack == 0);  // 2*2 + 1 = 3 + 0 + 2
}

TEST_CASE("css rejects the degenerate dual pair") {
    auto f3 = Field::make(3, 1);
    auto c1 = LinearCode::from_rows(f3, {{1, 0}});
    try {
        css(c1, dual(c1));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::DegenerateDelta);
    }
    // sanity: the pair needs no entanglement and encodes nothing
    CHECK(rank(dual(c1).gen() * transpose(c1.gen())) == 0);
}

TEST_CASE("css against the set oracle on random pairs") {
    std::mt19937_64 rng(505);
    for (std::uint32_t q : {2u, 3u, 4u}) {
        auto f = q == 4 ? Field::make(2, 2) : Field::make(q, 1);
        for (int t = 0; t < 25; ++t) {
            std::size_t n = 3 + t % 4;
            auto c1 = LinearCode::from_matrix(oracle::random_matrix(f, 2, n, rng));
            auto c2 = LinearCode::from_matrix(oracle::random_matrix(f, 2, n, rng));
            BruteCss ref = brute_css(c1, c2);
            if (ref.degenerate) {
                CHECK_THROWS_AS(css(c1, c2), Error);
                continue;
            }
            CSSParams p = css(c1, c2);
            CHECK(p.delta == ref.delta);
            CHECK(p.pure == ref.pure);
            CHECK(p.kappa == p.n - c1.k() - c2.k() + p.c);
            CHECK(p.c == c1.k() - hull_dim(c1, c2).dim_hull);
            // swapping the codes keeps every parameter
            CSSParams s = css(c2, c1);
            CHECK(s.kappa == p.kappa);
            CHECK(s.delta == p.delta);
            CHECK(s.c == p.c);
            CHECK(s.pure == p.pure);
        }
    }
}

TEST_CASE("entanglement tuning walks the kappa ladder") {
    auto f9 = Field::make(3, 2);
    auto c1 = pair1_c1(f9), c2 = pair1_c2(f9);

    auto [c2p, p] = css_with_target_c(c1, c2, 4);
    CHECK(p.c == 4);
    CHECK(p.kappa == 3);  // rose with the freed entanglement
    CHECK(p.n == 7);
    CHECK(hull_dim(c1, c2p).dim_hull == 0);
    CHECK(weight_enumerator(c2p) == weight_enumerator(c2));

    CHECK_THROWS_AS(css_with_target_c(c1, c2, 0), Error);  // below k1 - dim hull
    CHECK_THROWS_AS(css_with_target_c(c1, c2, 5), Error);  // above min(k1, k2)

    // no-op target on a nondegenerate pair
    auto f3 = Field::make(3, 1);
    auto e1 = LinearCode::from_rows(f3, {{1, 0, 0, 0}});
    auto e2 = LinearCode::from_rows(f3, {{0, 1, 0, 0}});
    auto [same, q0] = css_with_target_c(e1, e2, 0);
    CHECK(same == e2);
    CHECK(q0.c == 0);
    CHECK(q0.kappa == 2);
    auto [moved, q1] = css_with_target_c(e1, e2, 1);
    CHECK(q1.c == 1);
    CHECK(q1.kappa == 3);
    CHECK(hull_dim(e1, moved).dim_hull == 0);

    // binary codes have no scaling witnesses to consume
    auto f2 = Field::make(2, 1);
    auto b = LinearCode::from_rows(f2, {{1, 1}});
    try {
        css_with_target_c(b, b, 1);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::NoWitnessFound);
    }

    // ladder invariant on random GF(5) pairs
    std::mt19937_64 rng(111);
    auto f5 = Field::make(5, 1);
    for (int t = 0; t < 10; ++t) {
        auto a = LinearCode::from_matrix(oracle::random_matrix(f5, 2, 6, rng));
        auto bb = LinearCode::from_matrix(oracle::random_matrix(f5, 2, 6, rng));
        std::size_t c_now = a.k() - hull_dim(a, bb).dim_hull;
        std::size_t c_max = std::min(a.k(), bb.k());
        for (std::size_t c = c_now; c <= c_max; ++c) {
            if (6 + c < a.k() + bb.k() + 1) continue;  // kappa would be 0
            auto [nb, pp] = css_with_target_c(a, bb, c);
            CHECK(pp.c == c);
            CHECK(pp.kappa == 6 - a.k() - bb.k() + c);
            CHECK(hull_dim(a, nb).dim_hull == a.k() - c);
        }
    }
}

TEST_CASE("hermitian construction") {
    auto f4 = Field::make(2, 2);

    // self-orthogonal under the Hermitian form: hull is everything
    auto d11 = LinearCode::from_rows(f4, {{1, 1}});
    CHECK(hull_dim(d11, d11, 1).dim_hull == 1);
    try {
        hermitian(d11);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::DegenerateDelta);
    }

    // trivial hull instead: [[2, 1, 1; 1]]_4
    auto e1 = LinearCode::from_rows(f4, {{1, 0}});
    CSSParams p = hermitian(e1);
    CHECK(p.n == 2);
    CHECK(p.kappa == 1);
    CHECK(p.delta == 1);
    CHECK(p.c == 1);
    CHECK(p.q == 4);
    CHECK(p.pure);
    CHECK(p.singleton_slack == 2);

    auto f3 = Field::make(3, 1);
    CHECK_THROWS_AS(hermitian(LinearCode::from_rows(f3, {{1, 1}})), Error);
    auto f8 = Field::make(2, 3);
    try {
        hermitian(LinearCode::from_rows(f8, {{1, 1}}));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::OddExtensionDegree);
    }

    // brute-force the Hermitian dual over GF(4) and compare
    std::mt19937_64 rng(909);
    const Field& f = *f4;
    for (int t = 0; t < 20; ++t) {
        std::size_t n = 2 + t % 3;
        auto c = LinearCode::from_matrix(oracle::random_matrix(f4, 2, n, rng));
        auto words = oracle::naive_codewords(c.gen());
        std::set<std::vector<std::uint32_t>> herm;
        std::vector<std::uint32_t> w(n, 0);
        bool more = true;
        while (more) {
            bool ok = true;
            for (const auto& cw : words) {
                std::uint32_t s = 0;
                for (std::size_t i = 0; i < n; ++i)
                    s = f.add(s, f.mul(w[i], f.frobenius(cw[i], 1)));
                if (s != 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) herm.insert(w);
            more = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (++w[i] < 4) {
                    more = true;
                    break;
                }
                w[i] = 0;
            }
        }
        auto herm_dual = dual(galois_image(c, 1));
        CHECK(oracle::naive_codewords(herm_dual.gen()) == herm);
        std::size_t hull_k = hull_dim(c, c, 1).dim_hull;
        bool degenerate = herm_dual.subset_of(c);
        if (degenerate) {
            CHECK_THROWS_AS(hermitian(c), Error);
            continue;
        }
        CSSParams hp = hermitian(c);
        CHECK(hp.c == c.k() - hull_k);
        CHECK(hp.kappa == n - 2 * c.k() + hp.c);
    }

    // kappa identity on GF(9) instances of one shape
    auto f9 = Field::make(3, 2);
    for (int t = 0; t < 15; ++t) {
        auto c = LinearCode::from_matrix(oracle::random_matrix(f9, 2, 6, rng));
        if (c.k() != 2) continue;
        CSSParams hp = hermitian(c);  // kappa = 2 + c > 0, never degenerate
        CHECK(hp.kappa == 2 + hp.c);
        CHECK(hp.c == 2 - hull_dim(c, c, 1).dim_hull);
    }
}

TEST_CASE("purity robustness conditions") {
    auto f3 = Field::make(3, 1);

    // separated distances: C2 is the self-dual [4, 2, 3] code
    auto tetra = LinearCode::from_rows(f3, {{1, 0, 1, 1}, {0, 1, 1, 2}});
    CHECK(dual(tetra) == tetra);
    CHECK(min_distance(tetra) == 3);
    auto c1 = LinearCode::from_rows(f3, {{1, 0, 0, 0}});
    CHECK(purity_robust(c1, tetra));

    // the pinned distance survives every sampled equivalence
    std::mt19937_64 rng(333);
    std::size_t base = css(c1, tetra).delta;
    CHECK(base == 1);
    for (int t = 0; t < 100; ++t) {
        CSSParams moved = css(c1, apply_map(tetra, random_map(f3, 4, rng)));
        CHECK(moved.delta == base);
        CHECK(moved.pure);
    }

    // equal distances of the wrong codes: pure but not certifiable
    auto rep = LinearCode::from_rows(f3, {{1, 1, 1}});
    auto two = LinearCode::from_rows(f3, {{1, 1, 0}});
    CHECK(css(rep, two).pure);
    CHECK(min_distance(dual(rep)) == min_distance(two));
    CHECK(!purity_robust(rep, two));

    // impure input is refused
    auto f3b = Field::make(3, 1);
    auto grid = CartesianGrid::full(f3b, 2);
    ExponentSet m1(2, {{0, 0}, {0, 1}, {1, 0}});
    ExponentSet m2(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    auto d1 = eval_code(set_minus(m1, ExponentSet(2, {{0, 0}})), grid);
    auto dual_m2 = dual(eval_code(m2, grid));
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::size_t r = 0; r < dual_m2.gen().rows(); ++r) rows.push_back(dual_m2.gen().row(r));
    rows.push_back({1, 0, 0, 0, 0, 0, 0, 0, 0});
    auto d2 = LinearCode::from_rows(f3b, rows);
    CHECK(!css(d1, d2).pure);
    try {
        purity_robust(d1, d2);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::NotPureInput);
    }
}

TEST_CASE("pure pairs never lose distance under equivalence") {
    auto f3 = Field::make(3, 1);
    std::mt19937_64 rng(77);
    auto rep = LinearCode::from_rows(f3, {{1, 1, 1}});
    std::size_t base = css(rep, rep).delta;
    for (int t = 0; t < 100; ++t) {
        CSSParams moved = css(rep, apply_map(rep, random_map(f3, 3, rng)));
        CHECK(moved.delta >= base);
    }
}

TEST_CASE("sandwich construction around the hyperbolic window") {
    auto f3 = Field::make(3, 1);
    auto grid = CartesianGrid::full(f3, 2);
    // dual distance 1, entanglement-heavy but robustly pure
    auto c1 = dual(LinearCode::from_rows(f3, {{1, 0, 0, 0, 0, 0, 0, 0, 0}}));
    auto h2 = eval_code(hyperbolic(2, grid), grid);

    auto [c2, p] = sandwich_pure(c1, grid, h2);
    CHECK(c2 == h2);
    CHECK(p.pure);
    CHECK(p.delta == 1);
    CHECK(p.kappa == 1);
    CHECK(p.c == 8);

    // lower endpoint of the window also passes
    auto low = dual(h2);
    auto [c2l, pl] = sandwich_pure(c1, grid, low);
    CHECK(c2l == low);
    CHECK(pl.pure);
    CHECK(pl.delta == 1);
    CHECK(pl.c == 1);

    // a code outside the window is rejected
    try {
        sandwich_pure(c1, grid, LinearCode::from_rows(f3, {{1, 0, 0, 0, 0, 0, 0, 0, 0}}));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::SandwichViolated);
    }

    // the default witness on this instance is the full space: degenerate
    CHECK_THROWS_AS(sandwich_pure(c1, grid), Error);
}

TEST_CASE("sandwich inclusions on the four point square grid") {
    auto f4 = Field::make(2, 2);
    auto grid = CartesianGrid::full(f4, 2);
    auto c1 = dual(eval_code(impure_m1(), grid));
    CHECK(min_distance(dual(c1)) == 4);

    // the window checks pass, then the pair turns out to encode nothing
    try {
        sandwich_pure(c1, grid);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::DegenerateDelta);
    }

    // dropping a hyperbolic generator breaks the lower inclusion
    auto h4 = hyperbolic(4, grid);
    std::vector<Exponent> trimmed;
    for (const auto& u : h4.exponents())
        if (u != Exponent{3, 0}) trimmed.push_back(u);
    auto small = eval_code(ExponentSet(2, trimmed), grid);
    try {
        sandwich_pure(c1, grid, small);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::SandwichViolated);
    }

    // exceeding the hyperbolic code breaks the upper inclusion
    auto big = eval_code(hyperbolic(3, grid), grid);
    try {
        sandwich_pure(c1, grid, big);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::SandwichViolated);
    }
}

TEST_CASE("impure pair from the published exponent sets") {
    auto f4 = Field::make(2, 2);
    auto grid = CartesianGrid::full(f4, 2);
    auto m1 = impure_m1(), m2 = impure_m2();

    CHECK(footprint_bound(m1, grid) == 4);
    CHECK(hyperbolic_dual(5, grid) == m2);

    CSSParams p = impure_pair(m1, m2, grid);
    CHECK(p.n == 16);
    CHECK(p.delta == 6);
    CHECK(!p.pure);
    CHECK(p.kappa == 1);
    CHECK(p.c == 2);

    // the published distances behind the parameters
    auto cm1 = eval_code(m1, grid);
    auto c2 = eval_code(m2, grid);
    CHECK(min_distance(cm1) == 4);
    CHECK(min_distance(dual(c2)) == 6);
    CHECK(weight_of_difference(cm1, c2) == std::optional<std::size_t>(6));
}

TEST_CASE("impure pair rejects broken shape conditions") {
    auto f4 = Field::make(2, 2);
    auto grid = CartesianGrid::full(f4, 2);
    auto m1 = impure_m1(), m2 = impure_m2();

    try {
        impure_pair(m2, m2, grid);  // no difference
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::ConditionViolated);
        CHECK(std::string(e.what()).find("(2)") != std::string::npos);
    }

    try {
        impure_pair(m1, m1, grid);  // second set lost required monomials
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::ConditionViolated);
        CHECK(std::string(e.what()).find("(1)") != std::string::npos);
    }

    // with the union as first set the shared top monomial no longer
    // precedes the lone difference monomial in graded lex order
    std::vector<Exponent> wide = m2.exponents();
    wide.push_back({1, 2});
    try {
        impure_pair(ExponentSet(2, wide), m2, grid);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::ConditionViolated);
        CHECK(std::string(e.what()).find("(3)") != std::string::npos);
    }

    // removing a required dual hyperbolic monomial breaks containment
    std::vector<Exponent> short2;
    for (const auto& u : m2.exponents())
        if (u != Exponent{3, 0}) short2.push_back(u);
    try {
        impure_pair(m1, ExponentSet(2, short2), grid);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::ConditionViolated);
        CHECK(std::string(e.what()).find("(1)") != std::string::npos);
    }

    CHECK_THROWS_AS(impure_pair(ExponentSet(2, {{1, 1}}), m2, grid), Error);  // not decreasing
}

TEST_CASE("impure family on the nine point plane") {
    auto f3 = Field::make(3, 1);
    ExponentSet m1(2, {{0, 0}, {0, 1}, {1, 0}});
    ExponentSet m2(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});

    CSSParams p = impure_family(m1, m2, f3, 2);
    CHECK(p.n == 9);
    CHECK(p.kappa == 1);
    CHECK(p.delta == 2);
    CHECK(p.c == 0);
    CHECK(!p.pure);

    try {
        impure_family(m1, m1, f3, 2);  // kappa would be zero
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::DegenerateDelta);
    }

    try {
        impure_family(ExponentSet(2, {{0, 0}}), m2, f3, 2);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::WeightOneAmbiguity);
    }

    try {
        impure_family(m2, m1, f3, 2);  // not nested
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::PreconditionViolated);
    }

    // the whole box has footprint bound 1
    std::vector<Exponent> box;
    for (std::uint32_t a = 0; a < 3; ++a)
        for (std::uint32_t b = 0; b < 3; ++b) box.push_back({a, b});
    try {
        impure_family(m1, ExponentSet(2, box), f3, 2);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Err::DistanceTooSmall);
    }

    CHECK_THROWS_AS(impure_family(ExponentSet(2, {{1, 1}, {0, 0}}), m2, f3, 2), Error);
}
