#include "relhull/examples.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "relhull/cartesian.hpp"
#include "relhull/hull.hpp"
#include "relhull/quantum.hpp"

namespace relhull {

namespace {

CodePairFile pair_file(const FieldPtr& f, const std::vector<std::vector<std::uint32_t>>& c1,
                       const std::vector<std::vector<std::uint32_t>>& c2) {
    CodePairFile file;
    file.field = f;
    file.codes.emplace_back("c1", MatrixGF::from_codes(f, c1));
    file.codes.emplace_back("c2", MatrixGF::from_codes(f, c2));
    return file;
}

ExponentSet f4_m1() {
    return ExponentSet(2, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 1}, {1, 0}});
}

ExponentSet f4_m2() {
    return ExponentSet(2, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 0}, {2, 0}, {3, 0}});
}

ExponentSet f3_family_m1() { return ExponentSet(2, {{0, 0}, {0, 1}, {1, 0}}); }

ExponentSet f3_family_m2() { return ExponentSet(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}); }

std::vector<Example> build_registry() {
    auto f3 = Field::make(3, 1);
    auto f4 = Field::make(2, 2);
    auto f5 = Field::make(5, 1);
    auto f9 = Field::make(3, 2);

    std::vector<Example> reg;

    // Three worked pairs over GF(9); a is a root of the modulus, entries are
    // indexed so that a = 3, a + 1 = 4, a - 1 = 5, -a = 6, -a + 1 = 7,
    // -a - 1 = 8, -1 = 2.
    reg.push_back({"f9_example1",
                   "two [7,4] codes over GF(9) whose relative hull meets the upper bound 3",
                   pair_file(f9,
                             {{1, 0, 0, 0, 0, 1, 3},
                              {0, 1, 0, 0, 8, 8, 3},
                              {0, 0, 1, 0, 4, 4, 4},
                              {0, 0, 0, 1, 0, 0, 0}},
                             {{1, 0, 0, 0, 1, 2, 0},
                              {0, 1, 0, 0, 1, 8, 3},
                              {0, 0, 1, 0, 5, 8, 3},
                              {0, 0, 0, 1, 0, 0, 0}})});
    reg.push_back({"f9_example2",
                   "[6,4] pair over GF(9); scaling coordinates 6 then 4 by a walks the hull 2,1,0",
                   pair_file(f9,
                             {{0, 0, 1, 2, 0, 0},
                              {0, 0, 0, 0, 1, 2},
                              {6, 0, 1, 0, 0, 0},
                              {0, 8, 0, 0, 1, 0}},
                             {{1, 0, 3, 3, 0, 0},
                              {0, 1, 0, 0, 4, 4},
                              {0, 0, 1, 1, 0, 0},
                              {0, 0, 0, 0, 1, 1}})});
    reg.push_back({"f9_example3",
                   "[6,4] pair over GF(9); transpositions (1,5) then (2,6) walk the hull 2,1,0",
                   pair_file(f9,
                             {{0, 0, 6, 6, 1, 0},
                              {0, 0, 6, 6, 0, 1},
                              {0, 0, 1, 0, 0, 0},
                              {0, 0, 0, 1, 0, 0}},
                             {{1, 0, 0, 0, 0, 0},
                              {0, 1, 0, 0, 0, 0},
                              {0, 0, 1, 0, 3, 3},
                              {0, 0, 0, 1, 3, 3}})});

    reg.push_back({"f3_repetition",
                   "ternary repetition code against itself, the tight [[3,1,2;0]] instance",
                   pair_file(f3, {{1, 1, 1}}, {{1, 1, 1}})});

    {
        CartesianGrid grid = CartesianGrid::full(f4, 2);
        auto c1 = dual(eval_code(f4_m1(), grid));
        auto c2 = eval_code(f4_m2(), grid);
        CodePairFile file;
        file.field = f4;
        file.codes.emplace_back("c1", c1.gen());
        file.codes.emplace_back("c2", c2.gen());
        file.grid = grid;
        file.exponent_sets.emplace_back("m1", f4_m1());
        file.exponent_sets.emplace_back("m2", f4_m2());
        reg.push_back({"f4_cartesian",
                       "GF(4) bivariate grid pair behind the impure [[16,1,6;2]] construction",
                       std::move(file)});
    }

    reg.push_back({"f4_hermitian",
                   "single [2,1] code over GF(4) whose Hermitian construction gives [[2,1,1;1]]",
                   pair_file(f4, {{1, 0}}, {{1, 0}})});

    reg.push_back({"sharpness_gf5",
                   "equal [3,2] codes over GF(5) where a single scaling is the best possible",
                   pair_file(f5, {{1, 0, 0}, {0, 1, 1}}, {{1, 0, 0}, {0, 1, 1}})});

    reg.push_back({"support_split",
                   "equal singletons over GF(3); a transposition splits the supports, filling the hull",
                   pair_file(f3, {{1, 0, 0}}, {{1, 0, 0}})});

    reg.push_back({"f3_diagonal_obstruction",
                   "complementary-support pair immune to every diagonal scaling",
                   pair_file(f3, {{1, 1, 0, 0}}, {{0, 0, 1, 1}})});

    reg.push_back({"schur_locked",
                   "[4,2] pair no monomial equivalence can push to a full hull",
                   pair_file(f3, {{1, 0, 1, 0}, {0, 1, 0, 1}}, {{1, 0, 1, 1}, {0, 1, 0, 0}})});

    {
        CartesianGrid grid = CartesianGrid::full(f3, 2);
        auto d1 = eval_code(ExponentSet(2, {{0, 1}, {1, 0}}), grid);
        auto dual_m2 = dual(eval_code(f3_family_m2(), grid));
        std::vector<std::vector<std::uint32_t>> d2_rows;
        for (std::size_t i = 0; i < dual_m2.k(); ++i) d2_rows.push_back(dual_m2.gen().row(i));
        std::vector<std::uint32_t> e0(grid.n(), 0);
        e0[0] = 1;
        d2_rows.push_back(e0);
        CodePairFile file;
        file.field = f3;
        file.codes.emplace_back("c1", d1.gen());
        file.codes.emplace_back("c2", LinearCode::from_rows(f3, d2_rows).gen());
        file.grid = grid;
        file.exponent_sets.emplace_back("m1", f3_family_m1());
        file.exponent_sets.emplace_back("m2", f3_family_m2());
        reg.push_back({"f3_family",
                       "nested monomial sets over GF(3) giving the impure [[9,1,2;0]] member",
                       std::move(file)});
    }

    return reg;
}

LinearCode reg_code(const std::string& example_id, const std::string& name) {
    const Example* ex = find_example(example_id);
    return LinearCode::from_matrix(find_code(ex->file, name));
}

// Walk c2 through the given maps and confirm the hull dimensions and product
// ranks along the way.
bool witness_walk(const LinearCode& c1, LinearCode c2, const std::vector<MonomialMap>& maps,
                  const std::vector<std::size_t>& hull_after) {
    for (std::size_t i = 0; i < maps.size(); ++i) {
        c2 = apply_map(c2, maps[i]);
        HullReport r = hull_dim(c1, c2);
        if (r.dim_hull != hull_after[i]) return false;
        if (r.rank_product != c1.k() - hull_after[i]) return false;
    }
    return true;
}

// All (q-1)^n scaling vectors, reporting whether pred holds for every one.
template <typename Pred>
bool all_diagonals(const FieldPtr& f, std::size_t n, Pred pred) {
    std::vector<std::uint32_t> lambda(n, 1);
    while (true) {
        if (!pred(lambda)) return false;
        std::size_t i = 0;
        while (i < n) {
            if (++lambda[i] < f->q()) break;
            lambda[i] = 1;
            ++i;
        }
        if (i == n) return true;
    }
}

std::vector<ExampleCheck> build_checks() {
    std::vector<ExampleCheck> checks;

    checks.push_back({"f9_example1", "relative hull has dimension 3 and the ladder reaches 0", [] {
                          auto c1 = reg_code("f9_example1", "c1");
                          auto c2 = reg_code("f9_example1", "c2");
                          HullReport r = hull_dim(c1, c2);
                          if (r.dim_hull != 3 || r.rank_product != 1 || r.upper_bound != 3)
                              return false;
                          ReductionTrace t = reduce_to(c1, c2, 0);
                          if (t.steps.size() != 3) return false;
                          std::size_t want = 2;
                          for (const auto& s : t.steps)
                              if (s.hull_dim_after != want--) return false;
                          return hull_dim(c1, t.final_code).rank_product == 4;
                      }});

    checks.push_back({"f9_example2", "published scaling witnesses give hulls 2,1,0 and ranks 3,4",
                      [] {
                          auto c1 = reg_code("f9_example2", "c1");
                          auto c2 = reg_code("f9_example2", "c2");
                          if (hull_dim(c1, c2).dim_hull != 2) return false;
                          auto f9 = c1.field();
                          return witness_walk(c1, c2,
                                              {MonomialMap::scaling(f9, 6, 5, 3),
                                               MonomialMap::scaling(f9, 6, 3, 3)},
                                              {1, 0});
                      }});

    checks.push_back({"f9_example3",
                      "published transposition witnesses give hulls 2,1,0 and ranks 3,4", [] {
                          auto c1 = reg_code("f9_example3", "c1");
                          auto c2 = reg_code("f9_example3", "c2");
                          if (hull_dim(c1, c2).dim_hull != 2) return false;
                          auto f9 = c1.field();
                          return witness_walk(c1, c2,
                                              {MonomialMap::transposition(f9, 6, 0, 4),
                                               MonomialMap::transposition(f9, 6, 1, 5)},
                                              {1, 0});
                      }});

    checks.push_back({"f3_diagonal_obstruction",
                      "no diagonal scaling moves the hull, over GF(3), GF(4) and GF(5)", [] {
                          for (auto f : {Field::make(3, 1), Field::make(2, 2), Field::make(5, 1)}) {
                              auto c1 = LinearCode::from_rows(f, {{1, 1, 0, 0}});
                              auto c2 = LinearCode::from_rows(f, {{0, 0, 1, 1}});
                              bool ok = all_diagonals(f, 4, [&](const auto& lambda) {
                                  MonomialMap mm(f, lambda, {0, 1, 2, 3});
                                  return hull_dim(c1, apply_map(c2, mm)).dim_hull == 1;
                              });
                              if (!ok) return false;
                          }
                          return true;
                      }});

    checks.push_back({"sharpness_gf5", "exhaustive diagonal maximum equals the weight bound 1", [] {
                          auto c1 = reg_code("sharpness_gf5", "c1");
                          auto c2 = reg_code("sharpness_gf5", "c2");
                          DiagonalMaxReport r = diagonal_hull_max(c1, c2);
                          return r.exact && r.achieved == 1 && r.bound_maxwt == 1;
                      }});

    // The Schur-product duals here hold no full-weight word (their maximum
    // weight is 2), so no scaling can zero the whole product matrix: the rank
    // never reaches 0 and the hull never reaches k1.  Intermediate drops to
    // rank 1 do exist, e.g. lambda = (-1,1,1,1) over any q > 2.
    checks.push_back({"schur_locked", "no monomial map raises the hull to full", [] {
                          for (std::uint32_t q : {3u, 5u}) {
                              auto f = Field::make(q, 1);
                              auto c1 = LinearCode::from_rows(f, {{1, 0, 1, 0}, {0, 1, 0, 1}});
                              auto c2 = LinearCode::from_rows(f, {{1, 0, 1, 1}, {0, 1, 0, 0}});
                              if (hull_dim(c1, c2).rank_product != 2) return false;
                              std::vector<std::uint32_t> sigma(4);
                              std::iota(sigma.begin(), sigma.end(), 0);
                              do {
                                  MonomialMap pm(f, {1, 1, 1, 1}, sigma);
                                  auto c2s = apply_map(c2, pm);
                                  if (max_weight(dual(schur(c1, c2s))) != 2) return false;
                                  bool ok = all_diagonals(f, 4, [&](const auto& lambda) {
                                      MonomialMap mm(f, lambda, sigma);
                                      return hull_dim(c1, apply_map(c2, mm)).rank_product >= 1;
                                  });
                                  if (!ok) return false;
                              } while (std::next_permutation(sigma.begin(), sigma.end()));
                              if (increase_to_full(c1, c2).has_value()) return false;
                          }
                          return true;
                      }});

    checks.push_back({"support_split", "an exhaustive increase lifts the hull from 0 to 1", [] {
                          auto c1 = reg_code("support_split", "c1");
                          auto c2 = reg_code("support_split", "c2");
                          if (hull_dim(c1, c2).dim_hull != 0) return false;
                          auto res = increase_to_full(c1, c2);
                          if (!res) return false;
                          return hull_dim(c1, res->c2_new).dim_hull == 1 &&
                                 !res->map.is_identity();
                      }});

    checks.push_back({"f9_example1", "Galois hull agrees with the image-then-hull computation", [] {
                          auto c1 = reg_code("f9_example1", "c1");
                          auto c2 = reg_code("f9_example1", "c2");
                          HullReport direct = hull_dim(c1, c2, 1);
                          HullReport routed = hull_dim(c1, galois_image(c2, 1));
                          return direct.dim_hull == routed.dim_hull &&
                                 direct.rank_product == routed.rank_product;
                      }});

    checks.push_back({"f4_hermitian", "Hermitian construction gives [[2,1,1;1]] pure", [] {
                          auto c = reg_code("f4_hermitian", "c1");
                          CSSParams p = hermitian(c);
                          return p.n == 2 && p.kappa == 1 && p.delta == 1 && p.c == 1 && p.pure &&
                                 p.singleton_slack == 2;
                      }});

    checks.push_back({"f3_repetition", "parameters come out [[3,1,2;0]] pure with slack 0", [] {
                          auto c = reg_code("f3_repetition", "c1");
                          CSSParams p = css(c, c);
                          return p.n == 3 && p.kappa == 1 && p.delta == 2 && p.c == 0 && p.pure &&
                                 p.singleton_slack == 0;
                      }});

    checks.push_back({"f4_cartesian", "grid pair reproduces the impure [[16,1,6;2]] code", [] {
                          const Example* ex = find_example("f4_cartesian");
                          const auto& m1 = find_exponent_set(ex->file, "m1");
                          const auto& m2 = find_exponent_set(ex->file, "m2");
                          CSSParams p = impure_pair(m1, m2, *ex->file.grid);
                          if (p.n != 16 || p.kappa != 1 || p.delta != 6 || p.c != 2 || p.pure)
                              return false;
                          CSSParams q = css(reg_code("f4_cartesian", "c1"),
                                            reg_code("f4_cartesian", "c2"));
                          return q.n == p.n && q.kappa == p.kappa && q.delta == p.delta &&
                                 q.c == p.c && q.pure == p.pure;
                      }});

    checks.push_back({"f3_family", "nested sets reproduce the impure [[9,1,2;0]] member", [] {
                          const Example* ex = find_example("f3_family");
                          const auto& m1 = find_exponent_set(ex->file, "m1");
                          const auto& m2 = find_exponent_set(ex->file, "m2");
                          CSSParams p = impure_family(m1, m2, ex->file.field, 2);
                          if (p.n != 9 || p.kappa != 1 || p.delta != 2 || p.c != 0 || p.pure)
                              return false;
                          CSSParams q = css(reg_code("f3_family", "c1"),
                                            reg_code("f3_family", "c2"));
                          return q.kappa == p.kappa && q.delta == p.delta && q.c == p.c &&
                                 q.pure == p.pure;
                      }});

    return checks;
}

}  // namespace

const std::vector<Example>& example_registry() {
    static const std::vector<Example> reg = build_registry();
    return reg;
}

const Example* find_example(const std::string& id) {
    for (const auto& ex : example_registry())
        if (ex.id == id) return &ex;
    return nullptr;
}

const std::vector<ExampleCheck>& example_checks() {
    static const std::vector<ExampleCheck> checks = build_checks();
    return checks;
}

}  // namespace relhull
