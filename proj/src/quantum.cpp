#include "relhull/quantum.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "relhull/error.hpp"

namespace relhull {

namespace {

void check_css_pair(const LinearCode& c1, const LinearCode& c2) {
    if (!c1.field()->same_as(*c2.field()))
        fail(Err::MixedFields, "codes live over different fields");
    if (c1.n() != c2.n()) fail(Err::LengthMismatch, "codes have different lengths");
}

void check_in_box(const ExponentSet& m, const CartesianGrid& grid) {
    if (m.m() != grid.m()) fail(Err::DimensionMismatch, "exponent arity differs from the grid arity");
    for (const auto& u : m.exponents())
        for (std::size_t i = 0; i < u.size(); ++i)
            if (u[i] >= grid.factors()[i].size())
                fail(Err::ExponentOutOfBox, "exponent exceeds |A_i| - 1");
}

CSSParams finish(std::size_t n, std::size_t kappa, std::size_t delta, std::size_t c,
                 std::uint64_t q, bool pure) {
    std::uint64_t lhs = 2 * std::uint64_t(delta) + kappa;
    std::uint64_t rhs = std::uint64_t(n) + c + 2;
    if (lhs > rhs) fail(Err::Internal, "Singleton bound violated");
    return {n, kappa, delta, c, q, pure, std::size_t(rhs - lhs)};
}

}  // namespace

CSSParams css(const LinearCode& c1, const LinearCode& c2) {
    check_css_pair(c1, c2);
    std::size_t n = c1.n(), k1 = c1.k(), k2 = c2.k();
    std::size_t c = rank(c2.gen() * transpose(c1.gen()));
    std::size_t kappa = (n - k2) - (k1 - c);  // n - k1 - k2 + c

    LinearCode d1 = dual(c1), d2 = dual(c2);
    auto w1 = weight_of_difference(d1, c2);
    auto w2 = weight_of_difference(d2, c1);
    if (!w1 && !w2)
        fail(Err::DegenerateDelta, "both dual differences are empty, the pair encodes nothing");
    std::size_t delta = std::min(w1.value_or(std::size_t(-1)), w2.value_or(std::size_t(-1)));
    bool pure = delta == std::min(min_distance(d1), min_distance(d2));
    return finish(n, kappa, delta, c, c1.field()->q(), pure);
}

std::pair<LinearCode, CSSParams> css_with_target_c(const LinearCode& c1, const LinearCode& c2,
                                                   std::size_t c_target) {
    check_css_pair(c1, c2);
    HullReport rep = hull_dim(c1, c2, 0);
    std::size_t c_now = c1.k() - rep.dim_hull;
    std::size_t c_max = c1.k() - rep.lower_bound;  // = min(k1, k2)
    if (c_target < c_now || c_target > c_max)
        fail(Err::TargetOutOfRange, "entanglement target must lie in [k1 - dim hull, min(k1, k2)]");
    if (c_target == c_now) return {c2, css(c1, c2)};
    ReductionTrace tr = reduce_to(c1, c2, c1.k() - c_target, 0);
    CSSParams p = css(c1, tr.final_code);
    return {std::move(tr.final_code), p};
}

CSSParams hermitian(const LinearCode& c) {
    const FieldPtr& f = c.field();
    if (f->ell() % 2 != 0) fail(Err::OddExtensionDegree, "the Hermitian form needs a square field");
    std::uint32_t e = f->ell() / 2;
    std::size_t n = c.n(), k = c.k();

    LinearCode image = galois_image(c, e);
    LinearCode herm_dual = dual(image);
    LinearCode hull = relative_hull(c, image);  // C cap its Hermitian dual
    std::size_t cc = k - hull.k();
    std::size_t kappa = (n - k) - hull.k();  // n - 2k + c

    auto w = weight_of_difference(herm_dual, hull);
    if (!w) fail(Err::DegenerateDelta, "the Hermitian dual lies inside the code");
    bool pure = *w == min_distance(herm_dual);
    return finish(n, kappa, *w, cc, f->q(), pure);
}

bool purity_robust(const LinearCode& c1, const LinearCode& c2) {
    CSSParams base = css(c1, c2);
    if (!base.pure) fail(Err::NotPureInput, "the pair must be pure to certify robustness");
    std::size_t d1p = min_distance(dual(c1)), d2p = min_distance(dual(c2));
    std::size_t d1 = min_distance(c1), d2 = min_distance(c2);
    bool separated = d1p < std::min(d2, d2p);
    bool balanced = d1p == d2p && d1p < std::min(d1, d2);
    return separated || balanced;
}

namespace {

std::pair<LinearCode, CSSParams> sandwich_impl(const LinearCode& c1, const CartesianGrid& grid,
                                               const LinearCode* given) {
    if (!c1.field()->same_as(*grid.field()))
        fail(Err::MixedFields, "code and grid live over different fields");
    if (c1.n() != grid.n()) fail(Err::LengthMismatch, "code length differs from the grid size");

    std::size_t d = min_distance(dual(c1));
    LinearCode upper = eval_code(hyperbolic(d, grid), grid);
    auto hd1 = hyperbolic(d + 1, grid);
    LinearCode lower =
        hd1.empty() ? LinearCode::full(grid.field(), grid.n()) : dual(eval_code(hd1, grid));

    LinearCode c2 = given ? *given : upper;
    if (given) check_css_pair(c1, *given);
    if (!lower.subset_of(c2) || !c2.subset_of(upper))
        fail(Err::SandwichViolated,
             "the second code must contain the dual of the next hyperbolic code and sit inside "
             "the hyperbolic code");

    CSSParams base = css(c1, c2);
    if (!base.pure || base.delta != d)
        fail(Err::SandwichViolated, "the pair is not pure with the designed distance");

    // a few sampled equivalences of C2 must leave the distance pinned
    std::size_t n = grid.n();
    std::uint32_t q = grid.field()->q();
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<std::uint32_t> unit(1, q - 1);
    for (int t = 0; t < 8; ++t) {
        std::vector<std::uint32_t> sigma(n), lambda(n);
        std::iota(sigma.begin(), sigma.end(), 0);
        std::shuffle(sigma.begin(), sigma.end(), rng);
        for (auto& v : lambda) v = unit(rng);
        CSSParams moved = css(c1, apply_map(c2, MonomialMap(grid.field(), lambda, sigma)));
        if (!moved.pure || moved.delta != d)
            fail(Err::SandwichViolated, "a sampled equivalence broke the purity guarantee");
    }
    return {std::move(c2), base};
}

}  // namespace

std::pair<LinearCode, CSSParams> sandwich_pure(const LinearCode& c1, const CartesianGrid& grid) {
    return sandwich_impl(c1, grid, nullptr);
}

std::pair<LinearCode, CSSParams> sandwich_pure(const LinearCode& c1, const CartesianGrid& grid,
                                               const LinearCode& c2) {
    return sandwich_impl(c1, grid, &c2);
}

CSSParams impure_pair(const ExponentSet& m1, const ExponentSet& m2, const CartesianGrid& grid) {
    check_in_box(m1, grid);
    check_in_box(m2, grid);
    if (!is_decreasing(m1)) fail(Err::NotDecreasing, "the first exponent set must be decreasing");
    std::size_t d = footprint_bound(m1, grid);  // exact distance, M1 decreasing

    if (!hyperbolic_dual(d + 1, grid).subset_of(m2))
        fail(Err::ConditionViolated,
             "(1) the dual hyperbolic set of d + 1 must lie inside the second set");
    ExponentSet diff = set_minus(m1, m2);
    if (diff.empty()) fail(Err::ConditionViolated, "(2) the sets must differ inside the first one");
    if (!diff.subset_of(hyperbolic(d + 1, grid)))
        fail(Err::ConditionViolated,
             "(2) the first-only monomials must lie in the hyperbolic set of d + 1");
    ExponentSet common = set_intersect(m1, m2);
    for (const auto& u : common.exponents())
        for (const auto& v : diff.exponents())
            if (!grlex_less(u, v))
                fail(Err::ConditionViolated,
                     "(3) shared monomials must precede the first-only monomials in graded "
                     "lex order");

    LinearCode cm1 = eval_code(m1, grid);
    LinearCode c2 = eval_code(m2, grid);
    if (!weight_of_difference(cm1, c2))
        fail(Err::EmptyDifference, "the dual of the first code is contained in the second");

    CSSParams p = css(dual(cm1), c2);
    if (p.pure) fail(Err::Internal, "the construction must produce an impure pair");
    if (p.delta <= d) fail(Err::Internal, "impure delta must exceed the base distance");
    return p;
}

CSSParams impure_family(const ExponentSet& m1, const ExponentSet& m2, const FieldPtr& field,
                        std::size_t m) {
    CartesianGrid grid = CartesianGrid::full(field, m);
    check_in_box(m1, grid);
    check_in_box(m2, grid);
    if (!is_decreasing(m1) || !is_decreasing(m2))
        fail(Err::NotDecreasing, "both exponent sets must be decreasing");
    if (!m1.subset_of(m2))
        fail(Err::PreconditionViolated, "the first set must be contained in the second");
    if (footprint_bound(m1, grid) <= 2 || footprint_bound(m2, grid) <= 2)
        fail(Err::DistanceTooSmall, "both codes need minimum distance greater than 2");

    // every nonzero point must be seen by a nonconstant monomial of M1, so
    // the indicator of the zero point is the only weight-one word available
    // to the dual of D1
    const Field& f = *field;
    ExponentSet m1x = set_minus(m1, ExponentSet(m, {Exponent(m, 0)}));
    for (std::size_t j = 1; j < grid.n(); ++j) {
        const auto& p = grid.points()[j];
        bool seen = false;
        for (const auto& u : m1x.exponents()) {
            std::uint32_t v = 1;
            for (std::size_t i = 0; i < m; ++i) v = f.mul(v, f.pow(p[i], u[i]));
            if (v != 0) {
                seen = true;
                break;
            }
        }
        if (!seen)
            fail(Err::WeightOneAmbiguity,
                 "a nonzero point is invisible to every nonconstant monomial of the first set");
    }

    LinearCode d1 = eval_code(m1x, grid);
    MatrixGF dual_m2 = dual(eval_code(m2, grid)).gen();
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(dual_m2.rows() + 1);
    for (std::size_t r = 0; r < dual_m2.rows(); ++r) rows.push_back(dual_m2.row(r));
    std::vector<std::uint32_t> e0(grid.n(), 0);
    e0[0] = 1;
    rows.push_back(std::move(e0));
    LinearCode d2 = LinearCode::from_rows(field, rows);

    if (d2.k() != grid.n() - m2.size() + 1)
        fail(Err::Internal, "the indicator of the zero point must be new to the dual");
    if (!d1.subset_of(dual(d2))) fail(Err::Internal, "D1 must be orthogonal to D2");

    CSSParams p = css(d1, d2);  // degenerate exactly when M1 = M2
    if (p.c != 0) fail(Err::Internal, "the family pair must need no entanglement");
    if (p.kappa != m2.size() - m1.size()) fail(Err::Internal, "kappa must equal |M2| - |M1|");
    if (min_distance(dual(d1)) != 1)
        fail(Err::Internal, "the dual of D1 must have a weight-one word");
    if (p.delta <= 1 || p.pure) fail(Err::Internal, "the family construction must be impure");
    return p;
}

}  // namespace relhull
