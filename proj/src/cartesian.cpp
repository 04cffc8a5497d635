#include "relhull/cartesian.hpp"

#include <algorithm>
#include <numeric>

#include "relhull/error.hpp"

namespace relhull {

CartesianGrid::CartesianGrid(FieldPtr field, std::vector<std::vector<std::uint32_t>> factors)
    : field_(std::move(field)), factors_(std::move(factors)) {
    if (factors_.empty()) fail(Err::PreconditionViolated, "a grid needs at least one factor");
    std::uint64_t total = 1;
    for (const auto& a : factors_) {
        if (a.empty()) fail(Err::PreconditionViolated, "grid factors must be nonempty");
        for (auto v : a) field_->check_code(v);
        std::vector<std::uint32_t> sorted = a;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail(Err::PreconditionViolated, "grid factors must not repeat elements");
        total *= a.size();
        if (total > kEnumerationBudget) fail(Err::EnumerationTooLarge, "grid has too many points");
    }

    std::size_t m = factors_.size();
    std::vector<std::size_t> idx(m, 0);
    points_.reserve(total);
    bool more = true;
    while (more) {
        std::vector<std::uint32_t> p(m);
        for (std::size_t i = 0; i < m; ++i) p[i] = factors_[i][idx[i]];
        points_.push_back(std::move(p));
        more = false;
        std::size_t pos = m;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < factors_[pos].size()) {
                more = true;
                break;
            }
            idx[pos] = 0;
        }
    }
}

CartesianGrid CartesianGrid::full(FieldPtr field, std::size_t m) {
    std::vector<std::uint32_t> all(field->q());
    std::iota(all.begin(), all.end(), 0);
    return CartesianGrid(std::move(field), std::vector<std::vector<std::uint32_t>>(m, all));
}

bool CartesianGrid::is_full() const {
    for (const auto& a : factors_)
        if (a.size() != field_->q()) return false;
    return true;
}

bool grlex_less(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) fail(Err::DimensionMismatch, "exponent arities differ");
    std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t(0));
    std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t(0));
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

ExponentSet::ExponentSet(std::size_t m, std::vector<Exponent> exponents)
    : m_(m), exponents_(std::move(exponents)) {
    if (m_ == 0) fail(Err::PreconditionViolated, "exponent arity must be positive");
    for (const auto& u : exponents_)
        if (u.size() != m_)
            fail(Err::DimensionMismatch, "exponent tuple arity differs from the set arity");
    std::sort(exponents_.begin(), exponents_.end(), grlex_less);
    exponents_.erase(std::unique(exponents_.begin(), exponents_.end()), exponents_.end());
}

bool ExponentSet::contains(const Exponent& u) const {
    if (u.size() != m_) fail(Err::DimensionMismatch, "exponent tuple arity differs from the set arity");
    return std::binary_search(exponents_.begin(), exponents_.end(), u, grlex_less);
}

bool ExponentSet::subset_of(const ExponentSet& other) const {
    if (m_ != other.m_) fail(Err::DimensionMismatch, "exponent set arities differ");
    for (const auto& u : exponents_)
        if (!other.contains(u)) return false;
    return true;
}

ExponentSet set_minus(const ExponentSet& a, const ExponentSet& b) {
    if (a.m() != b.m()) fail(Err::DimensionMismatch, "exponent set arities differ");
    std::vector<Exponent> out;
    std::set_difference(a.exponents().begin(), a.exponents().end(), b.exponents().begin(),
                        b.exponents().end(), std::back_inserter(out), grlex_less);
    return ExponentSet(a.m(), std::move(out));
}

ExponentSet set_intersect(const ExponentSet& a, const ExponentSet& b) {
    if (a.m() != b.m()) fail(Err::DimensionMismatch, "exponent set arities differ");
    std::vector<Exponent> out;
    std::set_intersection(a.exponents().begin(), a.exponents().end(), b.exponents().begin(),
                          b.exponents().end(), std::back_inserter(out), grlex_less);
    return ExponentSet(a.m(), std::move(out));
}

bool is_decreasing(const ExponentSet& m) {
    // closure under single-exponent decrements implies full divisor closure
    for (const auto& u : m.exponents()) {
        Exponent v = u;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            --v[i];
            bool in = m.contains(v);
            ++v[i];
            if (!in) return false;
        }
    }
    return true;
}

std::uint64_t fb(const Exponent& u, const CartesianGrid& grid) {
    if (u.size() != grid.m()) fail(Err::DimensionMismatch, "exponent arity differs from the grid arity");
    std::uint64_t prod = 1;
    for (std::size_t i = 0; i < u.size(); ++i) {
        std::uint64_t size = grid.factors()[i].size();
        if (u[i] >= size) fail(Err::ExponentOutOfBox, "exponent exceeds |A_i| - 1");
        prod *= size - u[i];
    }
    return prod;
}

std::uint64_t footprint_bound(const ExponentSet& m, const CartesianGrid& grid) {
    if (m.empty()) fail(Err::PreconditionViolated, "empty exponent set has no footprint bound");
    std::uint64_t best = 0;
    for (const auto& u : m.exponents()) {
        std::uint64_t v = fb(u, grid);
        if (best == 0 || v < best) best = v;
    }
    return best;
}

MatrixGF eval_matrix(const ExponentSet& m, const CartesianGrid& grid) {
    if (m.empty()) fail(Err::PreconditionViolated, "empty exponent set has no evaluation rows");
    if (m.m() != grid.m()) fail(Err::DimensionMismatch, "exponent arity differs from the grid arity");
    for (const auto& u : m.exponents())
        for (std::size_t i = 0; i < u.size(); ++i)
            if (u[i] >= grid.factors()[i].size())
                fail(Err::ExponentOutOfBox, "exponent exceeds |A_i| - 1");

    const Field& f = *grid.field();
    MatrixGF out(grid.field(), m.size(), grid.n());
    for (std::size_t r = 0; r < m.size(); ++r) {
        const Exponent& u = m.exponents()[r];
        for (std::size_t j = 0; j < grid.n(); ++j) {
            const auto& p = grid.points()[j];
            std::uint32_t v = 1;
            for (std::size_t i = 0; i < u.size(); ++i) v = f.mul(v, f.pow(p[i], u[i]));
            out.set(r, j, v);
        }
    }
    return out;
}

LinearCode eval_code(const ExponentSet& m, const CartesianGrid& grid) {
    LinearCode c = LinearCode::from_matrix(eval_matrix(m, grid));
    if (c.k() != m.size()) fail(Err::Internal, "monomial evaluation rows must be independent");
    return c;
}

namespace {

std::vector<Exponent> box_exponents(const CartesianGrid& grid) {
    std::size_t m = grid.m();
    std::vector<Exponent> out;
    out.reserve(grid.n());
    Exponent u(m, 0);
    bool more = true;
    while (more) {
        out.push_back(u);
        more = false;
        std::size_t pos = m;
        while (pos > 0) {
            --pos;
            if (++u[pos] < grid.factors()[pos].size()) {
                more = true;
                break;
            }
            u[pos] = 0;
        }
    }
    return out;
}

// Both halves at once so the complement identity |H_d| + |H_d-dual| = n can
// be checked every time either is requested.
std::pair<ExponentSet, ExponentSet> hyperbolic_pair(std::size_t d, const CartesianGrid& grid) {
    if (d < 1 || d > grid.n() + 1)
        fail(Err::DOutOfRange, "designed distance must lie in [1, n + 1]");
    std::vector<Exponent> hi, lo;
    for (auto& u : box_exponents(grid)) {
        std::uint64_t prod = 1;
        for (std::size_t i = 0; i < u.size(); ++i) prod *= u[i] + 1;
        if (prod < d) lo.push_back(u);
        if (fb(u, grid) >= d) hi.push_back(std::move(u));
    }
    ExponentSet h(grid.m(), std::move(hi)), hp(grid.m(), std::move(lo));
    if (h.size() + hp.size() != grid.n())
        fail(Err::Internal, "hyperbolic set sizes are not complementary");
    if (!is_decreasing(h) || !is_decreasing(hp))
        fail(Err::Internal, "hyperbolic sets must be decreasing");
    return {std::move(h), std::move(hp)};
}

}  // namespace

ExponentSet hyperbolic(std::size_t d, const CartesianGrid& grid) {
    return hyperbolic_pair(d, grid).first;
}

ExponentSet hyperbolic_dual(std::size_t d, const CartesianGrid& grid) {
    return hyperbolic_pair(d, grid).second;
}

TwistReport dual_twist(std::size_t d, const CartesianGrid& grid) {
    auto [h, hp] = hyperbolic_pair(d, grid);
    std::size_t n = grid.n();
    std::vector<std::uint32_t> ones(n, 1);
    // either side empty: the other spans everything and any scaling works
    if (h.empty() || hp.empty()) return {std::move(ones), h.size() + hp.size() == n};

    const Field& f = *grid.field();
    MatrixGF eh = eval_matrix(h, grid);
    MatrixGF ehp = eval_matrix(hp, grid);
    LinearCode dual_h = dual(LinearCode::from_matrix(eh));

    auto twisted_ok = [&](const std::vector<std::uint32_t>& lambda) {
        std::vector<std::uint32_t> tw(n);
        for (std::size_t r = 0; r < ehp.rows(); ++r) {
            for (std::size_t j = 0; j < n; ++j) tw[j] = f.mul(lambda[j], ehp.at(r, j));
            if (!dual_h.contains(tw)) return false;
        }
        return true;
    };
    auto report = [&](std::vector<std::uint32_t> lambda) -> TwistReport {
        bool ok = twisted_ok(lambda) && h.size() + hp.size() == n;
        return {std::move(lambda), ok};
    };

    // on a full grid the power sums vanish and all-ones always works; cheap
    // to test first everywhere
    if (twisted_ok(ones)) return report(std::move(ones));

    // each pair of rows gives one linear condition on lambda
    MatrixGF sys(grid.field(), h.size() * hp.size(), n);
    std::size_t r = 0;
    for (std::size_t a = 0; a < ehp.rows(); ++a)
        for (std::size_t b = 0; b < eh.rows(); ++b, ++r)
            for (std::size_t j = 0; j < n; ++j) sys.set(r, j, f.mul(ehp.at(a, j), eh.at(b, j)));
    MatrixGF ker = kernel(sys);
    if (ker.rows() == 0) fail(Err::NoTwistFound, "the scaling system has only the zero solution");
    auto lam = full_weight_word(LinearCode::from_matrix(ker));
    if (!lam) fail(Err::NoTwistFound, "no all-nonzero scaling solves the orthogonality system");
    return report(std::move(*lam));
}

}  // namespace relhull
