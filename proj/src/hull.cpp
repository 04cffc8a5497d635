#include "relhull/hull.hpp"

#include <algorithm>
#include <random>

#include "relhull/error.hpp"

namespace relhull {

namespace {

void check_pair(const LinearCode& c1, const LinearCode& c2) {
    check_same_field(*c1.field(), *c2.field());
    if (c1.n() != c2.n()) fail(Err::LengthMismatch, "codes have different lengths");
}

std::vector<std::uint32_t> identity_perm(std::size_t n) {
    std::vector<std::uint32_t> sigma(n);
    for (std::size_t i = 0; i < n; ++i) sigma[i] = static_cast<std::uint32_t>(i);
    return sigma;
}

// Rank of frobenius_entrywise(G2 * I_lambda * P_sigma, e) * G1^T without
// materializing the mapped code: the frobenius of the scaled generator is the
// frobenius of G2 scaled by lambda^(p^e) under the same permutation.
std::size_t candidate_rank(const MatrixGF& h2, const MatrixGF& g1t,
                           const std::vector<std::uint32_t>& lambda_pe,
                           const std::vector<std::uint32_t>& sigma) {
    return rank(scaled_product(h2, lambda_pe, sigma, g1t, ProductPath::RankUpdate));
}

struct FoundStep {
    MonomialMap map;
    ReductionStep step;
};

// The constructive equivalence theorem guarantees that when the hull sits
// above its lower bound, some single-coordinate scaling or transposition of
// C2 raises rank(G2^(p^e) G1^T) by one.  Search order is fixed: scalings by
// coordinate then value, transpositions lexicographic.
std::optional<FoundStep> find_witness(const LinearCode& c1, const LinearCode& c2,
                                      std::uint32_t e) {
    const FieldPtr& f = c1.field();
    std::size_t n = c1.n();
    MatrixGF h2 = frobenius_entrywise(c2.gen(), e);
    MatrixGF g1t = transpose(c1.gen());
    std::size_t base = rank(h2 * g1t);

    std::vector<std::uint32_t> lambda(n, 1);
    std::vector<std::uint32_t> sigma = identity_perm(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::uint32_t v = 2; v < f->q(); ++v) {
            lambda[j] = f->frobenius(v, e);
            if (candidate_rank(h2, g1t, lambda, sigma) == base + 1) {
                MonomialMap m = MonomialMap::scaling(f, n, j, v);
                return FoundStep{m, {WitnessKind::Scaling, j, j, v, 0}};
            }
        }
        lambda[j] = 1;
    }
    std::vector<std::uint32_t> ones(n, 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::swap(sigma[i], sigma[j]);
            if (candidate_rank(h2, g1t, ones, sigma) == base + 1) {
                MonomialMap m = MonomialMap::transposition(f, n, i, j);
                return FoundStep{m, {WitnessKind::Transposition, i, j, 1, 0}};
            }
            std::swap(sigma[i], sigma[j]);
        }
    }
    return std::nullopt;
}

}  // namespace

HullReport hull_dim(const LinearCode& c1, const LinearCode& c2, std::uint32_t e) {
    check_pair(c1, c2);
    std::size_t k1 = c1.k(), k2 = c2.k(), n = c1.n();
    MatrixGF prod = frobenius_entrywise(c2.gen(), e) * transpose(c1.gen());
    std::size_t r = rank(prod);
    HullReport rep;
    rep.dim_hull = k1 - r;
    rep.lower_bound = k1 > k2 ? k1 - k2 : 0;
    rep.upper_bound = std::min(k1, n - k2);
    rep.rank_product = r;
    rep.galois_e = e;
    if (rep.dim_hull > rep.upper_bound)
        fail(Err::Internal, "hull dimension exceeds its upper bound");
    return rep;
}

std::pair<LinearCode, MonomialMap> reduce_step(const LinearCode& c1, const LinearCode& c2,
                                               std::uint32_t e) {
    HullReport rep = hull_dim(c1, c2, e);
    if (rep.dim_hull <= rep.lower_bound)
        fail(Err::AlreadyAtLowerBound, "hull dimension is already max{0, k1-k2}");
    auto found = find_witness(c1, c2, e);
    if (!found)
        fail(Err::NoWitnessFound,
             "no single-coordinate scaling or transposition lowers the hull by one");
    LinearCode c2p = apply_map(c2, found->map);
    if (hull_dim(c1, c2p, e).dim_hull != rep.dim_hull - 1)
        fail(Err::Internal, "witness verification failed");
    return {std::move(c2p), std::move(found->map)};
}

ReductionTrace reduce_to(const LinearCode& c1, const LinearCode& c2, std::size_t target,
                         std::uint32_t e) {
    HullReport rep = hull_dim(c1, c2, e);
    if (target < rep.lower_bound || target > rep.dim_hull)
        fail(Err::TargetOutOfRange, "target must lie in [max{0,k1-k2}, current hull dimension]");

    ReductionTrace trace{c2, c2, MonomialMap::identity(c1.field(), c1.n()), std::nullopt, 0, {}};
    LinearCode cur = c2;
    std::size_t dim = rep.dim_hull;
    while (dim > target) {
        auto found = find_witness(c1, cur, e);
        if (!found)
            fail(Err::NoWitnessFound,
                 "no single-coordinate scaling or transposition lowers the hull by one");
        cur = apply_map(cur, found->map);
        --dim;
        if (hull_dim(c1, cur, e).dim_hull != dim)
            fail(Err::Internal, "witness verification failed");
        found->step.hull_dim_after = dim;
        trace.steps.push_back(found->step);
        trace.composed = MonomialMap::compose(trace.composed, found->map);
    }
    trace.final_code = std::move(cur);
    if (apply_map(trace.initial_code, trace.composed) != trace.final_code)
        fail(Err::Internal, "composed witness map does not reproduce the final code");
    return trace;
}

std::pair<std::vector<std::uint32_t>, LinearCode> egal_hull_reduce_step(const LinearCode& c,
                                                                        std::uint32_t e) {
    const FieldPtr& f = c.field();
    std::size_t n = c.n();

    // pairing exponent p^e + 1: lambda acts on the self product through
    // lambda^(p^e + 1), so only units x with x^(p^e+1) != 1 can move the rank
    std::vector<std::uint32_t> usable;
    for (std::uint32_t x = 1; x < f->q(); ++x)
        if (f->mul(f->frobenius(x, e), x) != 1) usable.push_back(x);

    HullReport rep = hull_dim(c, c, e);
    if (rep.dim_hull == 0) fail(Err::AlreadyAtLowerBound, "self hull dimension is already zero");
    if (usable.empty())
        fail(Err::ConditionUnsatisfiable,
             "every unit x satisfies x^(p^e+1) = 1, so diagonal maps cannot move the self hull");

    MatrixGF h = frobenius_entrywise(c.gen(), e);
    MatrixGF gt = transpose(c.gen());
    std::size_t base = rank(h * gt);

    std::vector<std::uint32_t> mu(n, 1), sigma = identity_perm(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::uint32_t x : usable) {
            mu[j] = f->mul(f->frobenius(x, e), x);  // x^(p^e+1)
            if (candidate_rank(h, gt, mu, sigma) == base + 1) {
                std::vector<std::uint32_t> lambda(n, 1);
                lambda[j] = x;
                LinearCode scaled = apply_map(c, MonomialMap(f, lambda, sigma));
                if (hull_dim(scaled, scaled, e).dim_hull != rep.dim_hull - 1)
                    fail(Err::Internal, "witness verification failed");
                return {std::move(lambda), std::move(scaled)};
            }
        }
        mu[j] = 1;
    }
    fail(Err::NoWitnessFound, "no single-coordinate scaling lowers the self hull by one");
}

namespace {

// Tries one permutation: is there a full-weight word in (C1 * C2^sigma)-perp?
std::optional<IncreaseResult> try_sigma(const LinearCode& c1, const LinearCode& c2,
                                        const std::vector<std::uint32_t>& sigma) {
    const FieldPtr& f = c1.field();
    std::size_t n = c1.n();
    MonomialMap perm(f, std::vector<std::uint32_t>(n, 1), sigma);
    LinearCode c2s = apply_map(c2, perm);
    LinearCode s = schur(c1, c2s);
    const MatrixGF& dual_gen = s.parity();

    // a zero column in the dual generator pins that coordinate to zero
    for (std::size_t j = 0; j < n; ++j) {
        bool all_zero = true;
        for (std::size_t r = 0; r < dual_gen.rows() && all_zero; ++r)
            all_zero = dual_gen.at(r, j) == 0;
        if (all_zero) return std::nullopt;
    }

    std::optional<std::vector<std::uint32_t>> lambda;
    if (s.k() == 0) {
        lambda = std::vector<std::uint32_t>(n, 1);
    } else {
        lambda = full_weight_word(LinearCode::from_matrix(dual_gen));
    }
    if (!lambda) return std::nullopt;

    MonomialMap full = MonomialMap::compose(perm, MonomialMap(f, *lambda, identity_perm(n)));
    LinearCode c2_new = apply_map(c2, full);
    if (!(c1.gen() * transpose(c2_new.gen())).is_zero())
        fail(Err::Internal, "full-weight witness does not annihilate the pair");
    return IncreaseResult{std::move(c2_new), std::move(full)};
}

}  // namespace

std::optional<IncreaseResult> increase_to_full(const LinearCode& c1, const LinearCode& c2,
                                               const IncreaseConfig& cfg) {
    check_pair(c1, c2);
    std::size_t n = c1.n();
    // A full hull needs k1 <= n - k2; past that the search is hopeless.
    // At equality it can still succeed (C2' dual exactly equal to C1).
    if (c1.k() + c2.k() > n)
        fail(Err::PreconditionViolated, "full hull is impossible when k1 + k2 > n");

    if (n <= kExhaustivePermLength) {
        std::vector<std::uint32_t> sigma = identity_perm(n);
        do {
            if (auto res = try_sigma(c1, c2, sigma)) return res;
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        return std::nullopt;
    }

    std::mt19937_64 rng(cfg.seed);
    std::vector<std::uint32_t> sigma = identity_perm(n);
    for (std::uint64_t t = 0; t < cfg.sigma_trials; ++t) {
        if (t > 0) std::shuffle(sigma.begin(), sigma.end(), rng);
        if (auto res = try_sigma(c1, c2, sigma)) return res;
    }
    return std::nullopt;
}

ReductionTrace set_hull_dim(const LinearCode& c1, const LinearCode& c2, std::size_t target,
                            const IncreaseConfig& cfg) {
    HullReport rep = hull_dim(c1, c2, 0);
    if (target < rep.lower_bound || target > c1.k())
        fail(Err::TargetOutOfRange, "target must lie in [max{0,k1-k2}, k1]");
    if (target <= rep.dim_hull) return reduce_to(c1, c2, target, 0);

    auto inc = increase_to_full(c1, c2, cfg);
    if (!inc)
        fail(Err::IncreaseHypothesisNotWitnessed,
             "no permutation with a full-weight word in the Schur dual was found");
    ReductionTrace down = reduce_to(c1, inc->c2_new, target, 0);
    ReductionTrace trace{c2, std::move(down.final_code),
                         MonomialMap::compose(inc->map, down.composed), inc->map, c1.k(),
                         std::move(down.steps)};
    if (apply_map(trace.initial_code, trace.composed) != trace.final_code)
        fail(Err::Internal, "composed witness map does not reproduce the final code");
    return trace;
}

DiagonalMaxReport diagonal_hull_max(const LinearCode& c1, const LinearCode& c2,
                                    const DiagonalSweepConfig& cfg) {
    check_pair(c1, c2);
    if (c1.k() > c2.k()) fail(Err::PreconditionViolated, "diagonal sweep requires k1 <= k2");
    const FieldPtr& f = c1.field();
    std::size_t n = c1.n(), k1 = c1.k();

    // dim hull_{C2}(C1 I_lambda) = k1 - rank(G2 I_lambda G1^T)
    MatrixGF g2 = c2.gen();
    MatrixGF g1t = transpose(c1.gen());
    std::vector<std::uint32_t> sigma = identity_perm(n);
    std::size_t achieved = 0;
    std::vector<std::uint32_t> best;
    auto visit = [&](const std::vector<std::uint32_t>& lambda) {
        std::size_t dim = k1 - candidate_rank(g2, g1t, lambda, sigma);
        if (best.empty() || dim > achieved) {
            achieved = dim;
            best = lambda;
        }
        return achieved < std::min(k1, n - c2.k());  // upper bound already hit: stop
    };

    std::uint64_t space = 1;
    bool exact = true;
    for (std::size_t i = 0; i < n && exact; ++i) {
        space *= f->q() - 1;
        if (space > kDiagonalSweepBudget) exact = false;
    }

    if (exact) {
        std::vector<std::uint32_t> lambda(n, 1);
        bool more = true;
        while (more) {
            if (!visit(lambda)) break;
            std::size_t pos = n;
            while (pos > 0) {
                --pos;
                if (lambda[pos] + 1 < f->q()) {
                    ++lambda[pos];
                    break;
                }
                lambda[pos] = 1;
                if (pos == 0) more = false;
            }
            if (n == 0) break;
        }
    } else {
        std::mt19937_64 rng(cfg.seed);
        std::vector<std::uint32_t> lambda(n, 1);
        for (std::uint64_t t = 0; t < cfg.trials; ++t) {
            if (t > 0)
                for (auto& v : lambda) v = 1 + static_cast<std::uint32_t>(rng() % (f->q() - 1));
            if (!visit(lambda)) break;
        }
    }

    LinearCode s = schur(c1, c2);
    long long bound_anticode = static_cast<long long>(k1) - static_cast<long long>(s.k());
    LinearCode sd = dual(s);
    long long mw = static_cast<long long>(max_weight(sd));
    long long bound_maxwt = mw - static_cast<long long>(n) + static_cast<long long>(k1);

    if (exact) {
        if (static_cast<long long>(achieved) < bound_maxwt || bound_maxwt < bound_anticode)
            fail(Err::Internal, "diagonal hull maximum fell below its lower bound");
    }
    return {achieved, bound_maxwt, bound_anticode, exact, std::move(best)};
}

AugmentReport augment_length(const LinearCode& c1, const LinearCode& c2, std::size_t i,
                             std::size_t j) {
    check_pair(c1, c2);
    if (c1.k() != c2.k()) fail(Err::DimensionMismatch, "length augmentation requires k1 = k2");
    std::size_t k = c1.k(), n = c1.n();
    if (i >= k || j >= k) fail(Err::IndexOutOfRange, "appended unit column index exceeds k");
    const FieldPtr& f = c1.field();

    // Row-reduce A = G1 G2^T on both sides to diag(0_{k-r}, I_r): U1 A = R
    // (RREF, pivots on top), then W R^T = [[I_r,0],[0,0]] gives
    // U1 A W^T = [[I_r,0],[0,0]]; a block rotation moves I_r to the bottom.
    MatrixGF a = c1.gen() * transpose(c2.gen());
    auto track_rref = [&](const MatrixGF& m) {
        MatrixGF aug(f, k, 2 * k);
        for (std::size_t r = 0; r < k; ++r) {
            for (std::size_t c = 0; c < k; ++c) aug.set(r, c, m.at(r, c));
            aug.set(r, k + r, 1);
        }
        auto [red, piv] = rref(aug);
        (void)piv;
        MatrixGF left(f, k, k), right(f, k, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) {
                left.set(r, c, red.at(r, c));
                right.set(r, c, red.at(r, k + c));
            }
        return std::make_pair(left, right);
    };

    auto [r1, u1] = track_rref(a);
    std::size_t r = rank(r1);
    auto [r2, w] = track_rref(transpose(r1));
    // sanity: r2 must be the I_r block in the top-left corner
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y)
            if (r2.at(x, y) != ((x == y && x < r) ? 1u : 0u))
                fail(Err::Internal, "pair product did not normalize to a unit block");

    // rotate so the identity block sits at rows/columns k-r..k-1
    auto rotate = [&](const MatrixGF& m) {
        MatrixGF out(f, k, k);
        for (std::size_t row = 0; row < k; ++row) {
            std::size_t dst = row < r ? row + (k - r) : row - r;
            for (std::size_t c = 0; c < k; ++c) out.set(dst, c, m.at(row, c));
        }
        return out;
    };
    MatrixGF u = rotate(u1), v = rotate(w);

    MatrixGF g1n = u * c1.gen();
    MatrixGF g2n = v * c2.gen();
    MatrixGF g1h(f, k, n + 1), g2h(f, k, n + 1);
    for (std::size_t row = 0; row < k; ++row) {
        for (std::size_t c = 0; c < n; ++c) {
            g1h.set(row, c, g1n.at(row, c));
            g2h.set(row, c, g2n.at(row, c));
        }
    }
    g1h.set(i, n, 1);
    g2h.set(j, n, f->neg(1));

    AugmentReport rep{LinearCode::from_matrix(g1h), LinearCode::from_matrix(g2h),
                      i == j && i >= k - r, hull_dim(c1, c2, 0).dim_hull, 0};
    rep.dim_after = hull_dim(rep.c1_aug, rep.c2_aug, 0).dim_hull;
    if ((rep.dim_after > rep.dim_before) != rep.predicted)
        fail(Err::Internal, "augmentation outcome contradicts the i = j > k-r predicate");
    return rep;
}

}  // namespace relhull
