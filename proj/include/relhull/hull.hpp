#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "relhull/code.hpp"

namespace relhull {

// Diagonal sweeps larger than this are sampled instead of enumerated.
inline constexpr std::uint64_t kDiagonalSweepBudget = std::uint64_t(1) << 20;
// Permutations are enumerated exhaustively up to this length.
inline constexpr std::size_t kExhaustivePermLength = 8;

struct HullReport {
    std::size_t dim_hull;
    std::size_t lower_bound;   // max{0, k1 - k2}
    std::size_t upper_bound;   // min{k1, n - k2}
    std::size_t rank_product;  // rank(G2^(p^e) G1^T)
    std::uint32_t galois_e;
};

// dim(C1 cap C2-perp_e) = k1 - rank(frobenius_entrywise(G2, e) G1^T).
// e = 0 is the Euclidean pairing, e = ell/2 the Hermitian one.
HullReport hull_dim(const LinearCode& c1, const LinearCode& c2, std::uint32_t e = 0);

enum class WitnessKind { Scaling, Transposition };

struct ReductionStep {
    WitnessKind kind;
    std::size_t coord_i;  // scaled coordinate, or smaller transposed index
    std::size_t coord_j;  // equal to coord_i for scalings
    std::uint32_t scalar;  // scaling value applied on C2 (1 for transpositions)
    std::size_t hull_dim_after;
};

struct ReductionTrace {
    LinearCode initial_code;  // C2 as given
    LinearCode final_code;    // equivalent code reached
    MonomialMap composed;     // applying this to initial_code gives final_code
    std::optional<MonomialMap> increase;  // present when the hull was raised first
    std::size_t dim_after_increase = 0;   // meaningful only when increase is set
    std::vector<ReductionStep> steps;     // each lowers the hull by exactly one
};

// One step of hull reduction: returns C2' equivalent to C2 with
// dim hull^e_{C2'}(C1) exactly one lower, plus the witness map.  The search
// runs over single-coordinate scalings (coordinate ascending, then value
// ascending over F_q minus {0,1}) and then transpositions in lexicographic
// order, accepting the first candidate that raises rank(G2'^(p^e) G1^T) by
// exactly one.
std::pair<LinearCode, MonomialMap> reduce_step(const LinearCode& c1, const LinearCode& c2,
                                               std::uint32_t e = 0);

// Chain of reduce_step calls down to hull dimension target.
ReductionTrace reduce_to(const LinearCode& c1, const LinearCode& c2, std::size_t target,
                         std::uint32_t e = 0);

// Self e-Galois hull reduction by a diagonal map: finds a scaling vector
// lambda, all ones except one coordinate set to a unit x with x^(p^e+1) != 1,
// such that dim hull^e(lambda * C) = dim hull^e(C) - 1.  The existence of
// such an x is a property of (q, e) and is checked by enumerating the units.
std::pair<std::vector<std::uint32_t>, LinearCode> egal_hull_reduce_step(const LinearCode& c,
                                                                        std::uint32_t e);

struct IncreaseConfig {
    std::uint64_t sigma_trials = 100000;  // sampled permutations when n > 8
    std::uint64_t seed = 0;
};

struct IncreaseResult {
    LinearCode c2_new;
    MonomialMap map;  // applied to C2 gives c2_new
};

// Searches permutations sigma (exhaustive for n <= 8, else seeded sampling)
// for a full-weight word lambda in (C1 * C2^sigma)-perp; on success C2' =
// lambda * C2^sigma satisfies hull_{C2'}(C1) = k1.  Absence only means the
// search budget ran out, not that no witness exists.
std::optional<IncreaseResult> increase_to_full(const LinearCode& c1, const LinearCode& c2,
                                               const IncreaseConfig& cfg = {});

// Reaches any target hull dimension in [max{0,k1-k2}, k1]: reduces directly
// when possible, otherwise raises the hull to k1 first and reduces back down.
ReductionTrace set_hull_dim(const LinearCode& c1, const LinearCode& c2, std::size_t target,
                            const IncreaseConfig& cfg = {});

struct DiagonalSweepConfig {
    std::uint64_t trials = 4096;  // sample size beyond the exhaustive budget
    std::uint64_t seed = 0;
};

struct DiagonalMaxReport {
    std::size_t achieved;  // max over diagonal maps of dim hull_{C2}(C1 I_lambda)
    long long bound_maxwt;     // maxwt((C1*C2)-perp) - n + k1
    long long bound_anticode;  // k1 - dim(C1*C2)
    bool exact;                // false when the lambda sweep was sampled
    std::vector<std::uint32_t> best_lambda;
};

DiagonalMaxReport diagonal_hull_max(const LinearCode& c1, const LinearCode& c2,
                                    const DiagonalSweepConfig& cfg = {});

struct AugmentReport {
    LinearCode c1_aug;
    LinearCode c2_aug;
    bool predicted;  // i == j and i >= k - r (0-based rows)
    std::size_t dim_before;
    std::size_t dim_after;
};

// Length augmentation: normalizes G1 G2^T to diag(0, I_r) by invertible row
// operations on both generators, then appends column e_i to G1 and -e_j to
// G2.  The hull dimension grows exactly when i == j >= k - r (0-based), and
// the result is post-verified against that predicate.
AugmentReport augment_length(const LinearCode& c1, const LinearCode& c2, std::size_t i,
                             std::size_t j);

}  // namespace relhull
