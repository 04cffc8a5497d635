#pragma once

#include <cstdint>
#include <optional>
#include <type_traits>
#include <vector>

#include "relhull/matrix.hpp"

namespace relhull {

// Exhaustive codeword enumeration is refused beyond this many words.
inline constexpr std::uint64_t kEnumerationBudget = std::uint64_t(1) << 24;

// Monomial isometry acting on length-n words as c -> c * I_lambda * P_sigma:
// coordinate i is scaled by lambda[i] and sent to position sigma[i].
class MonomialMap {
  public:
    MonomialMap(FieldPtr field, std::vector<std::uint32_t> lambda, std::vector<std::uint32_t> sigma);

    static MonomialMap identity(FieldPtr field, std::size_t n);
    static MonomialMap scaling(FieldPtr field, std::size_t n, std::size_t coord, std::uint32_t value);
    static MonomialMap transposition(FieldPtr field, std::size_t n, std::size_t i, std::size_t j);

    const FieldPtr& field() const { return field_; }
    std::size_t n() const { return lambda_.size(); }
    const std::vector<std::uint32_t>& lambda() const { return lambda_; }
    const std::vector<std::uint32_t>& sigma() const { return sigma_; }

    // First a, then b, merged into a single map.
    static MonomialMap compose(const MonomialMap& a, const MonomialMap& b);
    MonomialMap inverse() const;
    // Map with the scalings inverted and the permutation kept; applying it to
    // the dual of C gives the dual of C mapped by *this.
    MonomialMap dual_map() const;

    std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& word) const;
    MatrixGF apply_rows(const MatrixGF& m) const;

    bool is_identity() const;
    bool operator==(const MonomialMap& o) const {
        return field_->same_as(*o.field_) && lambda_ == o.lambda_ && sigma_ == o.sigma_;
    }

  private:
    FieldPtr field_;
    std::vector<std::uint32_t> lambda_;
    std::vector<std::uint32_t> sigma_;
};

struct WeightEnumerator {
    std::vector<std::uint64_t> counts;  // counts[w] = number of words of weight w
    bool operator==(const WeightEnumerator& o) const { return counts == o.counts; }
};

// [n, k] linear code stored as the reduced row echelon form of any spanning
// set; the dual generator is computed alongside, so equality of codes is
// plain matrix equality.
class LinearCode {
  public:
    static LinearCode from_rows(FieldPtr field, const std::vector<std::vector<std::uint32_t>>& rows);
    static LinearCode from_matrix(const MatrixGF& gen);
    static LinearCode zero(FieldPtr field, std::size_t n);
    static LinearCode full(FieldPtr field, std::size_t n);

    const FieldPtr& field() const { return gen_.field(); }
    std::size_t n() const { return gen_.cols(); }
    std::size_t k() const { return gen_.rows(); }
    const MatrixGF& gen() const { return gen_; }
    // Generator of the dual code, i.e. a parity check matrix of *this.
    const MatrixGF& parity() const { return dual_; }

    bool contains(const std::uint32_t* word) const;
    bool contains(const std::vector<std::uint32_t>& word) const;
    bool subset_of(const LinearCode& other) const;

    bool operator==(const LinearCode& o) const { return gen_ == o.gen_; }
    bool operator!=(const LinearCode& o) const { return !(*this == o); }

  private:
    LinearCode(MatrixGF gen, MatrixGF dual) : gen_(std::move(gen)), dual_(std::move(dual)) {}
    MatrixGF gen_;
    MatrixGF dual_;
};

LinearCode dual(const LinearCode& c);

// C1 cap C2-dual, computed as {x G1 : x in ker(G2 G1^T)}.
LinearCode relative_hull(const LinearCode& c1, const LinearCode& c2);

// Span of all componentwise products of codewords (generator rows suffice).
LinearCode schur(const LinearCode& c1, const LinearCode& c2);

LinearCode apply_map(const LinearCode& c, const MonomialMap& m);

// Entrywise image under a -> a^(p^e); for the e-Galois dual use
// dual(galois_image(c, e)).
LinearCode galois_image(const LinearCode& c, std::uint32_t e);

// Throws EnumerationTooLarge when q^k exceeds the budget.
void check_enumeration_budget(std::uint32_t q, std::size_t k);

// Invokes f(word, weight) for every codeword including zero, in a fixed
// order: message digits run 0..q-1, last generator row fastest.  f may
// return void, or bool where false stops the walk early.
template <typename F>
void for_each_codeword(const MatrixGF& gen, F&& f) {
    const Field& fld = *gen.field();
    std::uint32_t q = fld.q();
    check_enumeration_budget(q, gen.rows());
    std::size_t n = gen.cols(), k = gen.rows();
    std::vector<std::uint32_t> word(n, 0);
    std::size_t weight = 0;
    bool stop = false;

    auto emit = [&]() {
        if constexpr (std::is_same_v<decltype(f(word, weight)), bool>) {
            if (!f(word, weight)) stop = true;
        } else {
            f(word, weight);
        }
    };

    // Moves the coefficient of row r by the field element e.
    auto shift_row = [&](std::size_t r, std::uint32_t e) {
        const std::uint32_t* row = gen.row_ptr(r);
        for (std::size_t j = 0; j < n; ++j) {
            if (row[j] == 0) continue;
            std::uint32_t was = word[j];
            std::uint32_t now = fld.add(was, fld.mul(e, row[j]));
            word[j] = now;
            weight += (now != 0);
            weight -= (was != 0);
        }
    };

    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == k) {
            emit();
            return;
        }
        for (std::uint32_t v = 0; v < q; ++v) {
            if (v > 0) shift_row(depth, fld.sub(v, v - 1));
            self(self, depth + 1);
            if (stop) return;
        }
        shift_row(depth, fld.neg(q - 1));  // coefficient back to zero
    };
    rec(rec, 0);
}

// Smallest nonzero codeword weight; the zero code has no distance.
std::size_t min_distance(const LinearCode& c);
std::size_t max_weight(const LinearCode& c);
WeightEnumerator weight_enumerator(const LinearCode& c);

// min{wt(c) : c in a, c not in b}; empty when a is a subcode of b.
std::optional<std::size_t> weight_of_difference(const LinearCode& a, const LinearCode& b);

// First codeword of full weight n in deterministic enumeration order, if any.
std::optional<std::vector<std::uint32_t>> full_weight_word(const LinearCode& c);

}  // namespace relhull
