#pragma once

#include <cstdint>
#include <vector>

#include "relhull/code.hpp"

namespace relhull {

// Evaluation points A_1 x ... x A_m with each A_i a repeat-free subset of the
// field.  Points are enumerated lexicographically with the last factor
// varying fastest; scaling vectors and evaluation rows refer to that order.
class CartesianGrid {
  public:
    CartesianGrid(FieldPtr field, std::vector<std::vector<std::uint32_t>> factors);

    // A_i = the whole field, for every factor.
    static CartesianGrid full(FieldPtr field, std::size_t m);

    const FieldPtr& field() const { return field_; }
    std::size_t m() const { return factors_.size(); }
    std::size_t n() const { return points_.size(); }
    const std::vector<std::vector<std::uint32_t>>& factors() const { return factors_; }
    const std::vector<std::vector<std::uint32_t>>& points() const { return points_; }
    bool is_full() const;

  private:
    FieldPtr field_;
    std::vector<std::vector<std::uint32_t>> factors_;
    std::vector<std::vector<std::uint32_t>> points_;
};

// Exponent tuple a of a monomial x_1^{a_1} ... x_m^{a_m}.
using Exponent = std::vector<std::uint32_t>;

// Graded lexicographic comparison, total degree first, then x_1 > x_2 > ...
bool grlex_less(const Exponent& a, const Exponent& b);

// A set of exponent tuples of one arity, kept sorted in graded lex order so
// generator rows and serializations are deterministic.
class ExponentSet {
  public:
    ExponentSet(std::size_t m, std::vector<Exponent> exponents);

    std::size_t m() const { return m_; }
    std::size_t size() const { return exponents_.size(); }
    bool empty() const { return exponents_.empty(); }
    const std::vector<Exponent>& exponents() const { return exponents_; }

    bool contains(const Exponent& u) const;
    bool subset_of(const ExponentSet& other) const;

    bool operator==(const ExponentSet& o) const { return m_ == o.m_ && exponents_ == o.exponents_; }
    bool operator!=(const ExponentSet& o) const { return !(*this == o); }

  private:
    std::size_t m_;
    std::vector<Exponent> exponents_;
};

ExponentSet set_minus(const ExponentSet& a, const ExponentSet& b);
ExponentSet set_intersect(const ExponentSet& a, const ExponentSet& b);

// Closed under componentwise divisibility: u in M and u'|u imply u' in M.
bool is_decreasing(const ExponentSet& m);

// Footprint value prod(|A_i| - a_i); a lower bound on the weight of any word
// whose leading monomial is x^a.
std::uint64_t fb(const Exponent& u, const CartesianGrid& grid);

// min fb over the set; equals the true minimum distance when M is decreasing.
std::uint64_t footprint_bound(const ExponentSet& m, const CartesianGrid& grid);

// One row per monomial in graded lex order, entry (u, P) = u(P).
MatrixGF eval_matrix(const ExponentSet& m, const CartesianGrid& grid);

// Span of the evaluation rows; dimension always equals |M|.
LinearCode eval_code(const ExponentSet& m, const CartesianGrid& grid);

// H_d = {u in the box : fb(u) >= d} and H_d-dual = {u : prod(a_i + 1) < d}.
// Both are decreasing and |H_d| + |H_d-dual| = n.  d may exceed n by one
// (giving the empty set and the whole box) to support shifted-distance
// constructions.
ExponentSet hyperbolic(std::size_t d, const CartesianGrid& grid);
ExponentSet hyperbolic_dual(std::size_t d, const CartesianGrid& grid);

struct TwistReport {
    std::vector<std::uint32_t> lambda;  // all-nonzero scaling, length n
    bool verified;                      // twisted generators checked inside dual(C_{H_d})
};

// Scaling lambda with dual(C_{H_d}) = C_{H_d-dual} I_lambda, found by solving
// the bilinear orthogonality system; failure to find an all-nonzero solution
// is reported as NoTwistFound, never silently.
TwistReport dual_twist(std::size_t d, const CartesianGrid& grid);

}  // namespace relhull
