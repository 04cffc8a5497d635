#pragma once

#include <cstdint>
#include <utility>

#include "relhull/cartesian.hpp"
#include "relhull/hull.hpp"

namespace relhull {

// Parameters [[n, kappa, delta; c]]_q of a quantum code built from two
// classical codes.  kappa = n - k1 - k2 + c, c = k1 - dim hull_{C2}(C1) =
// rk(G2 G1^T), and delta is the minimum weight over the two codeword set
// differences.  singleton_slack = n + c + 2 - 2 delta - kappa, never negative.
struct CSSParams {
    std::size_t n;
    std::size_t kappa;
    std::size_t delta;
    std::size_t c;
    std::uint64_t q;
    bool pure;  // delta equals min{d(C1-dual), d(C2-dual)}
    std::size_t singleton_slack;
};

// delta = min{wt(C1-dual minus C2), wt(C2-dual minus C1)} by enumeration.
// Both differences empty (exactly the kappa = 0 case) is DegenerateDelta.
CSSParams css(const LinearCode& c1, const LinearCode& c2);

// Raise the entanglement parameter to c_target by reducing the relative hull;
// returns the replacement for C2 and the parameters of the new pair.
std::pair<LinearCode, CSSParams> css_with_target_c(const LinearCode& c1, const LinearCode& c2,
                                                   std::size_t c_target);

// Hermitian construction from one code over a square field: c = k - dim of
// the Hermitian hull, kappa = n - 2k + c, delta = wt(Hermitian dual minus
// the hull).
CSSParams hermitian(const LinearCode& c);

// True when the distance pattern of a pure pair pins delta under every
// monomial equivalence applied to C2: either d(C1-dual) < min{d(C2),
// d(C2-dual)}, or d(C1-dual) = d(C2-dual) and d(C1-dual) < min{d(C1), d(C2)}.
bool purity_robust(const LinearCode& c1, const LinearCode& c2);

// Build (or validate) a second code wedged between the hyperbolic code of
// designed distance d = d(C1-dual) and the dual of the next one.  The
// resulting pair stays pure with delta = d under equivalences of C2; a few
// sampled maps recheck that before returning.
std::pair<LinearCode, CSSParams> sandwich_pure(const LinearCode& c1, const CartesianGrid& grid);
std::pair<LinearCode, CSSParams> sandwich_pure(const LinearCode& c1, const CartesianGrid& grid,
                                               const LinearCode& c2);

// Impure pair from exponent sets: C1 = dual of the M1 code, C2 = the M2 code,
// subject to the three shape conditions on M2 relative to d = d(C_{M1}).
CSSParams impure_pair(const ExponentSet& m1, const ExponentSet& m2, const CartesianGrid& grid);

// Impure [[q^m, |M2| - |M1|; 0]] family on the full grid from nested
// decreasing sets: D1 = the code of M1 without the constant monomial, D2 =
// dual of the M2 code plus the indicator of the zero point.
CSSParams impure_family(const ExponentSet& m1, const ExponentSet& m2, const FieldPtr& field,
                        std::size_t m);

}  // namespace relhull
