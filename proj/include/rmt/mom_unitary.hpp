#pragma once
// Closed-form finite-n moments for beta = 2: LUE for any convergent real
// order (exact at integer orders), JUE positive integer orders through the
// telescoped differences, GUE even moments.

#include "rmt/ensemble.hpp"

namespace rmt {

/// LUE moment sum, ungated: evaluates the closed formula wherever it has no
/// Pochhammer pole, which extends past integral convergence (the beta = 4
/// assembly relies on that continuation). Throws PoleError.
ExactReal lue_sum_exact(long k, long n, const HalfInt& b);

/// Public LUE moment; integer order. Divergence reported as a result.
MomentResult lue_moment(long k, long n, const HalfInt& b);

/// LUE moment at real non-integer order via the quad-precision path.
MomentResult lue_moment_real(double k, long n, const HalfInt& b);

/// First JUE moment n(b+n)/(a+b+2n).
ExactReal jue_first_moment(long n, const HalfInt& a, const HalfInt& b);

/// Difference M(k,n) - M(k+1,n) for positive integer k.
ExactReal jue_moment_diff(long k, long n, const HalfInt& a, const HalfInt& b);

/// JUE moment sum, ungated analytic continuation (the beta = 4 assembly
/// evaluates it at doubled parameters down to a = -1). Throws PoleError.
ExactReal jue_sum_exact(long k, long n, const HalfInt& a, const HalfInt& b);

/// JUE moment for integer k >= 0, anchored at the first moment.
MomentResult jue_moment(long k, long n, const HalfInt& a, const HalfInt& b);

/// GUE moment sum for even order two_k >= 0 (even/odd n branches), ungated.
ExactReal gue_sum_exact(long two_k, long n);

/// Public GUE moment of order `order`; odd orders are exactly zero.
MomentResult gue_moment(long order, long n);

}  // namespace rmt
