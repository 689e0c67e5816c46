#pragma once
// beta = 4 moments: correction double sums S_E(k,n) and the assembled
// JSE/LSE/GSE moments, valid for half-integer n (the beta = 1 duality
// evaluates them at n -> (n-1)/2). Public values carry the normalization
// substitutions (a,b) -> (2a,2b), b -> 2b and the attendant powers of 2 in
// exactly one place: the assembly operations below.

#include "rmt/ensemble.hpp"

namespace rmt {

struct SymplecticCorrection {
    ExactReal value;
    long i_j_terms = 0;
};

SymplecticCorrection s_jacobi(long k, const HalfInt& n, const HalfInt& a, const HalfInt& b);
SymplecticCorrection s_laguerre(long k, const HalfInt& n, const HalfInt& b);
SymplecticCorrection s_gauss(long two_k, const HalfInt& n);

/// Assembled values without divergence gating; throw PoleError where the
/// analytic continuation genuinely poles (only the extreme negative Laguerre
/// order k = -2n does, with a finite two-sided limit).
ExactReal lse_exact(long k, const HalfInt& n, const HalfInt& b);
ExactReal jse_exact(long k, const HalfInt& n, const HalfInt& a, const HalfInt& b);
ExactReal gse_exact(long two_k, const HalfInt& n);

MomentResult lse_moment(long k, const HalfInt& n, const HalfInt& b);
MomentResult jse_moment(long k, const HalfInt& n, const HalfInt& a, const HalfInt& b);
MomentResult gse_moment(long order, const HalfInt& n);

/// LSE moment at real non-integer order (quad-precision path).
MomentResult lse_moment_real(double k, const HalfInt& n, const HalfInt& b);

}  // namespace rmt
