#pragma once
// beta = 1 moments, n even: LOE/JOE through the beta=1 <-> beta=4 duality
// (the O-integrals equal twice the symplectic correction at half-integer
// size) plus the incomplete-integral terms I and phi; GOE assembled from
// its own O and phi sums.

#include "rmt/ensemble.hpp"

namespace rmt {

struct IncompleteTerm {
    ExactReal i_value;    // full I contribution, main sum plus phi
    ExactReal phi_value;  // the phi part alone
    bool phi_vanishes = false;
};

/// Laguerre incomplete integral I_L(k, n) for order +k or -k (k >= 1).
IncompleteTerm i_laguerre(long k, long n, const HalfInt& b, bool negative_order);

/// Jacobi incomplete integral I_J(k, n), positive integer order.
IncompleteTerm i_jacobi(long k, long n, const HalfInt& a, const HalfInt& b);

MomentResult loe_moment(long k, long n, const HalfInt& b);
MomentResult joe_moment(long k, long n, const HalfInt& a, const HalfInt& b);

/// GOE O-sum and incomplete term for even order two_k, even n.
ExactReal goe_O(long two_k, long n);
ExactReal goe_phi(long two_k, long n);

MomentResult goe_moment(long order, long n);

}  // namespace rmt
