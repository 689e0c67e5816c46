#pragma once
// Physical quantities built on the moment engines: transmission-eigenvalue
// moments of a chaotic cavity (Jacobi), proper-delay-time moments (negative
// Laguerre), charge cumulants from the counting generating function, and the
// large-n limit values used for convergence checks.

#include <vector>

#include "rmt/ensemble.hpp"

namespace rmt {

struct TransportQuery {
    int beta = 2;
    HalfInt delta;  // 0 for the Dyson ensembles; Andreev deformation otherwise
    long m = 1, n = 1;  // channel counts, m >= n
    long k = 1;
};

struct DelayQuery {
    int beta = 2;
    long n = 1;
    long k = 1;  // moment of Q^k, requires k < n beta/2 + 1
};

/// Jacobi parameter map a = (2/beta)(1 + delta/2) - 1, b = m - n.
HalfInt transport_param_a(int beta, const HalfInt& delta);

MomentResult transmission_moment(const TransportQuery& q);
MomentResult delay_moment(const DelayQuery& q);

/// Quad-precision route for the beta=2 delay formula at large n.
HighPrecisionFloat delay_moment_unitary_f128(long k, long n);

/// Charge cumulants kappa_1..kappa_order by exact formal composition of the
/// generating function with the transmission moments.
std::vector<ExactReal> charge_cumulants(const TransportQuery& q, int order);

/// Closed forms for the variance and the skewness ratio, for cross-checks.
ExactReal kappa2_closed(const TransportQuery& q);
ExactReal kappa3_over_kappa2_closed(const TransportQuery& q);

/// Numerator and denominator of the displayed skewness ratio; the display
/// degenerates to 0/0 at m = n with (2+delta)/beta = 1, so identity checks
/// cross-multiply instead of dividing.
std::pair<ExactReal, ExactReal> kappa3_ratio_parts(const TransportQuery& q);

/// Catalan limit of <T_k>/n at channel ratio m/n.
ExactReal limit_catalan(long k, const Rational& m_over_n);

/// The printed Schroeder-number limit sum for the delay moments; note it
/// evaluates to the sequence 2, 6, 22, ... at k = 1, 2, 3 while the exact
/// finite-n delay moments converge to 1, 2, 6, ... (offset of one).
ExactReal schroeder_series(long k);

/// Generic dispatcher over family/beta/order, including the quad-precision
/// route for real orders and the density-quadrature fallback where the
/// exact beta=4 assembly poles.
MomentResult compute_moment(const MomentQuery& q);

}  // namespace rmt
