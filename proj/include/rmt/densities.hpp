#pragma once
// Semi-analytic eigenvalue densities: beta=2 through the two-polynomial
// Christoffel-Darboux form, beta=4 and beta=1 through the skew-orthogonal
// representations (correction sums over the beta=2 monic system plus, for
// beta=1, an eps-transform term computed by quadrature). Moments of x^k
// against these densities form the deterministic oracle.
//
// beta=4 models live in the tilde normalization (weights x^(2b+1) e^-x etc.);
// quad_public_moment applies the substitutions that map them onto the public
// ensemble convention.

#include <functional>

#include "rmt/ensemble.hpp"

namespace rmt {

struct DensityModel {
    Family family = Family::Gaussian;
    int beta = 2;
    long n = 1;
    double lo = 0, hi = 0;  // integration window (tails already cut)
    enum class Sub { None, Sqrt, Sin2 } sub = Sub::None;
    std::function<double(double)> rho;
};

/// beta = 2 density via w2 (P_n' P_{n-1} - P_n P_{n-1}')/h_{n-1}.
DensityModel density_beta2(Family family, const HalfInt& a, const HalfInt& b, long n);

/// Same density through the n-term sum w2 sum_j P_j^2/h_j (cross-check form).
DensityModel density_beta2_sumform(Family family, const HalfInt& a, const HalfInt& b, long n);

/// Tilde beta = 4 density for the public parameters (a, b); internally uses
/// the doubled weight parameters.
DensityModel density_beta4(Family family, const HalfInt& a_pub, const HalfInt& b_pub, long n);

/// beta = 1 density (public convention), n even.
DensityModel density_beta1(Family family, const HalfInt& a, const HalfInt& b, long n);

/// Adaptive moment of x^k against the model (absolute tolerance).
HighPrecisionFloat quad_moment(const DensityModel& model, double k, double abs_tol = 1e-11);

/// Moment in the public ensemble convention, with the beta = 4 powers of two
/// applied. Throws QuadratureFailure if the tolerance cannot be met.
double quad_public_moment(const EnsembleSpec& e, double k, double abs_tol = 1e-11);

}  // namespace rmt
