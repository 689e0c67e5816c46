#pragma once
// Monic classical orthogonal polynomials (Hermite, Laguerre on [0,inf),
// Jacobi on [0,1] with weight x^b (1-x)^a): three-term recurrence, exact
// norms, connection coefficients across weight shifts, and the
// skew-orthogonal coefficient tables used by the beta=1,4 densities.

#include <vector>

#include "rmt/ensemble.hpp"

namespace rmt {

class OrthoPolySystem {
  public:
    OrthoPolySystem(Family family, HalfInt a, HalfInt b, int max_degree);

    static OrthoPolySystem hermite(int max_degree) {
        return {Family::Gaussian, 0, 0, max_degree};
    }
    static OrthoPolySystem laguerre(HalfInt b, int max_degree) {
        return {Family::Laguerre, 0, std::move(b), max_degree};
    }
    static OrthoPolySystem jacobi(HalfInt a, HalfInt b, int max_degree) {
        return {Family::Jacobi, std::move(a), std::move(b), max_degree};
    }

    Family family() const { return family_; }
    const HalfInt& a() const { return a_; }
    const HalfInt& b() const { return b_; }
    int max_degree() const { return max_degree_; }

    /// Monic recurrence P_{j+1} = (x - mean_j) P_j - ratio_j P_{j-1}.
    const Rational& recur_mean(int j) const { return mean_.at(j); }
    const Rational& recur_ratio(int j) const { return ratio_.at(j); }

    double eval(int degree, double x) const;
    double eval_deriv(int degree, double x) const;
    /// Fills values[0..degree] with P_0(x)..P_degree(x).
    void eval_all(int degree, double x, double* values) const;

    /// Exact monomial coefficients of the monic polynomial (degree+1 entries).
    std::vector<Rational> power_coeffs(int degree) const;

  private:
    Family family_;
    HalfInt a_, b_;
    int max_degree_;
    std::vector<Rational> mean_, ratio_;  // exact, built eagerly
    std::vector<double> mean_d_, ratio_d_;
};

/// Orthogonality norm h_j of the monic polynomial of degree j.
ExactReal norm_h(Family family, const HalfInt& a, const HalfInt& b, long j);
inline ExactReal norm_h(const OrthoPolySystem& sys, long j) {
    return norm_h(sys.family(), sys.a(), sys.b(), j);
}

/// Constant D_n of the differential identity d/dx(f rho_2) = -D_n w_2 P_n P_{n-1};
/// equals 2 gamma_{n-1} for all three families.
ExactReal diff_identity_const(Family family, const HalfInt& a, const HalfInt& b, long n);

// ---------------------------------------------------------------------------
// Connection coefficients: monic P_n for weight parameter b expanded in the
// monic basis for b+k, P_n^{(b)} = sum_j C_j P_{n-j}^{(b+k)}, C_0 = 1.

std::vector<ExactReal> connect_laguerre(const HalfInt& k, long n);
std::vector<ExactReal> connect_jacobi(const HalfInt& k, long n, const HalfInt& a,
                                      const HalfInt& b);

/// Definitional route: exact triangular solve of the basis-expansion
/// identity. Validates the closed forms above; works for any half-integer k.
std::vector<ExactReal> connect_by_identity(Family family, const HalfInt& a, const HalfInt& b,
                                           const HalfInt& k, long n);

// ---------------------------------------------------------------------------
// Skew-orthogonal coefficient tables.
//
// gamma_n is the constant with h_n gamma_n = 1, 1/2, (2n+a+b+2)/2 for
// Hermite, Laguerre, Jacobi; c_n = h_{n+1} h_n gamma_n. The e/eta families
// are defined by products of the c_j and evaluated in closed form so that
// half-integer indices (needed by the beta=1 duality) are covered.

ExactReal skew_gamma(Family family, const HalfInt& a, const HalfInt& b, long n);
ExactReal skew_c(Family family, const HalfInt& a, const HalfInt& b, long n);

ExactReal skew_e1(Family family, const HalfInt& a, const HalfInt& b, const HalfInt& j,
                  const HalfInt& n);
ExactReal skew_e4(Family family, const HalfInt& a, const HalfInt& b, const HalfInt& j,
                  const HalfInt& n);
ExactReal skew_eta1(Family family, const HalfInt& a, const HalfInt& b, const HalfInt& n);

/// Same quantities from the defining products (integer indices only);
/// the test oracle for the closed forms.
ExactReal skew_e1_product(Family family, const HalfInt& a, const HalfInt& b, long j, long n);
ExactReal skew_e4_product(Family family, const HalfInt& a, const HalfInt& b, long j, long n);
ExactReal skew_eta1_product(Family family, const HalfInt& a, const HalfInt& b, long n);

struct SkewCoefficients {
    ExactReal c_j;
    ExactReal gamma_j;
    ExactReal e1;
    ExactReal e4;
    ExactReal eta1;
};

SkewCoefficients skew_coeffs(Family family, const HalfInt& a, const HalfInt& b, long j, long n);

}  // namespace rmt
