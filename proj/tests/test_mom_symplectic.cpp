#include <doctest.h>

#include <cmath>

#include "rmt/mom_symplectic.hpp"

using namespace rmt;

// n = 1 reduces every beta = 4 moment to one eigenvalue under the public
// weights x^(2b+1) e^(-2x), x^(2b+1)(1-x)^(2a+1), e^(-2x^2): Gamma/Beta
// ratios again, the independent oracle here.
namespace {
ExactReal lse_n1_oracle(long k, const Rational& b) {
    return poch(2 * b + 2, k) * ExactReal::pow2(-k);
}
ExactReal jse_n1_oracle(long k, const Rational& a, const Rational& b) {
    return poch(2 * b + 2, k) / poch(2 * a + 2 * b + 4, k);
}
ExactReal gse_n1_oracle(long k) {
    return poch(Rational(1, 2), k) * ExactReal::pow2(-k);
}
}  // namespace

TEST_CASE("correction sums vanish identically for k in {0,1}") {
    for (const HalfInt& n : {HalfInt(1), HalfInt(3), HalfInt::from_twice(5)}) {
        CHECK(s_jacobi(1, n, 0, 0).value.is_zero());
        CHECK(s_jacobi(1, n, 0, 0).i_j_terms == 0);
        CHECK(s_laguerre(1, n, 1).value.is_zero());
        CHECK(s_gauss(0, n).value.is_zero());
    }
}

TEST_CASE("LSE moments at n = 1 match the one-eigenvalue oracle") {
    for (Rational b : {Rational(0), Rational(2), Rational(1, 2), Rational(3, 2)}) {
        HalfInt bh = HalfInt::from_rational(b);
        for (long k = 1; k <= 4; ++k)
            CHECK(lse_moment(k, 1, bh).exact_value() == lse_n1_oracle(k, b));
        // k = -1 converges for every tested b (bound k > -(2b+2)); the
        // k = -2n edge poles in the exact assembly and is covered below.
        CHECK(lse_moment(-1, 1, bh).exact_value() == lse_n1_oracle(-1, b));
    }
    CHECK(lse_moment(1, 1, 2).exact_value() == ExactReal(3));  // (2b+2)/2
    CHECK(lse_moment(-1, 1, 2).exact_value() == ExactReal(Rational(2, 5)));
}

TEST_CASE("JSE moments at n = 1 match the Beta oracle, including delta = 0") {
    for (Rational a : {Rational(0), Rational(1), Rational(-1, 2)})  // -1/2 = Dyson beta=4
        for (Rational b : {Rational(0), Rational(2)})
            for (long k = 1; k <= 4; ++k) {
                HalfInt ah = HalfInt::from_rational(a), bh = HalfInt::from_rational(b);
                CHECK(jse_moment(k, 1, ah, bh).exact_value() == jse_n1_oracle(k, a, b));
            }
}

TEST_CASE("GSE moments: oracle at n = 1, zeros, exactness") {
    for (long k = 0; k <= 5; ++k)
        CHECK(gse_moment(2 * k, 1).exact_value() == gse_n1_oracle(k));
    CHECK(gse_moment(3, 2).exact_value().is_zero());
    CHECK(gse_moment(4, 3).exact_value().pi_half_exp() == 0);
    // single-term correction: S_G(2,1) = 1/4
    CHECK(s_gauss(2, 1).value == ExactReal(Rational(1, 4)));
    CHECK(s_gauss(2, 1).i_j_terms == 1);
}

TEST_CASE("half-integer n evaluations are finite and exact") {
    HalfInt n32 = HalfInt::from_twice(3);  // 3/2
    SymplecticCorrection s = s_jacobi(3, n32, 0, 0);
    CHECK(s.value.pi_half_exp() == 0);
    CHECK(lse_exact(2, n32, 1).pi_half_exp() == 0);
    CHECK(gse_exact(4, n32).pi_half_exp() == 0);
}

TEST_CASE("divergence gates") {
    CHECK_FALSE(lse_moment(-2, 1, 0).convergent);   // k <= -(2b+2)
    CHECK_FALSE(lse_moment(-5, 1, HalfInt::from_twice(3)).convergent);
    CHECK(lse_moment(0, 3, 1).exact_value() == ExactReal(3));
}

TEST_CASE("the k = -2n edge of the assembly poles (finite limit elsewhere)") {
    // b = n - 1/2 (delay parameters): the two pieces cancel a Gamma pole.
    CHECK_THROWS_AS(lse_exact(-2, 1, HalfInt::from_twice(1)), PoleError);
    // one step away from the edge is exact: (2b+2)_(-1) 2^1 = 1 at b = 1/2
    CHECK(lse_exact(-1, 1, HalfInt::from_twice(1)) == ExactReal(1));
}

TEST_CASE("real-order path against exact and lgamma references") {
    HighPrecisionFloat v = std::get<HighPrecisionFloat>(*lse_moment_real(2.0, 2, 1).value);
    CHECK(v.value_d() ==
          doctest::Approx(lse_moment(2, 2, 1).exact_value().to_double()).epsilon(1e-25));

    // n = 1, real k: (2b+2)_(k) 2^-k via lgamma
    double k = -1.5, b = 2;
    HighPrecisionFloat w = std::get<HighPrecisionFloat>(*lse_moment_real(k, 1, 2).value);
    double want = std::exp(std::lgamma(2 * b + 2 + k) - std::lgamma(2 * b + 2) - k * std::log(2));
    CHECK(w.value_d() == doctest::Approx(want).epsilon(1e-12));
}
