#include <doctest.h>

#include <cmath>

#include "rmt/mom_unitary.hpp"

using namespace rmt;

// n = 1 collapses every beta = 2 moment to a one-dimensional Gamma/Beta
// integral; these ratios are the independent oracle for the engines here.
namespace {
ExactReal lue_n1_oracle(long k, long b) {
    // int x^{k+b} e^-x / int x^b e^-x = (b+1)_(k)
    return poch(Rational(b + 1), k);
}
ExactReal jue_n1_oracle(long k, const Rational& a, const Rational& b) {
    // Beta-integral ratio: (b+1)_(k) / (a+b+2)_(k)
    return poch(b + 1, k) / poch(a + b + 2, k);
}
ExactReal gue_n1_oracle(long k) {
    // int x^{2k} e^-x^2 / int e^-x^2 = (1/2)_(k)
    return poch(Rational(1, 2), k);
}
}  // namespace

TEST_CASE("LUE moments at n = 1 match the Gamma-integral oracle") {
    for (long b : {0L, 1L, 3L})
        for (long k = -b; k <= 6; ++k) {
            if (k <= -(b + 1)) continue;
            MomentResult m = lue_moment(k, 1, b);
            REQUIRE(m.convergent);
            CHECK(m.exact_value() == lue_n1_oracle(k, b));
        }
}

TEST_CASE("LUE spec examples") {
    CHECK(lue_moment(0, 5, 2).exact_value() == ExactReal(5));
    CHECK(lue_moment(1, 2, 0).exact_value() == ExactReal(4));  // n(n+b)
    CHECK(lue_moment(-1, 1, 2).exact_value() == ExactReal(Rational(1, 2)));
    CHECK_FALSE(lue_moment(-1, 2, 0).convergent);
    CHECK_FALSE(lue_moment(-3, 2, 0).convergent);
    // exactness: all values rational
    CHECK(lue_moment(5, 6, 2).exact_value().pi_half_exp() == 0);
}

TEST_CASE("LUE negative orders against the truncated corollary form") {
    // The corollary sum over j = 0..n-1 with Narayana-style binomials must
    // agree with the general formula route.
    for (long n : {2L, 3L, 5L})
        for (long b : {3L, 5L})
            for (long kk = 1; kk <= std::min(b, n); ++kk) {
                ExactReal direct;
                for (long j = 0; j <= n - 1; ++j) {
                    direct += binom_gen(Rational(kk + j), kk - 1) *
                              binom_gen(Rational(kk + j - 1), kk - 1) *
                              poch(Rational(b + n), -kk - j) / poch(Rational(n + 1), -j - 1);
                }
                direct = direct / ExactReal(kk);
                CHECK(lue_moment(-kk, n, b).exact_value() == direct);
            }
}

TEST_CASE("LUE real-order path agrees with the exact path and the oracle") {
    MomentResult exact2 = lue_moment(2, 3, 1);
    MomentResult real2 = lue_moment_real(2.0, 3, 1);
    REQUIRE(real2.convergent);
    double want = exact2.exact_value().to_double();
    double got = std::get<HighPrecisionFloat>(*real2.value).value_d();
    CHECK(got == doctest::Approx(want).epsilon(1e-25));

    // k = 1/2, n = 1, b = 0: moment is Gamma(3/2) = sqrt(pi)/2
    MomentResult mh = lue_moment_real(0.5, 1, 0);
    double gh = std::get<HighPrecisionFloat>(*mh.value).value_d();
    CHECK(gh == doctest::Approx(std::sqrt(M_PI) / 2).epsilon(1e-14));

    CHECK_FALSE(lue_moment_real(-1.2, 2, 0).convergent);
}

TEST_CASE("JUE moments at n = 1 match the Beta-integral oracle") {
    for (Rational a : {Rational(0), Rational(2), Rational(1, 2)})
        for (Rational b : {Rational(0), Rational(1), Rational(3, 2)})
            for (long k = 0; k <= 6; ++k) {
                MomentResult m = jue_moment(k, 1, HalfInt::from_rational(a),
                                            HalfInt::from_rational(b));
                CHECK(m.exact_value() == jue_n1_oracle(k, a, b));
            }
}

TEST_CASE("JUE telescoped differences") {
    // a=b=0, n=1: uniform density, <x> - <x^2> = 1/2 - 1/3
    CHECK(jue_moment_diff(1, 1, 0, 0) == ExactReal(Rational(1, 6)));
    CHECK(jue_moment(1, 2, 1, 2).exact_value() == ExactReal(Rational(8, 7)));
    CHECK(jue_moment(0, 4, 1, 1).exact_value() == ExactReal(4));
    // positivity and monotonicity: x^k >= x^{k+1} on [0,1]
    for (long a : {0L, 2L})
        for (long b : {0L, 1L})
            for (long n : {1L, 3L})
                for (long k = 1; k <= 6; ++k) {
                    ExactReal d = jue_moment_diff(k, n, a, b);
                    CHECK(d.rat() > 0);
                    CHECK(jue_moment(k, n, a, b).exact_value().rat() > 0);
                }
}

TEST_CASE("GUE moments: branches, zeros, oracle") {
    CHECK(gue_moment(0, 7).exact_value() == ExactReal(7));
    CHECK(gue_moment(2, 1).exact_value() == ExactReal(Rational(1, 2)));
    CHECK(gue_moment(2, 2).exact_value() == ExactReal(2));
    for (long n : {1L, 2L, 5L})
        for (long k : {1L, 3L, 7L}) CHECK(gue_moment(k, n).exact_value().is_zero());
    for (long k = 0; k <= 6; ++k) CHECK(gue_moment(2 * k, 1).exact_value() == gue_n1_oracle(k));
    // even/odd n branches both rational
    CHECK(gue_moment(6, 4).exact_value().pi_half_exp() == 0);
    CHECK(gue_moment(6, 5).exact_value().pi_half_exp() == 0);
}

TEST_CASE("moment of order zero is the dimension") {
    CHECK(lue_sum_exact(0, 9, 2) == ExactReal(9));
    CHECK(jue_sum_exact(0, 9, 1, 1) == ExactReal(9));
    CHECK(gue_sum_exact(0, 9) == ExactReal(9));
}
