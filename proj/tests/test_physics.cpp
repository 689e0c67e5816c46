#include <doctest.h>

#include <cmath>

#include "rmt/oracle.hpp"
#include "rmt/physics.hpp"

using namespace rmt;

TEST_CASE("parameter map a = (2/beta)(1+delta/2) - 1") {
    CHECK(transport_param_a(2, HalfInt(0)) == HalfInt(0));
    CHECK(transport_param_a(2, HalfInt(1)) == HalfInt::from_twice(1));
    CHECK(transport_param_a(4, HalfInt(2)) == HalfInt(0));
    CHECK(transport_param_a(4, HalfInt(0)) == HalfInt::from_twice(-1));
    CHECK(transport_param_a(1, HalfInt(-1)) == HalfInt(0));
    CHECK_THROWS_AS(transport_param_a(4, HalfInt(1)), InvalidParameter);  // quarter
}

TEST_CASE("transmission moments: known values") {
    for (long n = 1; n <= 5; ++n)
        for (long m = n; m <= n + 3; ++m) {
            TransportQuery q{2, HalfInt(0), m, n, 1};
            CHECK(transmission_moment(q).exact_value() ==
                  ExactReal(make_rational(BigInt(n * m), BigInt(n + m))));
        }
    TransportQuery q2{2, HalfInt(0), 1, 1, 2};
    CHECK(transmission_moment(q2).exact_value() == ExactReal(Rational(1, 3)));
    // beta = 1 against the brute-force jpdf oracle
    TransportQuery q1{1, HalfInt(0), 2, 2, 1};
    double brute = bruteforce_jpdf_moment(EnsembleSpec::jacobi(1, 2, 1, 0), 1.0, 1e-9);
    CHECK(transmission_moment(q1).exact_value().to_double() ==
          doctest::Approx(brute).epsilon(1e-8));
    // beta = 4 against brute force, delta = 2 (Andreev class) and delta = 0
    for (long delta : {0L, 2L}) {
        TransportQuery q4{4, HalfInt(delta), 3, 2, 2};
        HalfInt a = transport_param_a(4, HalfInt(delta));
        double b4 = bruteforce_jpdf_moment(EnsembleSpec::jacobi(4, 2, a, 1), 2.0, 1e-9);
        CHECK(transmission_moment(q4).exact_value().to_double() ==
              doctest::Approx(b4).epsilon(1e-8));
    }
    CHECK_THROWS_AS(transmission_moment({1, HalfInt(0), 3, 3, 1}), OddDimension);
    CHECK_THROWS_AS(transmission_moment({2, HalfInt(0), 1, 2, 1}), InvalidParameter);  // m < n
}

TEST_CASE("unitarity bound 0 < <T_k> <= <T_1> <= n") {
    for (int beta : {1, 2, 4})
        for (long k = 1; k <= 4; ++k) {
            TransportQuery q{beta, HalfInt(0), 4, 2, k};
            Rational tk = transmission_moment(q).exact_value().as_rational();
            Rational t1 =
                transmission_moment({beta, HalfInt(0), 4, 2, 1}).exact_value().as_rational();
            CHECK(tk > 0);
            CHECK(tk <= t1);
            CHECK(t1 <= 2);
        }
}

TEST_CASE("delay moments") {
    for (long n = 1; n <= 10; ++n) CHECK(delay_moment({2, n, 1}).exact_value() == ExactReal(1));
    // beta = 2, k = 2, n = 2: n^(k-1) M(-2, 2) with b = 2, against brute force
    double brute = 2 * bruteforce_jpdf_moment(EnsembleSpec::laguerre(2, 2, 2), -2.0, 1e-9);
    CHECK(delay_moment({2, 2, 2}).exact_value().to_double() == doctest::Approx(brute).epsilon(1e-8));
    // divergence bound k < n beta/2 + 1
    CHECK_FALSE(delay_moment({2, 2, 3}).convergent);
    CHECK_FALSE(delay_moment({1, 4, 3}).convergent);
    CHECK_FALSE(delay_moment({4, 1, 3}).convergent);
    // beta = 4 top order k = 2n runs through the density fallback
    MomentResult edge = delay_moment({4, 1, 2});
    REQUIRE(edge.convergent);
    CHECK(std::get<HighPrecisionFloat>(*edge.value).value_d() == doctest::Approx(2.0).epsilon(1e-7));
    // beta = 1 delay, n even
    CHECK(delay_moment({1, 2, 1}).exact_value() == ExactReal(1));
    CHECK(delay_moment({1, 4, 2}).exact_value().pi_half_exp() == 0);
    CHECK_THROWS_AS(delay_moment({1, 3, 1}), OddDimension);
}

TEST_CASE("delay quad-precision route matches the exact route") {
    for (long n : {5L, 40L})
        for (long k = 1; k <= std::min(n, 4L); ++k) {
            double exact = delay_moment({2, n, k}).exact_value().to_double();
            CHECK(delay_moment_unitary_f128(k, n).value_d() ==
                  doctest::Approx(exact).epsilon(1e-20));
        }
}

TEST_CASE("charge cumulants") {
    TransportQuery q{2, HalfInt(0), 1, 1, 1};
    auto kappa = charge_cumulants(q, 3);
    CHECK(kappa[0] == transmission_moment(q).exact_value());
    CHECK(kappa[1] == ExactReal(Rational(1, 6)));
    CHECK(kappa[1] == kappa2_closed(q));
    // kappa2 = <T1> - <T2>, kappa3 = <T1> - 3<T2> + 2<T3>
    TransportQuery q2{4, HalfInt(2), 3, 2, 1};
    auto kk = charge_cumulants(q2, 3);
    ExactReal t1 = transmission_moment({4, HalfInt(2), 3, 2, 1}).exact_value();
    ExactReal t2 = transmission_moment({4, HalfInt(2), 3, 2, 2}).exact_value();
    ExactReal t3 = transmission_moment({4, HalfInt(2), 3, 2, 3}).exact_value();
    CHECK(kk[1] == t1 - t2);
    CHECK(kk[2] == t1 - ExactReal(3) * t2 + ExactReal(2) * t3);
    CHECK(kk[1] == kappa2_closed(q2));
    auto [num, den] = kappa3_ratio_parts(q2);
    CHECK(kk[2] * den == kk[1] * num);
}

TEST_CASE("limit formulas") {
    CHECK(limit_catalan(1, Rational(1)) == ExactReal(Rational(1, 2)));
    CHECK(schroeder_series(1) == ExactReal(2));
    CHECK(schroeder_series(2) == ExactReal(6));
    CHECK(schroeder_series(3) == ExactReal(22));
    // catalan limit at asymmetric ratio: k=1 collapses to (m/n)/(1+m/n)
    CHECK(limit_catalan(1, Rational(3)) == ExactReal(Rational(3, 4)));
}

TEST_CASE("generic dispatcher routes and validation") {
    MomentQuery gq{EnsembleSpec::gaussian(2, 3), 3L};
    CHECK(compute_moment(gq).exact_value().is_zero());
    MomentQuery rq{EnsembleSpec::laguerre(2, 2, 1), 1.5};
    CHECK(compute_moment(rq).convergent);
    CHECK_THROWS_AS(compute_moment({EnsembleSpec::jacobi(2, 2, 0, 0), -1L}), InvalidParameter);
    CHECK_THROWS_AS(compute_moment({EnsembleSpec::jacobi(3, 2, 0, 0), 1L}), InvalidParameter);
    CHECK_THROWS_AS(compute_moment({EnsembleSpec::laguerre(1, 2, HalfInt::from_twice(1)), 1L}),
                    InvalidParameter);  // half-integer b at beta = 1
}
