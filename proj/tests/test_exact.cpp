#include <doctest.h>

#include <quadmath.h>

#include <random>

#include "rmt/exact.hpp"

using namespace rmt;

TEST_CASE("pochhammer finite products") {
    CHECK(poch(Rational(3), 2) == ExactReal(12));
    CHECK(poch(Rational(5), -2) == ExactReal(Rational(1, 12)));
    ExactReal half = poch(Rational(1, 2), 1);
    CHECK(half == ExactReal(Rational(1, 2)));
    CHECK(half.pi_half_exp() == 0);
    CHECK(poch(Rational(0), 3).is_zero());  // zero factor in the numerator product
    CHECK_THROWS_AS(poch(Rational(2), -3), PoleError);
}

TEST_CASE("generalized binomial with the Gamma-pole convention") {
    CHECK(binom_gen(Rational(3), 1) == ExactReal(3));
    CHECK(binom_gen(Rational(-2), 3) == ExactReal(-4));
    CHECK(binom_gen(Rational(1), 2).is_zero());
    CHECK(binom_gen(Rational(4), -1).is_zero());
    CHECK(binom_gen(Rational(1, 2), 2) == ExactReal(Rational(-1, 8)));
}

TEST_CASE("gamma at integers and half-integers") {
    CHECK(gamma_half(HalfInt(4)) == ExactReal(6));
    ExactReal g_half = gamma_half(HalfInt::from_twice(1));
    CHECK(g_half.rat() == Rational(1));
    CHECK(g_half.pi_half_exp() == 1);
    ExactReal g52 = gamma_half(HalfInt::from_twice(5));
    CHECK(g52.rat() == Rational(3, 4));
    CHECK(g52.pi_half_exp() == 1);
    // negative half-integers are regular points
    ExactReal gm12 = gamma_half(HalfInt::from_twice(-1));
    CHECK(gm12.rat() == Rational(-2));
    CHECK_THROWS_AS(gamma_half(HalfInt(0)), PoleError);
    CHECK_THROWS_AS(gamma_half(HalfInt(-3)), PoleError);
    CHECK(recip_gamma(HalfInt(-3)).is_zero());
}

TEST_CASE("to_float accuracy contract") {
    HighPrecisionFloat third = to_float(ExactReal(Rational(1, 3)), 15);
    CHECK(fabsq(third.value - 1.0Q / 3.0Q) < 1e-30Q);
    CHECK(third.error_d() == doctest::Approx(1e-15).epsilon(0.01));

    HighPrecisionFloat sp = to_float(ExactReal::sqrt_pi(), 15);
    CHECK(fabsq(sp.value - sqrtq(M_PIq)) < 1e-30Q);
    CHECK(sp.error_d() == doctest::Approx(1e-14).epsilon(0.01));

    HighPrecisionFloat zero = to_float(ExactReal(0), 15);
    CHECK(zero.value_d() == 0.0);
    CHECK(zero.error_d() == 0.0);

    CHECK_THROWS_AS(to_float(ExactReal(1), 10), std::invalid_argument);

    // 33-digit request on a value with huge numerator/denominator
    ExactReal big = factorial(500) / factorial(499);  // = 500
    HighPrecisionFloat b = to_float(big, 33);
    CHECK(fabsq(b.value - 500.0Q) < 1e-28Q);
}

TEST_CASE("pochhammer recurrence property, randomized") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> num(-10, 10), den(1, 2), off(-5, 6);
    int checked = 0;
    for (int t = 0; t < 1000; ++t) {
        Rational x(num(rng), den(rng));
        x.canonicalize();
        long m = off(rng);
        try {
            ExactReal lhs = poch(x, m + 1);
            ExactReal rhs = poch(x, m) * ExactReal(x + m);
            CHECK(lhs == rhs);
            ++checked;
        } catch (const PoleError&) {
        }
    }
    CHECK(checked > 500);
}

TEST_CASE("binomial equals shifted pochhammer over factorial") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<long> num(-8, 8), den(1, 2), jd(0, 7);
    for (int t = 0; t < 400; ++t) {
        Rational k(num(rng), den(rng));
        k.canonicalize();
        long j = jd(rng);
        CHECK(binom_gen(k, j) == poch(k - j + 1, j) / factorial(j));
    }
}

TEST_CASE("gamma functional equation at half-integers") {
    for (long t = -7; t <= 9; ++t) {
        HalfInt x = HalfInt::from_twice(t);
        if (x.is_integer() && x.integer() <= 0) continue;
        ExactReal lhs = gamma_half(x + 1);
        CHECK(lhs == ExactReal(x.to_rational()) * gamma_half(x));
    }
}

TEST_CASE("float round trip respects products") {
    std::mt19937_64 rng(44);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 30), pi(-2, 2);
    for (int t = 0; t < 300; ++t) {
        long na = num(rng), nb = num(rng);
        if (na == 0 || nb == 0) continue;
        ExactReal a(make_rational(na, den(rng)), pi(rng));
        ExactReal b(make_rational(nb, den(rng)), pi(rng));
        HighPrecisionFloat fa = to_float(a, 20), fb = to_float(b, 20);
        HighPrecisionFloat fab = to_float(a * b, 20);
        float128 diff = fabsq(fab.value - fa.value * fb.value);
        CHECK(static_cast<double>(diff) <=
              static_cast<double>(fab.error + fabsq(fa.value) * fb.error +
                                  fabsq(fb.value) * fa.error + fa.error * fb.error));
    }
}

TEST_CASE("exact real addition guards pi powers") {
    ExactReal a(Rational(1), 1), b(Rational(2), 0);
    CHECK_THROWS_AS(a + b, std::logic_error);
    CHECK((a + ExactReal(0)) == a);
    CHECK(ExactReal::pow2(-3) == ExactReal(Rational(1, 8)));
}

TEST_CASE("half integer parsing and arithmetic") {
    HalfInt h = HalfInt::from_rational(parse_rational("3/2"));
    CHECK(h.twice() == 3);
    CHECK(!h.is_integer());
    CHECK(h.floor() == 1);
    CHECK((h + HalfInt(1)).twice() == 5);
    CHECK_THROWS(HalfInt::from_rational(parse_rational("1/4")));
    CHECK(parse_rational("-1.5") == Rational(-3, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(rational_str(Rational(-22, 7)) == "-22/7");
}
