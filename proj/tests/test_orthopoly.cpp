#include <doctest.h>

#include <random>

#include "rmt/orthopoly.hpp"

using namespace rmt;

TEST_CASE("monic evaluation basics") {
    OrthoPolySystem herm = OrthoPolySystem::hermite(6);
    CHECK(herm.eval(0, 1.7) == 1.0);
    CHECK(herm.eval(2, 0.5) == doctest::Approx(0.25 - 0.5).epsilon(1e-14));  // x^2 - 1/2

    OrthoPolySystem lag = OrthoPolySystem::laguerre(0, 6);
    CHECK(lag.eval(1, 3.0) == doctest::Approx(2.0));  // x - (b+1)

    OrthoPolySystem jac = OrthoPolySystem::jacobi(0, 0, 6);
    CHECK(jac.eval(1, 0.5) == doctest::Approx(0.0));  // root at the midpoint
}

TEST_CASE("recurrence reproduces the exact monomial expansion") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unif(-2.0, 2.0);
    for (Family fam : {Family::Gaussian, Family::Laguerre, Family::Jacobi}) {
        OrthoPolySystem sys(fam, 1, HalfInt::from_twice(3), 7);
        for (int deg = 0; deg <= 7; ++deg) {
            auto coeffs = sys.power_coeffs(deg);
            CHECK(coeffs.back() == Rational(1));  // monic
            double x = fam == Family::Jacobi ? 0.37 : unif(rng);
            double direct = 0, xp = 1;
            for (const auto& c : coeffs) {
                direct += c.get_d() * xp;
                xp *= x;
            }
            CHECK(sys.eval(deg, x) == doctest::Approx(direct).epsilon(1e-12));
        }
    }
}

TEST_CASE("norms match the tabulated closed forms") {
    ExactReal h0 = norm_h(Family::Gaussian, 0, 0, 0);
    CHECK(h0.rat() == Rational(1));
    CHECK(h0.pi_half_exp() == 1);  // sqrt(pi)
    CHECK(norm_h(Family::Laguerre, 0, 0, 0) == ExactReal(1));
    CHECK(norm_h(Family::Jacobi, 0, 0, 0) == ExactReal(1));
    // Hermite h_j = j! 2^-j sqrt(pi)
    ExactReal h3 = norm_h(Family::Gaussian, 0, 0, 3);
    CHECK(h3.rat() == Rational(6, 8));
    CHECK(h3.pi_half_exp() == 1);
}

TEST_CASE("laguerre connection coefficients") {
    auto c12 = connect_laguerre(1, 2);
    REQUIRE(c12.size() == 3);
    CHECK(c12[0] == ExactReal(1));
    CHECK(c12[1] == ExactReal(2));
    CHECK(c12[2].is_zero());

    auto c0 = connect_laguerre(0, 4);
    CHECK(c0[0] == ExactReal(1));
    for (size_t j = 1; j < c0.size(); ++j) CHECK(c0[j].is_zero());

    auto c21 = connect_laguerre(2, 1);
    CHECK(c21[0] == ExactReal(1));
    CHECK(c21[1] == ExactReal(2));
}

TEST_CASE("jacobi connection coefficients against the identity") {
    auto c0 = connect_jacobi(0, 3, 0, 0);
    CHECK(c0[0] == ExactReal(1));
    for (size_t j = 1; j < c0.size(); ++j) CHECK(c0[j].is_zero());

    // k=1, n=1, a=b=0: P1^{0,0} = P1^{0,1} + 1/6
    auto c11 = connect_jacobi(1, 1, 0, 0);
    CHECK(c11[0] == ExactReal(1));
    CHECK(c11[1] == ExactReal(Rational(1, 6)));

    // pointwise reproduction for n=2
    auto c = connect_jacobi(1, 2, 0, 0);
    OrthoPolySystem base = OrthoPolySystem::jacobi(0, 0, 2);
    OrthoPolySystem shifted = OrthoPolySystem::jacobi(0, 1, 2);
    for (double x : {0.1, 0.5, 0.9}) {
        double rhs = 0;
        for (long j = 0; j <= 2; ++j) rhs += c[j].to_double() * shifted.eval(2 - j, x);
        CHECK(base.eval(2, x) == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("connection coefficients defined by the identity, closed forms validated") {
    for (long n : {1L, 3L, 5L}) {
        for (const HalfInt& k : {HalfInt(1), HalfInt(2), HalfInt::from_twice(3)}) {
            auto lc = connect_laguerre(k, n);
            auto ls = connect_by_identity(Family::Laguerre, 0, 2, k, n);
            REQUIRE(lc.size() == ls.size());
            for (size_t i = 0; i < lc.size(); ++i) CHECK(lc[i] == ls[i]);

            auto jc = connect_jacobi(k, n, 1, HalfInt::from_twice(1));
            auto js = connect_by_identity(Family::Jacobi, 1, HalfInt::from_twice(1), k, n);
            REQUIRE(jc.size() == js.size());
            for (size_t i = 0; i < jc.size(); ++i) CHECK(jc[i] == js[i]);
        }
    }
}

TEST_CASE("skew coefficient tables") {
    // Hermite line: e4(j,n) = n!/j!, eta1(n) = Gamma(n+3/2)/sqrt(pi)
    CHECK(skew_e4(Family::Gaussian, 0, 0, 2, 3) == ExactReal(3));
    CHECK(skew_eta1(Family::Gaussian, 0, 0, 2) == ExactReal(Rational(15, 8)));

    // c_n = h_{n+1} h_n gamma_n with the tabulated h_n gamma_n values
    for (Family fam : {Family::Gaussian, Family::Laguerre, Family::Jacobi}) {
        HalfInt a = fam == Family::Jacobi ? HalfInt(1) : HalfInt(0);
        HalfInt b = fam == Family::Gaussian ? HalfInt(0) : HalfInt(2);
        for (long j = 0; j <= 4; ++j) {
            SkewCoefficients sc = skew_coeffs(fam, a, b, j, 4);
            CHECK(sc.c_j == norm_h(fam, a, b, j + 1) * norm_h(fam, a, b, j) * sc.gamma_j);
            ExactReal hg = norm_h(fam, a, b, j) * sc.gamma_j;
            if (fam == Family::Gaussian) CHECK(hg == ExactReal(1));
            if (fam == Family::Laguerre) CHECK(hg == ExactReal(Rational(1, 2)));
            if (fam == Family::Jacobi)
                CHECK(hg == ExactReal((Rational(2 * j) + 1 + 2 + 2) / 2));  // (2j+a+b+2)/2
        }
    }

    // closed forms equal the defining products (incl. half-integer b)
    for (long n = 0; n <= 3; ++n)
        for (long j = 0; j <= n; ++j) {
            HalfInt b_half = HalfInt::from_twice(3);  // b = 3/2
            CHECK(skew_e4(Family::Laguerre, 0, b_half, j, n) ==
                  skew_e4_product(Family::Laguerre, 0, b_half, j, n));
            CHECK(skew_e1(Family::Laguerre, 0, b_half, j, n) ==
                  skew_e1_product(Family::Laguerre, 0, b_half, j, n));
        }
}

TEST_CASE("differential identity constant equals 2 gamma_{n-1}") {
    // D_n^H = 2^n/(sqrt(pi) Gamma(n))
    ExactReal d3 = diff_identity_const(Family::Gaussian, 0, 0, 3);
    CHECK(d3.rat() == Rational(8, 2));
    CHECK(d3.pi_half_exp() == -1);
    // D_n^L = 1/(Gamma(b+n) Gamma(n))
    CHECK(diff_identity_const(Family::Laguerre, 0, 2, 2) == ExactReal(Rational(1, 6)));
}

TEST_CASE("degenerate Jacobi recurrence parameters are rejected") {
    CHECK_THROWS_AS(
        OrthoPolySystem(Family::Jacobi, HalfInt::from_twice(-1), HalfInt::from_twice(-1), 4),
        InvalidParameter);
}
