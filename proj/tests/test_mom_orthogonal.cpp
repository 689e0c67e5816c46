#include <doctest.h>

#include <cmath>

#include "rmt/mom_orthogonal.hpp"
#include "rmt/mom_unitary.hpp"
#include "rmt/oracle.hpp"
#include "rmt/orthopoly.hpp"
#include "rmt/quadrature.hpp"

using namespace rmt;

TEST_CASE("odd dimensions are rejected, order zero is the dimension") {
    CHECK_THROWS_AS(loe_moment(1, 3, 1), OddDimension);
    CHECK_THROWS_AS(joe_moment(1, 5, 0, 0), OddDimension);
    CHECK_THROWS_AS(goe_moment(2, 3), OddDimension);
    CHECK(loe_moment(0, 4, 2).exact_value() == ExactReal(4));
    CHECK(joe_moment(0, 6, 1, 1).exact_value() == ExactReal(6));
    CHECK(goe_moment(0, 4).exact_value() == ExactReal(4));
}

TEST_CASE("incomplete-term phi vanishes for n > 2k and decays for negative orders") {
    IncompleteTerm pos = i_laguerre(1, 6, 2, false);
    CHECK(pos.phi_vanishes);
    CHECK(pos.phi_value.is_zero());
    IncompleteTerm pj = i_jacobi(2, 8, 1, 0);
    CHECK(pj.phi_vanishes);
    CHECK(pj.phi_value.is_zero());

    double prev = 0;
    for (long n = 4; n <= 20; n += 2) {
        IncompleteTerm neg = i_laguerre(1, n, n + 1, true);
        double phi = neg.phi_value.to_double();
        CHECK(phi > 0);
        if (n > 4) CHECK(phi < 0.75 * prev);
        prev = phi;
    }
}

TEST_CASE("duality-assembled moments match the brute-force jpdf oracle at n = 2") {
    for (long k = 1; k <= 3; ++k) {
        EnsembleSpec je = EnsembleSpec::jacobi(1, 2, 0, 0);
        double brute = bruteforce_jpdf_moment(je, static_cast<double>(k), 1e-9);
        CHECK(joe_moment(k, 2, 0, 0).exact_value().to_double() ==
              doctest::Approx(brute).epsilon(1e-8));

        EnsembleSpec le = EnsembleSpec::laguerre(1, 2, 3);
        double bl = bruteforce_jpdf_moment(le, static_cast<double>(k), 1e-9);
        CHECK(loe_moment(k, 2, 3).exact_value().to_double() ==
              doctest::Approx(bl).epsilon(1e-8));
    }
    // negative order with delay-style parameters
    EnsembleSpec len = EnsembleSpec::laguerre(1, 2, 2);
    double bn = bruteforce_jpdf_moment(len, -1.0, 1e-9);
    CHECK(loe_moment(-1, 2, 2).exact_value().to_double() == doctest::Approx(bn).epsilon(1e-8));
}

TEST_CASE("JOE k=1 at a=1, b=0 is n/2 by the x -> 1-x symmetry") {
    for (long n : {2L, 4L, 6L})
        CHECK(joe_moment(1, n, 1, 0).exact_value() == ExactReal(Rational(n, 2)));
}

TEST_CASE("GOE frozen small values and O-sum bounds") {
    CHECK(goe_moment(2, 2).exact_value() == ExactReal(3));
    CHECK(goe_O(2, 4) == ExactReal(Rational(3, 2)));  // single (j,i) = (1,0) term
    CHECK(goe_O(4, 2).is_zero());                     // empty j-range
    CHECK(goe_phi(2, 4) == ExactReal(7));             // n > 2k branch
    CHECK(goe_moment(1, 4).exact_value().is_zero());
    CHECK(goe_moment(4, 6).exact_value().pi_half_exp() == 0);
}

TEST_CASE("GOE incomplete integral against the numeric sign-kernel double integral") {
    // I_G(2k,n) = C int x^{2k} e^{-x^2/2} H_{n-1}(x) [int e^{-t^2/2} sgn(x-t) dt] dx
    //           = C sqrt(2 pi) int x^{2k} e^{-x^2/2} H_{n-1}(x) erf(x/sqrt 2) dx
    OrthoPolySystem herm = OrthoPolySystem::hermite(9);
    auto numeric = [&](long k, long n) {
        double cut = weight_tail_cut(2.0 * k + n + 6, 0, 0.5);
        auto g = [&](double x) {
            return std::pow(x, 2.0 * k) * std::exp(-x * x / 2) * herm.eval(n - 1, x) *
                   std::erf(x / std::sqrt(2.0));
        };
        double c = 1.0 / (2 * std::sqrt(M_PI) * std::tgamma(n / 2.0));
        return c * std::sqrt(2 * M_PI) *
               integrate_adaptive(g, -cut, cut, 1e-12, 1e-12).value;
    };
    // both branches and the n = 2k boundary
    for (auto [k, n] : {std::pair{1L, 2L}, {2L, 4L}, {1L, 4L}, {3L, 4L}, {2L, 6L}, {3L, 6L}}) {
        double got = goe_phi(2 * k, n).to_double();
        CHECK(got == doctest::Approx(numeric(k, n)).epsilon(1e-8));
    }
}

TEST_CASE("GOE moment against brute force at n = 2") {
    EnsembleSpec ge = EnsembleSpec::gaussian(1, 2);
    for (long k : {2L, 4L}) {
        double brute = bruteforce_jpdf_moment(ge, static_cast<double>(k), 1e-9);
        CHECK(goe_moment(k, 2).exact_value().to_double() == doctest::Approx(brute).epsilon(1e-8));
    }
}

TEST_CASE("beta=1 divergence gate") {
    CHECK_FALSE(loe_moment(-1, 2, 1).convergent);  // bound k > -(b+1)/2
    CHECK(loe_moment(-1, 2, 2).convergent);
}
