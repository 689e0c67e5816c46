#include "rmt/mom_orthogonal.hpp"

#include <algorithm>

#include "rmt/mom_symplectic.hpp"
#include "rmt/mom_unitary.hpp"

namespace rmt {

namespace {

void require_even(const char* who, long n) {
    if (n < 2 || n % 2 != 0)
        throw OddDimension(std::string(who) + ": n must be a positive even integer");
}

long require_int(const char* who, const HalfInt& b) {
    if (!b.is_integer())
        throw InvalidParameter(std::string(who) + ": integer weight parameters required");
    return static_cast<long>(mpz_get_si(b.integer().get_mpz_t()));
}

}  // namespace

IncompleteTerm i_laguerre(long k, long n, const HalfInt& b, bool negative_order) {
    require_even("i_laguerre", n);
    if (k < 1) throw InvalidParameter("i_laguerre: k must be >= 1");
    long bi = require_int("i_laguerre", b);
    HalfInt half = HalfInt::from_twice(1);
    Rational bn_half = Rational(bi + n, 2), n1_half = Rational(1 + n, 2);
    ExactReal main, phi;

    if (!negative_order) {
        for (long j = 0; j <= std::min(n / 2 - 1, k); ++j)
            main += binom_gen(Rational(2 * k), 2 * j) * poch(bn_half, k - j) / poch(n1_half, -j);
        main *= ExactReal::pow2(k);
        // phi-tilde: the Gamma(j+k-n+1) reciprocal kills every term once n > 2k.
        ExactReal pref = gamma_half(HalfInt::from_twice(n + bi - 1)) /
                         (gamma_half(HalfInt(n / 2)) * gamma_half(HalfInt(bi + n - 1)));
        for (long j = 1; j <= k; ++j) {
            ExactReal rg = recip_gamma(HalfInt(j + k - n + 1));
            if (rg.is_zero()) continue;
            phi += gamma_half(HalfInt(j + k)) * gamma_half(HalfInt(bi + j + k)) *
                   ExactReal::pow2(-j) * rg / gamma_half(b.half() + half + HalfInt(j));
        }
        phi *= pref;
        return {main + phi, phi, n > 2 * k};
    }

    for (long j = 0; j <= n / 2 - 1; ++j)
        main += binom_gen(Rational(2 * k + 2 * j - 1), 2 * j) * poch(bn_half, -k - j) /
                poch(n1_half, -j);
    main *= ExactReal::pow2(-k);
    ExactReal pref = gamma_half(HalfInt::from_twice(n + bi - 1)) /
                     (gamma_half(HalfInt(n / 2)) * gamma_half(HalfInt(bi + n - 1)));
    for (long j = 0; j <= k - 1; ++j) {
        phi += gamma_half(HalfInt(k + j + n)) * gamma_half(HalfInt(bi - k - j)) *
               ExactReal::pow2(j) /
               (gamma_half(b.half() + half - HalfInt(j)) * gamma_half(HalfInt(k + j + 1)));
    }
    phi *= pref;
    return {main + phi, phi, false};
}

IncompleteTerm i_jacobi(long k, long n, const HalfInt& a, const HalfInt& b) {
    require_even("i_jacobi", n);
    if (k < 1) throw InvalidParameter("i_jacobi: k must be >= 1");
    long ai = require_int("i_jacobi", a), bi = require_int("i_jacobi", b);
    HalfInt half = HalfInt::from_twice(1);
    Rational ar(ai), br(bi);
    Rational abn_half = (ar + br + n) / 2, bn_half = (br + n) / 2;
    Rational an1_half = (ar + n + 1) / 2, n1_half = Rational(1 + n, 2);

    ExactReal main;
    for (long j = 0; j <= std::min(n / 2 - 1, k); ++j) {
        ExactReal num = ExactReal(ar + br + 2 * n - 4 * j - 1 + 2 * k) *
                        poch(abn_half, k - j) * poch(bn_half, k - j);
        ExactReal den = poch(ar + br + 2 * n - 2 * j - 1, 2 * k + 1) * poch(an1_half, -j) *
                        poch(n1_half, -j);
        main += binom_gen(Rational(2 * k), 2 * j) * num / den;
    }
    main *= ExactReal::pow2(2 * k);  // 4^k

    ExactReal phi;
    HalfInt ah = a.half(), bh = b.half(), nh2 = HalfInt::from_twice(n);  // n/2
    for (long j = 1; j <= k; ++j) {
        ExactReal rg = recip_gamma(HalfInt(j + k - n + 1));
        if (rg.is_zero()) continue;
        ExactReal num = ExactReal::pow2(ai + 1) * gamma_half(ah + bh + HalfInt(j)) *
                        gamma_half(ah + bh + half + nh2) * gamma_half(ah + half + nh2) *
                        gamma_half(HalfInt(bi + k + j)) * gamma_half(HalfInt(j + k));
        ExactReal den = gamma_half(HalfInt(ai + bi + n + j + k)) *
                        gamma_half(bh + half + HalfInt(j)) * gamma_half(nh2 + bh) *
                        gamma_half(ah + half) * gamma_half(nh2);
        phi += num * rg / den;
    }
    return {main + phi, phi, n > 2 * k};
}

MomentResult loe_moment(long k, long n, const HalfInt& b) {
    require_even("loe_moment", n);
    require_int("loe_moment", b);
    if (b <= HalfInt(-1)) throw InvalidParameter("loe_moment: b must exceed -1");
    if (k == 0) return MomentResult::exact(ExactReal(n));
    if (!moment_converges(EnsembleSpec::laguerre(1, n, b), Rational(k)))
        return MomentResult::divergent();
    // M1(k,n) = 2^(1+k) M4_{b/2}(k, (n-1)/2) + I_L(k,n)
    HalfInt half_n = HalfInt::from_twice(n - 1);
    ExactReal m4 = lse_exact(k, half_n, b.half());
    IncompleteTerm inc = i_laguerre(std::abs(k), n, b, k < 0);
    return MomentResult::exact(ExactReal::pow2(1 + k) * m4 + inc.i_value);
}

MomentResult joe_moment(long k, long n, const HalfInt& a, const HalfInt& b) {
    require_even("joe_moment", n);
    require_int("joe_moment", a);
    require_int("joe_moment", b);
    if (b <= HalfInt(-1) || a <= HalfInt(-1))
        throw InvalidParameter("joe_moment: parameters must exceed -1");
    if (k < 0) throw InvalidParameter("joe_moment: negative Jacobi orders not supported");
    if (k == 0) return MomentResult::exact(ExactReal(n));
    HalfInt half_n = HalfInt::from_twice(n - 1);
    ExactReal m4 = jse_exact(k, half_n, a.half(), b.half());
    IncompleteTerm inc = i_jacobi(k, n, a, b);
    return MomentResult::exact(ExactReal(2) * m4 + inc.i_value);
}

ExactReal goe_O(long two_k, long n) {
    require_even("goe_O", n);
    if (two_k % 2 != 0 || two_k < 2) return ExactReal(0);
    long k = two_k / 2;
    HalfInt k_half = HalfInt::from_twice(2 * k + 1), half = HalfInt::from_twice(1);
    ExactReal sum;
    for (long j = 1; j <= std::min(n / 2 - 1, k); ++j)
        for (long i = 0; i <= std::min(n / 2 - j - 1, k - j); ++i) {
            ExactReal bin = binom_gen(Rational(k), i) * binom_gen(Rational(k), i + j);
            if (bin.is_zero()) continue;
            sum += bin * poch_half(HalfInt(n / 2 - i - j), k_half) /
                   poch_half(HalfInt(n / 2 - j), half);
        }
    return sum;
}

ExactReal goe_phi(long two_k, long n) {
    require_even("goe_phi", n);
    if (two_k % 2 != 0 || two_k < 0) throw InvalidParameter("goe_phi: even order required");
    long k = two_k / 2;
    if (k == 0) {
        // I_G(0,n) reduces to the eps-transform mass term; the assembly
        // never needs it (k = 0 short-circuits to n upstream).
        return ExactReal(0);
    }
    if (n > 2 * k) {
        ExactReal sum;
        for (long j = 0; j <= k; ++j)
            sum += poch(Rational(n + 1, 2) - j, j) * ExactReal::pow2(3 * j - k) /
                   (factorial(2 * j) * factorial(k - j));
        return factorial(2 * k) * sum;
    }
    ExactReal first;
    for (long j = 0; j <= k - n / 2; ++j)
        for (long i = 0; i <= n / 2 - 1; ++i) {
            Rational sign = (j % 2 == 0) ? Rational(1) : Rational(-1);
            first += binom_gen(Rational(n - 1), 2 * i) *
                     ExactReal(sign / Rational(2 * j + 2 * i + 1)) * ExactReal::pow2(-j - 2 * i) /
                     (factorial(j) * factorial(k - n / 2 - j));
        }
    first *= ExactReal::pow2(n / 2 - k) * factorial(2 * k) / gamma_half(HalfInt(n / 2));
    ExactReal second;
    for (long j = 0; j <= n / 2 - 1; ++j)
        for (long i = 0; i <= j; ++i)
            second += factorial(n / 2 - i - 1) * binom_gen(Rational(n - 1), n - 2 * i - 1) *
                      ExactReal::pow2(2 * i - 2 * k) / (factorial(j - i) * factorial(k - j));
    second *= factorial(2 * k) / gamma_half(HalfInt(n / 2));
    return first + second;
}

MomentResult goe_moment(long order, long n) {
    require_even("goe_moment", n);
    if (order < 0) throw InvalidParameter("goe_moment: order must be >= 0");
    if (order % 2 != 0) return MomentResult::exact(ExactReal(0));
    if (order == 0) return MomentResult::exact(ExactReal(n));
    ExactReal m2 = gue_sum_exact(order, n - 1);
    return MomentResult::exact(m2 - goe_O(order, n) + goe_phi(order, n));
}

}  // namespace rmt
