#include "rmt/mom_unitary.hpp"

#include <algorithm>

namespace rmt {

namespace {

void check_weight(const char* who, const HalfInt& b) {
    if (b <= HalfInt(-1))
        throw InvalidParameter(std::string(who) + ": weight parameter b must exceed -1");
}

}  // namespace

ExactReal lue_sum_exact(long k, long n, const HalfInt& b) {
    if (k == 0) return ExactReal(n);
    Rational bn = b.to_rational() + n;
    long jmax = k > 0 ? std::min<long>(n, k) : n;
    ExactReal sum;
    for (long j = 0; j <= jmax; ++j) {
        ExactReal nar = binom_gen(Rational(k), j) * binom_gen(Rational(k), j - 1);
        if (nar.is_zero()) continue;
        sum += nar * poch(bn, k - j + 1) / poch(Rational(n + 1), -j);
    }
    return sum / ExactReal(k);
}

MomentResult lue_moment(long k, long n, const HalfInt& b) {
    check_weight("lue_moment", b);
    if (n < 1) throw InvalidParameter("lue_moment: n must be >= 1");
    if (!moment_converges(EnsembleSpec::laguerre(2, n, b), Rational(k)))
        return MomentResult::divergent();
    return MomentResult::exact(lue_sum_exact(k, n, b), std::min<long>(n, std::abs(k)) + 1);
}

MomentResult lue_moment_real(double k, long n, const HalfInt& b) {
    check_weight("lue_moment_real", b);
    Rational kr(k);
    kr.canonicalize();
    if (!moment_converges(EnsembleSpec::laguerre(2, n, b), kr)) return MomentResult::divergent();
    float128 kk = k;
    float128 bn = f128_from_rational(b.to_rational()) + n;
    float128 sum = 0, abs_sum = 0;
    for (long j = 0; j <= n; ++j) {
        // (b+n)_(k-j+1) via lgamma: both arguments positive on the
        // convergent domain since b+n+k-j+1 >= b+k+1 > 0.
        float128 term = f128::binom_real(kk, j) * f128::binom_real(kk, j - 1) *
                        f128::poch(bn, kk - j + 1) / f128::poch(n + 1.0Q, -static_cast<float128>(j));
        sum += term;
        abs_sum += f128::abs(term);
    }
    sum /= kk;
    abs_sum /= f128::abs(kk);
    // ~1e-32 per-term relative accuracy from the quad lgamma chain.
    float128 err = abs_sum * 1e-30Q * (n + 2);
    return MomentResult::approx({sum, err}, n + 1);
}

ExactReal jue_first_moment(long n, const HalfInt& a, const HalfInt& b) {
    Rational ar = a.to_rational(), br = b.to_rational();
    return ExactReal(Rational(n) * (br + n) / (ar + br + 2 * n));
}

ExactReal jue_moment_diff(long k, long n, const HalfInt& a, const HalfInt& b) {
    if (k < 1) throw InvalidParameter("jue_moment_diff: k must be a positive integer");
    Rational ar = a.to_rational(), br = b.to_rational();
    ExactReal sum;
    for (long j = 1; j <= std::min(n, k); ++j) {
        ExactReal nar = binom_gen(Rational(k), j) * binom_gen(Rational(k), j - 1);
        if (nar.is_zero()) continue;
        ExactReal num = ExactReal(ar + br + 2 * n - 2 * j + k + 1) * poch(ar + br + n, k - j + 1) *
                        poch(ar + n - j + 1, j) * poch(br + n, k - j + 1);
        ExactReal den = poch(ar + br + 2 * n - j, k + 2) * poch(ar + br + 2 * n - j + 1, k) *
                        poch(Rational(n + 1), -j);
        sum += nar * num / den;
    }
    return sum / ExactReal(k);
}

ExactReal jue_sum_exact(long k, long n, const HalfInt& a, const HalfInt& b) {
    if (k < 0) throw InvalidParameter("jue_sum_exact: negative Jacobi orders not supported");
    if (k == 0) return ExactReal(n);
    ExactReal m = jue_first_moment(n, a, b);
    for (long j = 1; j < k; ++j) m -= jue_moment_diff(j, n, a, b);
    return m;
}

MomentResult jue_moment(long k, long n, const HalfInt& a, const HalfInt& b) {
    check_weight("jue_moment", b);
    if (a <= HalfInt(-1)) throw InvalidParameter("jue_moment: a must exceed -1");
    if (n < 1) throw InvalidParameter("jue_moment: n must be >= 1");
    if (k < 0) throw InvalidParameter("jue_moment: negative Jacobi orders not supported");
    return MomentResult::exact(jue_sum_exact(k, n, a, b), k);
}

ExactReal gue_sum_exact(long two_k, long n) {
    if (two_k % 2 != 0 || two_k < 0)
        throw InvalidParameter("gue_sum_exact: order must be even and nonnegative");
    long k = two_k / 2;
    HalfInt half = HalfInt::from_twice(1);
    HalfInt k_half = HalfInt::from_twice(2 * k + 1);  // k + 1/2
    ExactReal sum;
    if (n % 2 == 0) {
        for (long j = 0; j <= std::min(n / 2 - 1, k); ++j)
            sum += binom_gen(Rational(k), j) * binom_gen(Rational(k + 1), j + 1) *
                   poch_half(HalfInt(n / 2 - j), k_half);
        ExactReal pref = ExactReal::pow2(n) * gamma_half(HalfInt(n / 2 + 1)) *
                         gamma_half(HalfInt(n / 2)) /
                         (ExactReal::sqrt_pi() * ExactReal(2 * k + 1) * gamma_half(HalfInt(n)));
        return pref * sum;
    }
    for (long j = 0; j <= std::min((n - 1) / 2, k); ++j)
        sum += binom_gen(Rational(k), j) * binom_gen(Rational(k + 1), j) *
               poch_half(HalfInt((n + 1) / 2 - j), k_half);
    ExactReal g = gamma_half(HalfInt((n + 1) / 2));
    ExactReal pref = ExactReal::pow2(n) * g * g /
                     (ExactReal::sqrt_pi() * ExactReal(2 * k + 1) * gamma_half(HalfInt(n)));
    (void)half;
    return pref * sum;
}

MomentResult gue_moment(long order, long n) {
    if (n < 1) throw InvalidParameter("gue_moment: n must be >= 1");
    if (order < 0) throw InvalidParameter("gue_moment: order must be >= 0");
    if (order % 2 != 0) return MomentResult::exact(ExactReal(0));
    return MomentResult::exact(gue_sum_exact(order, n), std::min(n / 2, order / 2) + 1);
}

}  // namespace rmt
