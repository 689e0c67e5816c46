#include "rmt/mom_symplectic.hpp"

#include <algorithm>

#include "rmt/mom_unitary.hpp"

namespace rmt {

namespace {

long as_long(const BigInt& z) { return static_cast<long>(mpz_get_si(z.get_mpz_t())); }

// min(floor(n), floor(k/2)) for positive integer k; floor(n) for general k.
long j_limit(long k, const HalfInt& n) {
    long nf = as_long(n.floor());
    return k > 0 ? std::min(nf, k / 2) : nf;
}

long i_limit(long k, const HalfInt& n, long j) {
    long span = as_long((n - HalfInt(j)).twice());  // 2n - 2j
    return k > 0 ? std::min(span, k - 2 * j) : span;
}

// z / prod_{t=0}^{len-1}(z - i + t): the t = i factor equals z, so the pair
// cancels exactly; at the Dyson point 2a = -1 the sum hits z = 0 and the
// printed coefficient is the removable 0/0 limit.
ExactReal cancel_ratio(const Rational& z, long i, long len) {
    if (i < 0 || i >= len) throw std::logic_error("cancel_ratio: factor out of range");
    Rational prod(1);
    for (long t = 0; t < len; ++t) {
        if (t == i) continue;
        Rational f = z - i + t;
        f.canonicalize();
        if (f == 0) throw PoleError("symplectic coefficient: unremovable pole");
        prod *= f;
    }
    return ExactReal(1) / ExactReal(prod);
}

}  // namespace

SymplecticCorrection s_jacobi(long k, const HalfInt& n, const HalfInt& a, const HalfInt& b) {
    Rational ar = a.to_rational(), br = b.to_rational(), nr = n.to_rational();
    Rational two_a = 2 * ar, two_b = 2 * br, two_n = 2 * nr;
    ExactReal sum;
    long terms = 0;
    for (long j = 1; j <= j_limit(k, n); ++j) {
        for (long i = 0; i <= i_limit(k, n, j); ++i) {
            ExactReal bin = binom_gen(Rational(k), i + 2 * j) * binom_gen(Rational(k), i);
            if (bin.is_zero()) continue;
            ExactReal num = ExactReal::pow2(4 * j - 3) * poch(two_a + two_n - i - 2 * j + 1, i) *
                            poch(two_b + two_n, k - i - 2 * j + 1) *
                            poch(two_a + two_b + two_n, k - i - 2 * j + 1);
            ExactReal den = poch(two_n - 2 * j + 1, -i) * poch(nr + 1, -j) * poch(ar + nr + 1, -j) *
                            poch(br + nr, 1 - j) * poch(ar + br + nr, 1 - j);
            // (z)(z - 2i + k) / [(z + 2j - i)_(1+k) (z - i)_(1+k)], z = 2a+2b+4n-4j+1
            Rational z = two_a + two_b + 2 * two_n - 4 * j + 1;
            ExactReal tail = ExactReal(z - 2 * i + k) * cancel_ratio(z, i, 1 + k) /
                             poch(z + 2 * j - i, 1 + k);
            sum += bin * (num / den) * tail;
            ++terms;
        }
    }
    return {sum, terms};
}

SymplecticCorrection s_laguerre(long k, const HalfInt& n, const HalfInt& b) {
    Rational br = b.to_rational(), nr = n.to_rational();
    Rational two_b = 2 * br, two_n = 2 * nr;
    ExactReal sum;
    long terms = 0;
    for (long j = 1; j <= j_limit(k, n); ++j) {
        for (long i = 0; i <= i_limit(k, n, j); ++i) {
            ExactReal bin = binom_gen(Rational(k), i) * binom_gen(Rational(k), i + 2 * j);
            if (bin.is_zero()) continue;
            ExactReal num = poch(two_b + two_n, k - i - 2 * j + 1) * poch(two_n - i - 2 * j + 1, i);
            ExactReal den = ExactReal::pow2(k - 2 * j + 2) * poch(nr + 1, -j) * poch(br + nr, 1 - j);
            sum += bin * num / den;
            ++terms;
        }
    }
    return {sum, terms};
}

SymplecticCorrection s_gauss(long two_k, const HalfInt& n) {
    if (two_k % 2 != 0 || two_k < 2) return {ExactReal(0), 0};
    long k = two_k / 2;
    long nf = as_long(n.floor());
    HalfInt k_minus_half = HalfInt::from_twice(2 * k - 1);
    // Gamma(n+1)Gamma(n) / (2^k sqrt(pi) Gamma(2n) 4^(1-n))
    ExactReal pref = gamma_half(n + 1) * gamma_half(n) *
                     ExactReal::pow2(as_long(n.twice()) - 2 - k) /
                     (ExactReal::sqrt_pi() * gamma_half(n + n));
    ExactReal sum;
    long terms = 0;
    for (long j = 1; j <= std::min<long>(nf, k); ++j) {
        for (long i = 0; i <= std::min<long>(nf - j, k - j); ++i) {
            ExactReal bin = binom_gen(Rational(k), i) * binom_gen(Rational(k), i + j);
            if (bin.is_zero()) continue;
            sum += bin * poch_half(n - HalfInt(i + j) + 1, k_minus_half);
            ++terms;
        }
    }
    return {pref * sum, terms};
}

ExactReal lse_exact(long k, const HalfInt& n, const HalfInt& b) {
    if (k == 0) return ExactReal(n.to_rational());
    long two_n = as_long(n.twice());
    ExactReal m2 = lue_sum_exact(k, two_n, b + b);
    return ExactReal::pow2(-k - 1) * m2 - s_laguerre(k, n, b).value;
}

ExactReal jse_exact(long k, const HalfInt& n, const HalfInt& a, const HalfInt& b) {
    if (k == 0) return ExactReal(n.to_rational());
    long two_n = as_long(n.twice());
    ExactReal m2 = jue_sum_exact(k, two_n, a + a, b + b);
    return ExactReal(Rational(1, 2)) * m2 - s_jacobi(k, n, a, b).value;
}

ExactReal gse_exact(long two_k, const HalfInt& n) {
    if (two_k == 0) return ExactReal(n.to_rational());
    long k = two_k / 2;
    ExactReal m2 = gue_sum_exact(two_k, as_long(n.twice()));
    return ExactReal::pow2(-k - 1) * m2 - s_gauss(two_k, n).value;
}

MomentResult lse_moment(long k, const HalfInt& n, const HalfInt& b) {
    if (b <= HalfInt(-1)) throw InvalidParameter("lse_moment: b must exceed -1");
    if (n < HalfInt::from_twice(1)) throw InvalidParameter("lse_moment: n must be >= 1/2");
    if (!moment_converges(EnsembleSpec::laguerre(4, n, b), Rational(k)))
        return MomentResult::divergent();
    return MomentResult::exact(lse_exact(k, n, b));
}

MomentResult jse_moment(long k, const HalfInt& n, const HalfInt& a, const HalfInt& b) {
    if (b <= HalfInt(-1) || a <= HalfInt(-1))
        throw InvalidParameter("jse_moment: parameters must exceed -1");
    if (k < 0) throw InvalidParameter("jse_moment: negative Jacobi orders not supported");
    return MomentResult::exact(jse_exact(k, n, a, b));
}

MomentResult gse_moment(long order, const HalfInt& n) {
    if (order < 0) throw InvalidParameter("gse_moment: order must be >= 0");
    if (order % 2 != 0) return MomentResult::exact(ExactReal(0));
    return MomentResult::exact(gse_exact(order, n));
}

MomentResult lse_moment_real(double k, const HalfInt& n, const HalfInt& b) {
    if (b <= HalfInt(-1)) throw InvalidParameter("lse_moment_real: b must exceed -1");
    Rational kr(k);
    kr.canonicalize();
    if (!moment_converges(EnsembleSpec::laguerre(4, n, b), kr)) return MomentResult::divergent();
    float128 kk = k;
    long two_n = as_long(n.twice());
    float128 br = f128_from_rational(b.to_rational());
    float128 nr = f128_from_rational(n.to_rational());
    MomentResult m2 = lue_moment_real(k, two_n, b + b);
    float128 sum = 0, abs_sum = 0;
    long nf = as_long(n.floor());
    float128 two_pow_k = f128::exp(kk * f128::log(2));
    for (long j = 1; j <= nf; ++j) {
        for (long i = 0; i <= two_n - 2 * j; ++i) {
            float128 term = f128::binom_real(kk, i) * f128::binom_real(kk, i + 2 * j) *
                            f128::poch_signed(2 * br + 2 * nr, kk - i - 2 * j + 1) *
                            f128::poch(2 * nr - i - 2 * j + 1, i) /
                            (two_pow_k * f128::pow(2, 2 - 2 * j) *
                             f128::poch(nr + 1, -static_cast<float128>(j)) *
                             f128::poch(br + nr, 1 - static_cast<float128>(j)));
            sum += term;
            abs_sum += f128::abs(term);
        }
    }
    float128 half_pow = 1 / (2 * two_pow_k);
    float128 value = half_pow * std::get<HighPrecisionFloat>(*m2.value).value - sum;
    float128 err = std::get<HighPrecisionFloat>(*m2.value).error +
                   abs_sum * static_cast<float128>(1e-30) * (two_n + 2);
    return MomentResult::approx({value, err});
}

}  // namespace rmt
