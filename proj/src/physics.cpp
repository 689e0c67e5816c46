#include "rmt/physics.hpp"

#include <quadmath.h>

#include "rmt/densities.hpp"
#include "rmt/mom_orthogonal.hpp"
#include "rmt/mom_symplectic.hpp"
#include "rmt/mom_unitary.hpp"

namespace rmt {

HalfInt transport_param_a(int beta, const HalfInt& delta) {
    Rational a = Rational(2, beta) * (1 + delta.to_rational() / 2) - 1;
    try {
        return HalfInt::from_rational(a);
    } catch (const std::invalid_argument&) {
        throw InvalidParameter("transport parameters: a = (2/beta)(1+delta/2)-1 = " +
                               rational_str(a) + " is not a half-integer");
    }
}

namespace {

void check_transport(const TransportQuery& q) {
    if (q.beta != 1 && q.beta != 2 && q.beta != 4)
        throw InvalidParameter("beta must be 1, 2 or 4");
    if (q.n < 1 || q.m < q.n) throw InvalidParameter("channel counts must satisfy m >= n >= 1");
    if (q.k < 1) throw InvalidParameter("transmission moment order k must be >= 1");
    if (q.beta == 1 && q.n % 2 != 0)
        throw OddDimension("beta = 1 transmission requires an even number of channels n");
}

ExactReal pow_rational(const Rational& base, long e) {
    ExactReal r(1);
    ExactReal b(base);
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

MomentResult transmission_moment(const TransportQuery& q) {
    check_transport(q);
    HalfInt a = transport_param_a(q.beta, q.delta);
    HalfInt b(q.m - q.n);
    switch (q.beta) {
        case 2:
            return jue_moment(q.k, q.n, a, b);
        case 4:
            return jse_moment(q.k, HalfInt(q.n), a, b);
        default:
            return joe_moment(q.k, q.n, a, b);
    }
}

MomentResult delay_moment(const DelayQuery& q) {
    if (q.beta != 1 && q.beta != 2 && q.beta != 4)
        throw InvalidParameter("beta must be 1, 2 or 4");
    if (q.n < 1 || q.k < 1) throw InvalidParameter("delay moment needs n >= 1, k >= 1");
    // Moments exist only for k < n beta / 2 + 1.
    if (2 * q.k >= q.n * q.beta + 2) return MomentResult::divergent();
    ExactReal scale = pow_rational(Rational(q.n), q.k - 1);
    switch (q.beta) {
        case 2: {
            MomentResult m = lue_moment(-q.k, q.n, HalfInt(q.n));
            if (!m.convergent) return m;
            return MomentResult::exact(scale * m.exact_value(), m.terms_summed);
        }
        case 4: {
            HalfInt b = HalfInt::from_twice(2 * q.n - 1);  // n - 1/2
            try {
                return MomentResult::exact(scale * lse_exact(-q.k, HalfInt(q.n), b));
            } catch (const PoleError&) {
                // k = 2n: the two assembly pieces pole with a finite
                // difference; integrate the density instead.
                double v = quad_public_moment(EnsembleSpec::laguerre(4, q.n, b), -q.k);
                double s = scale.to_double();
                return MomentResult::approx({static_cast<float128>(v * s),
                                             static_cast<float128>(std::abs(v * s) * 1e-9)});
            }
        }
        default: {
            if (q.n % 2 != 0) throw OddDimension("beta = 1 delay moments require even n");
            MomentResult m = loe_moment(-q.k, q.n, HalfInt(q.n + 1));
            if (!m.convergent) return m;
            return MomentResult::exact(scale * m.exact_value(), m.terms_summed);
        }
    }
}

HighPrecisionFloat delay_moment_unitary_f128(long k, long n) {
    if (k < 1 || k >= n + 1) throw InvalidParameter("delay_moment_unitary_f128: need 1 <= k <= n");
    float128 lgk = lgammaq(static_cast<float128>(k));
    float128 lg2n = lgammaq(static_cast<float128>(2 * n));
    float128 lgn1 = lgammaq(static_cast<float128>(n + 1));
    float128 sum = 0;
    for (long j = 0; j <= n - 1; ++j) {
        float128 lt = lgammaq(static_cast<float128>(k + j)) - lgk -
                      lgammaq(static_cast<float128>(j + 1)) +
                      lgammaq(static_cast<float128>(k + j + 1)) - lgk -
                      lgammaq(static_cast<float128>(j + 2)) +
                      lgammaq(static_cast<float128>(2 * n - k - j)) - lg2n -
                      lgammaq(static_cast<float128>(n - j)) + lgn1;
        sum += expq(lt);
    }
    float128 scale = expq((k - 1) * logq(static_cast<float128>(n))) / k;
    float128 value = scale * sum;
    return {value, fabsq(value) * static_cast<float128>(1e-28) * n};
}

std::vector<ExactReal> charge_cumulants(const TransportQuery& q, int order) {
    if (order < 1) throw InvalidParameter("charge_cumulants: order must be >= 1");
    std::vector<Rational> tk(order + 1);
    for (long k = 1; k <= order; ++k) {
        TransportQuery qk = q;
        qk.k = k;
        tk[k] = transmission_moment(qk).exact_value().as_rational();
    }
    // A(x) = sum_k (-1)^(k+1)/k <T_k> (e^x - 1)^k, truncated at x^order.
    std::vector<Rational> acc(order + 1, Rational(0));
    std::vector<Rational> emx(order + 1, Rational(0));  // (e^x - 1)^k, starts at k=0
    emx[0] = 1;
    std::vector<Rational> base(order + 1, Rational(0));
    {
        Rational f(1);
        for (int i = 1; i <= order; ++i) {
            f /= i;
            base[i] = f;
        }
    }
    for (long k = 1; k <= order; ++k) {
        // emx <- emx * (e^x - 1)
        std::vector<Rational> next(order + 1, Rational(0));
        for (int i = 0; i <= order; ++i)
            for (int j = 1; i + j <= order; ++j) next[i + j] += emx[i] * base[j];
        emx = std::move(next);
        Rational coef = tk[k] / k;
        if (k % 2 == 0) coef = -coef;
        for (int i = 0; i <= order; ++i) acc[i] += coef * emx[i];
    }
    std::vector<ExactReal> kappa;
    Rational fact(1);
    for (int j = 1; j <= order; ++j) {
        fact *= j;
        kappa.push_back(ExactReal(acc[j] * fact));
    }
    return kappa;
}

ExactReal kappa2_closed(const TransportQuery& q) {
    Rational c = (2 + q.delta.to_rational()) / q.beta;
    Rational c4 = (4 + q.delta.to_rational()) / q.beta;
    Rational num = Rational(q.n) * q.m * (c - 1 + q.n) * (c - 1 + q.m);
    Rational den = (c4 - 1 + q.n + q.m) * (c - 2 + q.n + q.m) * (c - 1 + q.n + q.m);
    return ExactReal(num / den);
}

std::pair<ExactReal, ExactReal> kappa3_ratio_parts(const TransportQuery& q) {
    Rational c = (2 + q.delta.to_rational()) / q.beta;
    Rational c6 = (6 + q.delta.to_rational()) / q.beta;
    Rational num = (Rational(q.n) - q.m - c + 1) * (Rational(q.n) - q.m + c - 1);
    Rational den = (Rational(q.n) + q.m + c - 3) * (Rational(q.n) + q.m + c6 - 1);
    return {ExactReal(-num), ExactReal(den)};
}

ExactReal kappa3_over_kappa2_closed(const TransportQuery& q) {
    auto [num, den] = kappa3_ratio_parts(q);
    if (den.is_zero())
        throw PoleError("kappa3/kappa2 display is indeterminate at these channel counts");
    return num / den;
}

ExactReal limit_catalan(long k, const Rational& m_over_n) {
    if (k < 1) throw InvalidParameter("limit_catalan: k must be >= 1");
    Rational xi = m_over_n / ((1 + m_over_n) * (1 + m_over_n));
    ExactReal sum;
    Rational xi_pow = xi;
    for (long j = 0; j <= k - 1; ++j) {
        ExactReal catalan = binom_gen(Rational(2 * j), j) / ExactReal(j + 1);
        ExactReal term = binom_gen(Rational(k - 1), j) * catalan * ExactReal(xi_pow);
        if (j % 2 == 1) term = -term;
        sum += term;
        xi_pow *= xi;
    }
    return ExactReal(1 + m_over_n) * sum;
}

ExactReal schroeder_series(long k) {
    if (k < 1) throw InvalidParameter("schroeder_series: k must be >= 1");
    ExactReal sum;
    for (long j = 0; j <= k; ++j)
        sum += binom_gen(Rational(k), j) * binom_gen(Rational(k), j - 1) * ExactReal::pow2(j);
    return sum / ExactReal(k);
}

namespace {

long int_n(const EnsembleSpec& e, const char* who) {
    if (!e.n.is_integer()) throw InvalidParameter(std::string(who) + ": integer n required");
    return static_cast<long>(mpz_get_si(e.n.integer().get_mpz_t()));
}

}  // namespace

MomentResult compute_moment(const MomentQuery& q) {
    const EnsembleSpec& e = q.ensemble;
    if (e.beta != 1 && e.beta != 2 && e.beta != 4)
        throw InvalidParameter("beta must be 1, 2 or 4");
    if (e.n < HalfInt::from_twice(1)) throw InvalidParameter("n must be positive");

    if (!q.k_is_integer()) {
        double k = q.k_real();
        if (e.family != Family::Laguerre)
            throw InvalidParameter("real non-integer orders supported for Laguerre only");
        if (e.beta == 2) return lue_moment_real(k, int_n(e, "moment"), e.b);
        if (e.beta == 4) return lse_moment_real(k, e.n, e.b);
        throw InvalidParameter("real non-integer orders not supported at beta = 1");
    }

    long k = q.k_int();
    switch (e.family) {
        case Family::Gaussian: {
            if (k < 0) throw InvalidParameter("Gaussian moments need k >= 0");
            if (k % 2 != 0) return MomentResult::exact(ExactReal(0));
            if (e.beta == 2) return gue_moment(k, int_n(e, "gue"));
            if (e.beta == 4) return gse_moment(k, e.n);
            return goe_moment(k, int_n(e, "goe"));
        }
        case Family::Laguerre: {
            if (e.beta == 2) return lue_moment(k, int_n(e, "lue"), e.b);
            if (e.beta == 1) return loe_moment(k, int_n(e, "loe"), e.b);
            MomentResult gate = [&] {
                if (!moment_converges(e, Rational(k))) return MomentResult::divergent();
                return MomentResult::exact(ExactReal(0));
            }();
            if (!gate.convergent) return gate;
            try {
                return lse_moment(k, e.n, e.b);
            } catch (const PoleError&) {
                int_n(e, "lse density fallback");
                double v = quad_public_moment(e, static_cast<double>(k));
                return MomentResult::approx(
                    {static_cast<float128>(v), static_cast<float128>(std::abs(v) * 1e-9)});
            }
        }
        case Family::Jacobi: {
            if (k < 0) throw InvalidParameter("negative Jacobi orders not supported");
            if (e.beta == 2) return jue_moment(k, int_n(e, "jue"), e.a, e.b);
            if (e.beta == 4) return jse_moment(k, e.n, e.a, e.b);
            return joe_moment(k, int_n(e, "joe"), e.a, e.b);
        }
    }
    throw std::logic_error("compute_moment: unreachable");
}

}  // namespace rmt
