#include "rmt/hpfloat.hpp"

#include <quadmath.h>

#include <stdexcept>

namespace rmt::f128 {

float128 pi() { return M_PIq; }
float128 sqrt_pi() { return sqrtq(M_PIq); }
float128 abs(float128 x) { return fabsq(x); }
float128 exp(float128 x) { return expq(x); }
float128 log(float128 x) { return logq(x); }
float128 ldexp(float128 x, int e) { return ldexpq(x, e); }

float128 lgamma(float128 x) {
    if (x <= 0) throw std::domain_error("lgamma: argument must be positive");
    return lgammaq(x);
}

float128 pow(float128 base, long e) {
    if (e < 0) return 1 / pow(base, -e);
    float128 r = 1, b = base;
    for (; e; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

float128 poch(float128 x, float128 m) {
    return expq(lgamma(x + m) - lgamma(x));
}

float128 lgamma_signed(float128 x, int& sign) {
    if (x > 0) {
        sign = 1;
        return lgammaq(x);
    }
    if (x == floorq(x)) throw std::domain_error("lgamma_signed: pole at nonpositive integer");
    // Gamma(x) = pi / (sin(pi x) Gamma(1-x))
    float128 s = sinq(M_PIq * x);
    sign = s > 0 ? 1 : -1;
    return logq(M_PIq / fabsq(s)) - lgammaq(1 - x);
}

float128 poch_signed(float128 x, float128 m) {
    int s1 = 0, s2 = 0;
    float128 l = lgamma_signed(x + m, s1) - lgamma_signed(x, s2);
    return s1 * s2 * expq(l);
}

float128 binom_real(float128 k, long j) {
    if (j < 0) return 0;
    float128 r = 1;
    for (long i = 0; i < j; ++i) r *= (k - i) / (j - i);
    return r;
}

std::string str(float128 v, int sig_digits) {
    char buf[128];
    quadmath_snprintf(buf, sizeof buf, "%.*Qe", sig_digits - 1, v);
    return buf;
}

}  // namespace rmt::f128
