#pragma once
// Quad-precision (binary128) scalar support: ~33 significant decimal digits.
// Used by the float fallback path (real non-integer moment orders) and by
// exact-to-decimal conversion.

#include <string>

namespace rmt {

using float128 = __float128;

/// Floating value with an absolute error bound attached.
struct HighPrecisionFloat {
    float128 value = 0;
    float128 error = 0;

    double value_d() const { return static_cast<double>(value); }
    double error_d() const { return static_cast<double>(error); }
};

namespace f128 {

float128 pi();
float128 sqrt_pi();
float128 abs(float128 x);
float128 exp(float128 x);
float128 log(float128 x);
float128 lgamma(float128 x);  // requires x > 0
float128 pow(float128 base, long e);
float128 ldexp(float128 x, int e);

/// Pochhammer Gamma(x+m)/Gamma(x); both Gamma arguments must be positive.
float128 poch(float128 x, float128 m);

/// log|Gamma(x)| with the sign of Gamma(x), valid for any non-pole real x
/// (reflection formula below zero).
float128 lgamma_signed(float128 x, int& sign);

/// Pochhammer Gamma(x+m)/Gamma(x) tolerating negative non-integer arguments.
float128 poch_signed(float128 x, float128 m);

/// Binomial with arbitrary real top and integer bottom, as the finite
/// product prod_{i<j} (k-i)/(j-i); returns 0 for j < 0.
float128 binom_real(float128 k, long j);

/// Round-trip safe decimal rendering with the given significant digits.
std::string str(float128 v, int sig_digits);

}  // namespace f128
}  // namespace rmt
