#pragma once
// Exact arithmetic over values r * pi^(e/2) with r rational and e integer.
// Gamma at half-integers contributes sqrt(pi) through the duplication
// formula, so keeping the pi-power symbolic makes every finished moment a
// plain rational; a nonzero residual exponent flags a transcription bug.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <variant>

#include "rmt/hpfloat.hpp"

namespace rmt {

using BigInt = mpz_class;
using Rational = mpq_class;

struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Canonical rational from a numerator/denominator pair.
Rational make_rational(const BigInt& num, const BigInt& den);

/// "p/q", or just "p" when the denominator is 1.
std::string rational_str(const Rational& r);

/// Parse "p", "p/q" or a decimal like "-1.5"; throws std::invalid_argument.
Rational parse_rational(const std::string& s);

// ---------------------------------------------------------------------------
// Half-integers, stored as twice the value.

class HalfInt {
  public:
    HalfInt() : twice_(0) {}
    HalfInt(long v) : twice_(2 * v) {}
    HalfInt(const BigInt& v) : twice_(2 * v) {}

    static HalfInt from_twice(BigInt t) {
        HalfInt h;
        h.twice_ = std::move(t);
        return h;
    }
    /// Exact conversion from a rational with denominator 1 or 2.
    static HalfInt from_rational(const Rational& r);

    const BigInt& twice() const { return twice_; }
    bool is_integer() const { return mpz_even_p(twice_.get_mpz_t()); }
    BigInt integer() const;  // throws unless integral
    BigInt floor() const;
    Rational to_rational() const { return make_rational(twice_, 2); }
    double to_double() const { return twice_.get_d() / 2.0; }

    /// Exact halving; throws unless the result is again a half-integer.
    HalfInt half() const;

    HalfInt operator-() const { return from_twice(-twice_); }
    HalfInt operator+(const HalfInt& o) const { return from_twice(twice_ + o.twice_); }
    HalfInt operator-(const HalfInt& o) const { return from_twice(twice_ - o.twice_); }
    HalfInt operator*(long s) const { return from_twice(twice_ * s); }

    bool operator==(const HalfInt& o) const { return twice_ == o.twice_; }
    bool operator!=(const HalfInt& o) const { return twice_ != o.twice_; }
    bool operator<(const HalfInt& o) const { return twice_ < o.twice_; }
    bool operator<=(const HalfInt& o) const { return twice_ <= o.twice_; }
    bool operator>(const HalfInt& o) const { return twice_ > o.twice_; }
    bool operator>=(const HalfInt& o) const { return twice_ >= o.twice_; }

    std::string str() const;

  private:
    BigInt twice_;
};

inline HalfInt operator+(long v, const HalfInt& h) { return HalfInt(v) + h; }
inline HalfInt operator-(long v, const HalfInt& h) { return HalfInt(v) - h; }

// ---------------------------------------------------------------------------
// ExactReal: rational * pi^(pi_half/2).

class ExactReal {
  public:
    ExactReal() : rat_(0), pi_half_(0) {}
    ExactReal(long v) : rat_(v), pi_half_(0) {}
    ExactReal(Rational r, long pi_half = 0) : rat_(std::move(r)), pi_half_(pi_half) {
        rat_.canonicalize();
        if (rat_ == 0) pi_half_ = 0;
    }
    ExactReal(const HalfInt& h) : ExactReal(h.to_rational()) {}

    const Rational& rat() const { return rat_; }
    long pi_half_exp() const { return pi_half_; }
    bool is_zero() const { return rat_ == 0; }
    bool is_rational() const { return pi_half_ == 0; }

    /// Rational content; throws std::logic_error if a pi power survives.
    const Rational& as_rational() const;

    ExactReal operator-() const { return ExactReal(-rat_, pi_half_); }
    ExactReal operator*(const ExactReal& o) const;
    ExactReal operator/(const ExactReal& o) const;
    ExactReal operator+(const ExactReal& o) const;
    ExactReal operator-(const ExactReal& o) const { return *this + (-o); }
    ExactReal& operator*=(const ExactReal& o) { return *this = *this * o; }
    ExactReal& operator/=(const ExactReal& o) { return *this = *this / o; }
    ExactReal& operator+=(const ExactReal& o) { return *this = *this + o; }
    ExactReal& operator-=(const ExactReal& o) { return *this = *this - o; }

    bool operator==(const ExactReal& o) const {
        return rat_ == o.rat_ && pi_half_ == o.pi_half_;
    }
    bool operator!=(const ExactReal& o) const { return !(*this == o); }

    static ExactReal sqrt_pi() { return ExactReal(Rational(1), 1); }
    static ExactReal pow2(long e);

    double to_double() const;
    std::string str() const;

  private:
    Rational rat_;
    long pi_half_;
};

// ---------------------------------------------------------------------------
// Gamma-ratio primitives, all exact.

/// Pochhammer (x)_(m) = Gamma(x+m)/Gamma(x) as a finite product:
/// x(x+1)...(x+m-1) for m >= 0, 1/((x-1)...(x+m)) for m < 0.
/// Throws PoleError when a denominator factor vanishes.
ExactReal poch(const Rational& x, long m);
inline ExactReal poch(const HalfInt& x, long m) { return poch(x.to_rational(), m); }

/// Generalized binomial Gamma(k+1)/(Gamma(k-j+1)Gamma(j+1)). A Gamma pole in
/// the denominator gives exactly 0 (this also covers j < 0 and, through the
/// product form, negative integer k).
ExactReal binom_gen(const Rational& k, long j);
inline ExactReal binom_gen(const HalfInt& k, long j) { return binom_gen(k.to_rational(), j); }

/// Gamma at integer and half-integer points. Half-integers carry sqrt(pi).
ExactReal gamma_half(const HalfInt& x);

/// 1/Gamma(x); exactly 0 at the nonpositive-integer poles.
ExactReal recip_gamma(const HalfInt& x);

/// Gamma(x+m)/Gamma(x) where m may itself be a half-integer.
ExactReal poch_half(const HalfInt& x, const HalfInt& m);

ExactReal factorial(long n);

// ---------------------------------------------------------------------------
// Conversion to the float side.

float128 f128_from_rational(const Rational& r);
float128 f128_from_exact(const ExactReal& v);

/// Decimal value within one unit in the last requested significant digit.
/// digits in [15, 33].
HighPrecisionFloat to_float(const ExactReal& v, int digits);

// ---------------------------------------------------------------------------
// NumericValue: a finished moment, exact when possible.

using NumericValue = std::variant<ExactReal, HighPrecisionFloat>;

double numeric_to_double(const NumericValue& v);

}  // namespace rmt
