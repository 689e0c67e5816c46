#include "rmt/exact.hpp"

#include <quadmath.h>

#include <cmath>

namespace rmt {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
        return make_rational(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("parse_rational: bad decimal '" + s + "'");
        BigInt num(digits), den(1);
        for (size_t i = 0; i < frac_len; ++i) den *= 10;
        return make_rational(num, den);
    }
    return make_rational(BigInt(s), 1);
}

HalfInt HalfInt::from_rational(const Rational& r) {
    Rational t = r * 2;
    t.canonicalize();
    if (t.get_den() != 1)
        throw std::invalid_argument("HalfInt: " + rational_str(r) + " is not a half-integer");
    return from_twice(t.get_num());
}

BigInt HalfInt::integer() const {
    if (!is_integer()) throw std::logic_error("HalfInt: not an integer: " + str());
    return twice_ / 2;
}

BigInt HalfInt::floor() const {
    BigInt q;
    mpz_fdiv_q_ui(q.get_mpz_t(), twice_.get_mpz_t(), 2);
    return q;
}

HalfInt HalfInt::half() const {
    if (!is_integer())
        throw std::invalid_argument("HalfInt: half of " + str() + " is not a half-integer");
    return from_twice(twice_ / 2);
}

std::string HalfInt::str() const {
    if (is_integer()) return integer().get_str();
    return twice_.get_str() + "/2";
}

const Rational& ExactReal::as_rational() const {
    if (pi_half_ != 0)
        throw std::logic_error("ExactReal: residual pi^(" + std::to_string(pi_half_) +
                               "/2) in a value expected to be rational");
    return rat_;
}

ExactReal ExactReal::operator*(const ExactReal& o) const {
    if (is_zero() || o.is_zero()) return ExactReal();
    return ExactReal(rat_ * o.rat_, pi_half_ + o.pi_half_);
}

ExactReal ExactReal::operator/(const ExactReal& o) const {
    if (o.is_zero()) throw PoleError("ExactReal: division by zero");
    if (is_zero()) return ExactReal();
    return ExactReal(rat_ / o.rat_, pi_half_ - o.pi_half_);
}

ExactReal ExactReal::operator+(const ExactReal& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (pi_half_ != o.pi_half_)
        throw std::logic_error("ExactReal: adding values with different pi powers");
    return ExactReal(rat_ + o.rat_, pi_half_);
}

ExactReal ExactReal::pow2(long e) {
    Rational r(1);
    if (e >= 0)
        mpz_mul_2exp(r.get_num().get_mpz_t(), r.get_num().get_mpz_t(), e);
    else
        mpz_mul_2exp(r.get_den().get_mpz_t(), r.get_den().get_mpz_t(), -e);
    return ExactReal(r);
}

double ExactReal::to_double() const { return static_cast<double>(f128_from_exact(*this)); }

std::string ExactReal::str() const {
    std::string s = rational_str(rat_);
    if (pi_half_ != 0) s += " * pi^(" + std::to_string(pi_half_) + "/2)";
    return s;
}

ExactReal poch(const Rational& x, long m) {
    Rational prod(1);
    if (m >= 0) {
        for (long i = 0; i < m; ++i) prod *= x + i;
    } else {
        for (long i = 1; i <= -m; ++i) {
            Rational f = x - i;
            f.canonicalize();
            if (f == 0)
                throw PoleError("poch: zero factor in denominator at x-" + std::to_string(i));
            prod /= f;
        }
    }
    prod.canonicalize();
    return ExactReal(prod);
}

ExactReal binom_gen(const Rational& k, long j) {
    if (j < 0) return ExactReal();
    // Gamma(k+1)/(Gamma(k-j+1) j!) = (k-j+1)_(j) / j!; the finite product is
    // exact even when k is a negative integer (ratio of two Gamma poles).
    ExactReal p = poch(k - j + 1, j);
    return p / factorial(j);
}

ExactReal gamma_half(const HalfInt& x) {
    if (x.is_integer()) {
        BigInt n = x.integer();
        if (n <= 0) throw PoleError("gamma_half: pole at nonpositive integer " + x.str());
        BigInt f;
        mpz_fac_ui(f.get_mpz_t(), mpz_get_ui(n.get_mpz_t()) - 1);
        return ExactReal(Rational(f));
    }
    // x = 1/2 + s: Gamma(1/2+s) = sqrt(pi) * (1/2)_(s), defined for all s.
    BigInt s2 = x.twice() - 1;  // 2s, even
    long s = static_cast<long>(mpz_get_si(s2.get_mpz_t())) / 2;
    return ExactReal(Rational(1), 1) * poch(Rational(1, 2), s);
}

ExactReal recip_gamma(const HalfInt& x) {
    if (x.is_integer() && x.integer() <= 0) return ExactReal();
    return ExactReal(1) / gamma_half(x);
}

ExactReal poch_half(const HalfInt& x, const HalfInt& m) {
    if (m.is_integer()) return poch(x.to_rational(), mpz_get_si(m.integer().get_mpz_t()));
    return gamma_half(x + m) / gamma_half(x);
}

ExactReal factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return ExactReal(Rational(f));
}

float128 f128_from_bigint(const BigInt& z) {
    size_t limbs = mpz_size(z.get_mpz_t());
    float128 acc = 0;
    // Top three 64-bit limbs carry more than the 113-bit mantissa.
    size_t lo = limbs > 3 ? limbs - 3 : 0;
    for (size_t i = limbs; i-- > lo;)
        acc += f128::ldexp(static_cast<float128>(mpz_getlimbn(z.get_mpz_t(), i)),
                           static_cast<int>(64 * i));
    if (mpz_sgn(z.get_mpz_t()) < 0) acc = -acc;
    return acc;
}

float128 f128_from_rational(const Rational& r) {
    if (r == 0) return 0;
    const BigInt &num = r.get_num(), &den = r.get_den();
    // Scale so the integer quotient retains ~130 bits, then undo the shift.
    long bn = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
    long bd = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    long shift = 130 - (bn - bd);
    BigInt n2 = num, d2 = den;
    if (shift > 0)
        mpz_mul_2exp(n2.get_mpz_t(), n2.get_mpz_t(), shift);
    else if (shift < 0)
        mpz_mul_2exp(d2.get_mpz_t(), d2.get_mpz_t(), -shift);
    BigInt q = n2 / d2;
    return f128::ldexp(f128_from_bigint(q), static_cast<int>(-shift));
}

float128 f128_from_exact(const ExactReal& v) {
    float128 r = f128_from_rational(v.rat());
    long e = v.pi_half_exp();
    if (e != 0) {
        float128 sp = f128::sqrt_pi();
        r *= f128::pow(sp, e);
    }
    return r;
}

HighPrecisionFloat to_float(const ExactReal& v, int digits) {
    if (digits < 15 || digits > 33)
        throw std::invalid_argument("to_float: digits must be in [15, 33]");
    if (v.is_zero()) return {0, 0};
    float128 val = f128_from_exact(v);
    // One unit in the last requested significant digit.
    int mag = static_cast<int>(floorq(log10q(fabsq(val))));
    float128 err = powq(static_cast<float128>(10), mag + 1 - digits);
    return {val, err};
}

double numeric_to_double(const NumericValue& v) {
    if (std::holds_alternative<ExactReal>(v)) return std::get<ExactReal>(v).to_double();
    return std::get<HighPrecisionFloat>(v).value_d();
}

}  // namespace rmt
