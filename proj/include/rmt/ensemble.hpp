#pragma once
// Ensemble descriptors and the moment query/result model shared by every
// engine. Weight conventions, with beta in {1,2,4}:
//   Gaussian:  exp(-beta x^2/2)                        on (-inf, inf)
//   Laguerre:  x^(beta/2 (b+1)-1) exp(-beta x/2)       on [0, inf)
//   Jacobi:    x^(beta/2 (b+1)-1) (1-x)^(beta/2 (a+1)-1) on [0, 1]

#include <optional>
#include <stdexcept>

#include "rmt/exact.hpp"

namespace rmt {

struct DivergentMoment : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OddDimension : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Family { Gaussian, Laguerre, Jacobi };

struct EnsembleSpec {
    Family family = Family::Gaussian;
    int beta = 2;
    HalfInt n;      // matrix dimension; half-integers where the formulas allow
    HalfInt b;      // Laguerre/Jacobi
    HalfInt a;      // Jacobi only

    static EnsembleSpec gaussian(int beta, HalfInt n) { return {Family::Gaussian, beta, n, 0, 0}; }
    static EnsembleSpec laguerre(int beta, HalfInt n, HalfInt b) {
        return {Family::Laguerre, beta, n, b, 0};
    }
    static EnsembleSpec jacobi(int beta, HalfInt n, HalfInt a, HalfInt b) {
        return {Family::Jacobi, beta, n, b, a};
    }
};

/// Exponent of x in the weight: beta/2 (b+1) - 1.
inline Rational weight_exponent_at_zero(const EnsembleSpec& e) {
    return Rational(e.beta, 2) * (e.b.to_rational() + 1) - 1;
}

/// Moments of order k exist iff k + weight exponent > -1, i.e. the moment
/// integral converges at the hard edge (negative k, Laguerre/Jacobi).
inline bool moment_converges(const EnsembleSpec& e, const Rational& k) {
    if (e.family == Family::Gaussian) return true;
    return k + weight_exponent_at_zero(e) > -1;
}

struct MomentQuery {
    EnsembleSpec ensemble;
    std::variant<long, double> k;  // signed integer, or real via the float path

    bool k_is_integer() const { return std::holds_alternative<long>(k); }
    long k_int() const { return std::get<long>(k); }
    double k_real() const { return std::get<double>(k); }
};

struct MomentResult {
    std::optional<NumericValue> value;
    bool convergent = true;
    long terms_summed = 0;

    static MomentResult divergent() { return {std::nullopt, false, 0}; }
    static MomentResult exact(ExactReal v, long terms = 0) {
        return {NumericValue(std::move(v)), true, terms};
    }
    static MomentResult approx(HighPrecisionFloat v, long terms = 0) {
        return {NumericValue(v), true, terms};
    }

    const ExactReal& exact_value() const {
        if (!value || !std::holds_alternative<ExactReal>(*value))
            throw std::logic_error("MomentResult: no exact value");
        return std::get<ExactReal>(*value);
    }
    double to_double() const {
        if (!value) throw std::logic_error("MomentResult: divergent, no value");
        return numeric_to_double(*value);
    }
};

}  // namespace rmt
