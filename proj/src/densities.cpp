#include "rmt/densities.hpp"

#include <cmath>
#include <memory>
#include <vector>

#include "rmt/orthopoly.hpp"
#include "rmt/quadrature.hpp"

namespace rmt {

namespace {

struct WeightFns {
    std::function<double(double)> w2;  // beta=2 weight of the monic system
    std::function<double(double)> w1;  // e^{-V_1}; only built for beta=1 models
    double lo, hi;
};

double dbl(const HalfInt& h) { return h.to_double(); }

WeightFns make_weights(Family family, double a, double b, double tail_power) {
    switch (family) {
        case Family::Gaussian: {
            double cut = weight_tail_cut(tail_power, 0, 1);
            return {[](double x) { return std::exp(-x * x); },
                    [](double x) { return std::exp(-x * x / 2); }, -cut, cut};
        }
        case Family::Laguerre: {
            // beta=1 parts decay like e^{-x/2}; cut on the slower tail.
            double cut = weight_tail_cut(std::max(b, 0.0) + tail_power, 0.5, 0);
            return {[b](double x) { return std::pow(x, b) * std::exp(-x); },
                    [b](double x) { return std::pow(x, (b - 1) / 2) * std::exp(-x / 2); }, 0, cut};
        }
        case Family::Jacobi:
            return {[a, b](double x) { return std::pow(x, b) * std::pow(1 - x, a); },
                    [a, b](double x) {
                        return std::pow(x, (b - 1) / 2) * std::pow(1 - x, (a - 1) / 2);
                    },
                    0, 1};
    }
    throw std::logic_error("make_weights");
}

DensityModel::Sub pick_sub(Family family, int beta) {
    if (family == Family::Jacobi) return DensityModel::Sub::Sin2;
    if (family == Family::Laguerre && beta == 1) return DensityModel::Sub::Sqrt;
    return DensityModel::Sub::None;
}

// Transform an integrand g on the x support into the substituted variable.
template <class G>
QuadOutcome integrate_model(const DensityModel& m, const G& g, double abs_tol, int max_panels) {
    switch (m.sub) {
        case DensityModel::Sub::None:
            return integrate_adaptive(g, m.lo, m.hi, abs_tol, 0.0, max_panels);
        case DensityModel::Sub::Sqrt: {
            auto f = [&](double u) { return g(u * u) * 2 * u; };
            return integrate_adaptive(f, std::sqrt(m.lo), std::sqrt(m.hi), abs_tol, 0.0,
                                      max_panels);
        }
        case DensityModel::Sub::Sin2: {
            auto f = [&](double t) {
                double s = std::sin(t);
                return g(s * s) * std::sin(2 * t);
            };
            return integrate_adaptive(f, std::asin(std::sqrt(m.lo)), std::asin(std::sqrt(m.hi)),
                                      abs_tol, 0.0, max_panels);
        }
    }
    throw std::logic_error("integrate_model");
}

}  // namespace

DensityModel density_beta2(Family family, const HalfInt& a, const HalfInt& b, long n) {
    auto sys = std::make_shared<OrthoPolySystem>(family, a, b, static_cast<int>(n));
    WeightFns w = make_weights(family, dbl(a), dbl(b), 2.0 * n + 14);
    double hn1 = norm_h(family, a, b, n - 1).to_double();
    DensityModel m;
    m.family = family;
    m.beta = 2;
    m.n = n;
    m.lo = w.lo;
    m.hi = w.hi;
    m.sub = pick_sub(family, 2);
    m.rho = [sys, w2 = w.w2, hn1, n](double x) {
        double pn = sys->eval(n, x), pn1 = sys->eval(n - 1, x);
        double dn = sys->eval_deriv(n, x), dn1 = sys->eval_deriv(n - 1, x);
        return w2(x) * (dn * pn1 - pn * dn1) / hn1;
    };
    return m;
}

DensityModel density_beta2_sumform(Family family, const HalfInt& a, const HalfInt& b, long n) {
    auto sys = std::make_shared<OrthoPolySystem>(family, a, b, static_cast<int>(n));
    auto hs = std::make_shared<std::vector<double>>();
    for (long j = 0; j < n; ++j) hs->push_back(norm_h(family, a, b, j).to_double());
    DensityModel m = density_beta2(family, a, b, n);
    WeightFns w = make_weights(family, dbl(a), dbl(b), 2.0 * n + 14);
    m.rho = [sys, hs, w2 = w.w2, n](double x) {
        std::vector<double> p(n);
        sys->eval_all(static_cast<int>(n) - 1, x, p.data());
        double s = 0;
        for (long j = 0; j < n; ++j) s += p[j] * p[j] / (*hs)[j];
        return w2(x) * s;
    };
    return m;
}

DensityModel density_beta4(Family family, const HalfInt& a_pub, const HalfInt& b_pub, long n) {
    // Tilde weights: the monic system parameters are the doubled ones.
    HalfInt A = a_pub + a_pub, B = b_pub + b_pub;
    auto sys = std::make_shared<OrthoPolySystem>(family, A, B, static_cast<int>(2 * n));
    WeightFns w = make_weights(family, dbl(A), dbl(B), 4.0 * n + 14);
    double h2n1 = norm_h(family, A, B, 2 * n - 1).to_double();
    double gamma = skew_gamma(family, A, B, 2 * n - 1).to_double();
    auto e4 = std::make_shared<std::vector<double>>();
    for (long j = 0; j <= n - 1; ++j)
        e4->push_back(skew_e4(family, A, B, HalfInt(j), HalfInt(n - 1)).to_double());
    DensityModel m;
    m.family = family;
    m.beta = 4;
    m.n = n;
    m.lo = w.lo;
    m.hi = w.hi;
    m.sub = pick_sub(family, 4);
    m.rho = [sys, w2 = w.w2, h2n1, gamma, e4, n](double x) {
        std::vector<double> p(2 * n + 1);
        sys->eval_all(static_cast<int>(2 * n), x, p.data());
        double d2n = sys->eval_deriv(2 * n, x), d2n1 = sys->eval_deriv(2 * n - 1, x);
        double rho2 = w2(x) * (d2n * p[2 * n - 1] - p[2 * n] * d2n1) / h2n1;
        double corr = 0;
        for (long j = 0; j <= n - 1; ++j) corr += (*e4)[j] * p[2 * j];
        corr *= gamma * w2(x) * p[2 * n];
        return 0.5 * rho2 - 0.5 * corr;
    };
    return m;
}

DensityModel density_beta1(Family family, const HalfInt& a, const HalfInt& b, long n) {
    if (n < 2 || n % 2 != 0) throw OddDimension("density_beta1: n must be even");
    auto sys = std::make_shared<OrthoPolySystem>(family, a, b, static_cast<int>(n));
    WeightFns w = make_weights(family, dbl(a), dbl(b), 2.0 * n + 14);
    double hn2 = norm_h(family, a, b, n - 2).to_double();
    double gamma = skew_gamma(family, a, b, n - 2).to_double();
    double eta = skew_eta1(family, a, b, HalfInt(n / 2 - 2)).to_double();
    auto e1 = std::make_shared<std::vector<double>>();
    for (long j = 0; j + 2 <= n / 2; ++j)
        e1->push_back(skew_e1(family, a, b, HalfInt(j), HalfInt(n / 2 - 2)).to_double());

    // eps[w1](x) = W(x) - W_tot/2 with W(x) the cumulative w1 mass; the
    // cumulative integral runs in the substituted variable for endpoint
    // regularity.
    DensityModel::Sub sub = pick_sub(family, 1);
    double lo = w.lo, hi = w.hi;
    auto w1 = w.w1;
    auto cumulative = [sub, lo, w1](double x, double tol) {
        switch (sub) {
            case DensityModel::Sub::None:
                return integrate_adaptive(w1, lo, x, tol, 1e-13).value;
            case DensityModel::Sub::Sqrt: {
                auto f = [&](double u) { return w1(u * u) * 2 * u; };
                return integrate_adaptive(f, std::sqrt(lo), std::sqrt(x), tol, 1e-13).value;
            }
            case DensityModel::Sub::Sin2: {
                auto f = [&](double t) {
                    double s = std::sin(t);
                    return w1(s * s) * std::sin(2 * t);
                };
                return integrate_adaptive(f, 0.0, std::asin(std::sqrt(x)), tol, 1e-13).value;
            }
        }
        return 0.0;
    };
    double wtot = cumulative(hi, 1e-13);
    double eps_tol = std::max(wtot * 1e-13, 1e-15);
    auto eps = [cumulative, wtot, eps_tol](double x) {
        return cumulative(x, eps_tol) - wtot / 2;
    };

    DensityModel m;
    m.family = family;
    m.beta = 1;
    m.n = n;
    m.lo = lo;
    m.hi = hi;
    m.sub = sub;
    m.rho = [sys, w2 = w.w2, w1, hn2, gamma, eta, e1, eps, n](double x) {
        std::vector<double> p(n);
        sys->eval_all(static_cast<int>(n) - 1, x, p.data());
        double dn1 = sys->eval_deriv(n - 1, x), dn2 = sys->eval_deriv(n - 2, x);
        double rho2 = w2(x) * (dn1 * p[n - 2] - p[n - 1] * dn2) / hn2;
        double corr = 0;
        for (size_t j = 0; j < e1->size(); ++j) corr += (*e1)[j] * p[2 * j + 1];
        corr *= gamma * w2(x) * p[n - 1];
        double tail = gamma * eta * w1(x) * p[n - 1] * eps(x);
        return rho2 - corr + tail;
    };
    return m;
}

HighPrecisionFloat quad_moment(const DensityModel& model, double k, double abs_tol) {
    auto g = [&](double x) { return std::pow(x, k) * model.rho(x); };
    int budget = model.beta == 1 ? 20000 : 6000;  // eps-transform models cost more per eval
    QuadOutcome out = integrate_model(model, g, abs_tol, budget);
    if (!out.converged)
        throw QuadratureFailure("quad_moment: tolerance not met (err " +
                                std::to_string(out.err_bound) + ")");
    return {static_cast<float128>(out.value), static_cast<float128>(out.err_bound)};
}

double quad_public_moment(const EnsembleSpec& e, double k, double abs_tol) {
    if (!e.n.is_integer()) throw InvalidParameter("quad_public_moment: integer n required");
    long n = static_cast<long>(mpz_get_si(e.n.integer().get_mpz_t()));
    switch (e.beta) {
        case 2:
            return quad_moment(density_beta2(e.family, e.a, e.b, n), k, abs_tol).value_d();
        case 1:
            return quad_moment(density_beta1(e.family, e.a, e.b, n), k, abs_tol).value_d();
        case 4: {
            DensityModel m = density_beta4(e.family, e.a, e.b, n);
            double tilde = quad_moment(m, k, abs_tol).value_d();
            // Scale substitution x -> x/2 (Laguerre) or x -> x/sqrt(2)
            // (Gaussian) maps tilde onto the public weights.
            if (e.family == Family::Laguerre) return std::pow(2.0, -k) * tilde;
            if (e.family == Family::Gaussian) return std::pow(2.0, -k / 2) * tilde;
            return tilde;
        }
    }
    throw InvalidParameter("quad_public_moment: beta must be 1, 2 or 4");
}

}  // namespace rmt
