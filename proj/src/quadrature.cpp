#include "rmt/quadrature.hpp"

#include <map>
#include <mutex>

namespace rmt {

// Newton iteration on the Legendre polynomial, mapped to [0, 1].
const GaussRule& gauss_legendre_01(int order) {
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    GaussRule rule;
    rule.x.resize(order);
    rule.w.resize(order);
    int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double pp = 0;
        for (int it2 = 0; it2 < 100; ++it2) {
            double p0 = 1, p1 = 0;
            for (int j = 0; j < order; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) * z * p1 - j * p2) / (j + 1);
            }
            pp = order * (z * p0 - p1) / (z * z - 1);
            double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        rule.x[i] = 0.5 * (1 - z);
        rule.x[order - 1 - i] = 0.5 * (1 + z);
        rule.w[i] = rule.w[order - 1 - i] = 1.0 / ((1 - z * z) * pp * pp);
    }
    return cache.emplace(order, std::move(rule)).first->second;
}

double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, double rel_tol, int max_panels) {
    QuadOutcome out = integrate_adaptive(f, a, b, abs_tol, rel_tol, max_panels);
    if (!out.converged)
        throw QuadratureFailure("adaptive quadrature: tolerance not met (err " +
                                std::to_string(out.err_bound) + ")");
    return out.value;
}

double weight_tail_cut(double p, double c1, double c2, double log_cut) {
    // Peak of log w(x) = p log x - c1 x - c2 x^2 on x > 0.
    double xpeak = 1.0;
    if (c2 > 0)
        xpeak = (std::sqrt(c1 * c1 + 8 * c2 * std::max(p, 0.5)) - c1) / (4 * c2);
    else if (c1 > 0)
        xpeak = std::max(p, 0.5) / c1;
    auto logw = [&](double x) { return p * std::log(x) - c1 * x - c2 * x * x; };
    double target = logw(std::max(xpeak, 1e-12)) + log_cut;
    double x = std::max(xpeak * 2, xpeak + 5);
    for (int it = 0; it < 200 && logw(x) > target; ++it) x *= 1.5;
    // Bisect back for a tight-ish cut.
    double lo = xpeak, hi = x;
    for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        (logw(mid) > target ? lo : hi) = mid;
    }
    return hi;
}

}  // namespace rmt
