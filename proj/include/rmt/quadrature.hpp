#pragma once
// Adaptive 1-d quadrature on a Gauss7/Kronrod15 pair with worst-panel
// refinement. Semi-infinite supports are handled by the callers through
// weight-based tail cuts; the truncation error is folded into the bound.

#include <cmath>
#include <functional>
#include <queue>
#include <vector>

#include "rmt/ensemble.hpp"

namespace rmt {

struct QuadOutcome {
    double value = 0;
    double err_bound = 0;
    long evals = 0;
    bool converged = false;
};

namespace quad_detail {

// QUADPACK dqk15 abscissae and weights on [-1, 1].
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
void gk15(const F& f, double a, double b, double& result, double& err) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fc = f(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        double dx = h * kXgk[i];
        double fsum = f(c - dx) + f(c + dx);
        resk += kWgk[i] * fsum;
        if (i % 2 == 1) resg += kWg[i / 2] * fsum;
    }
    result = resk * h;
    err = std::abs((resk - resg) * h);
}

}  // namespace quad_detail

/// Integrate f over [a, b] until the summed panel error meets
/// max(abs_tol, rel_tol * |integral|) or the panel budget runs out.
template <class F>
QuadOutcome integrate_adaptive(const F& f, double a, double b, double abs_tol,
                               double rel_tol = 0.0, int max_panels = 6000) {
    struct Panel {
        double err, a, b, value;
        bool operator<(const Panel& o) const { return err < o.err; }
    };
    QuadOutcome out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    std::priority_queue<Panel> panels;
    double v, e;
    quad_detail::gk15(f, a, b, v, e);
    out.evals = 15;
    panels.push({e, a, b, v});
    double total = v, total_err = e;
    int count = 1;
    while (total_err > std::max(abs_tol, rel_tol * std::abs(total)) && count < max_panels) {
        Panel p = panels.top();
        panels.pop();
        total -= p.value;
        total_err -= p.err;
        double mid = 0.5 * (p.a + p.b);
        if (mid <= p.a || mid >= p.b) {  // interval exhausted at double precision
            total += p.value;
            total_err += p.err;
            break;
        }
        for (auto [lo, hi] : {std::pair{p.a, mid}, std::pair{mid, p.b}}) {
            quad_detail::gk15(f, lo, hi, v, e);
            out.evals += 15;
            panels.push({e, lo, hi, v});
            total += v;
            total_err += e;
        }
        ++count;
    }
    out.value = total;
    out.err_bound = total_err;
    out.converged = total_err <= std::max(abs_tol, rel_tol * std::abs(total));
    return out;
}

/// Convenience wrapper that throws QuadratureFailure on non-convergence.
double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, double rel_tol = 0.0, int max_panels = 6000);

/// Gauss-Legendre nodes and weights on [0, 1], cached per order.
struct GaussRule {
    std::vector<double> x, w;
};
const GaussRule& gauss_legendre_01(int order);

/// Smallest x >= x0 with x^p exp(-c1 x - c2 x^2) below exp(log_cut) relative
/// to the function's scale; used to truncate Laguerre/Hermite tails.
double weight_tail_cut(double p, double c1, double c2, double log_cut = -70.0);

}  // namespace rmt
