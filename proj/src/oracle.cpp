#include "rmt/oracle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <random>
#include <thread>

#include "rmt/quadrature.hpp"

namespace rmt {

namespace {

double dbl(const HalfInt& h) { return h.to_double(); }

long int_of(const HalfInt& h, const char* who) {
    if (!h.is_integer()) throw InvalidParameter(std::string(who) + ": integer value required");
    return static_cast<long>(mpz_get_si(h.integer().get_mpz_t()));
}

// Deterministic normal deviates (Box-Muller on explicit 53-bit uniforms) so
// that estimates do not depend on the standard library's distribution.
class Rng {
  public:
    explicit Rng(std::uint64_t s) : eng_(s) {}
    double uniform() {  // (0, 1)
        return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1p-53;
    }
    double normal() {
        if (have_) {
            have_ = false;
            return cached_;
        }
        double u1 = uniform(), u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1)), t = 2.0 * M_PI * u2;
        cached_ = r * std::sin(t);
        have_ = true;
        return r * std::cos(t);
    }

  private:
    std::mt19937_64 eng_;
    bool have_ = false;
    double cached_ = 0;
};

std::uint64_t stream_seed(std::uint64_t seed, int stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(stream) + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using cplx = std::complex<double>;

MatrixXd gaussian_real(Rng& rng, long rows, long cols, double sd) {
    MatrixXd m(rows, cols);
    for (long j = 0; j < cols; ++j)
        for (long i = 0; i < rows; ++i) m(i, j) = sd * rng.normal();
    return m;
}

MatrixXcd gaussian_complex(Rng& rng, long rows, long cols, double sd_component) {
    MatrixXcd m(rows, cols);
    for (long j = 0; j < cols; ++j)
        for (long i = 0; i < rows; ++i)
            m(i, j) = cplx(sd_component * rng.normal(), sd_component * rng.normal());
    return m;
}

// 2r x 2c complex embedding of an r x c quaternion Gaussian matrix with
// independent N(0, sd^2) components.
MatrixXcd gaussian_quaternion_embedded(Rng& rng, long r, long c, double sd) {
    MatrixXcd m(2 * r, 2 * c);
    for (long j = 0; j < c; ++j)
        for (long i = 0; i < r; ++i) {
            double w = sd * rng.normal(), x = sd * rng.normal();
            double y = sd * rng.normal(), z = sd * rng.normal();
            m(2 * i, 2 * j) = cplx(w, x);
            m(2 * i, 2 * j + 1) = cplx(y, z);
            m(2 * i + 1, 2 * j) = cplx(-y, z);
            m(2 * i + 1, 2 * j + 1) = cplx(w, -x);
        }
    return m;
}

std::vector<double> dedupe_pairs(const Eigen::VectorXd& ev) {
    std::vector<double> out;
    for (long i = 0; i < ev.size(); i += 2) out.push_back(0.5 * (ev[i] + ev[i + 1]));
    return out;
}

std::vector<double> sample_gaussian_matrix(Rng& rng, int beta, long n) {
    if (beta == 1) {
        // P(H) ~ exp(-tr H^2/2): H_ii ~ N(0,1), H_ij ~ N(0,1/2)
        MatrixXd a = gaussian_real(rng, n, n, 1.0);
        MatrixXd h = 0.5 * (a + a.transpose());
        Eigen::SelfAdjointEigenSolver<MatrixXd> es(h, Eigen::EigenvaluesOnly);
        return {es.eigenvalues().data(), es.eigenvalues().data() + n};
    }
    if (beta == 2) {
        // P(H) ~ exp(-tr H^2): H_ii ~ N(0,1/2), Re/Im H_ij ~ N(0,1/4)
        MatrixXcd a = gaussian_complex(rng, n, n, 1.0 / std::sqrt(2.0));
        MatrixXcd h = 0.5 * (a + a.adjoint());
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h, Eigen::EigenvaluesOnly);
        return {es.eigenvalues().data(), es.eigenvalues().data() + n};
    }
    // beta = 4: self-dual with exp(-2 sum x^2); component sd derived from the
    // embedding trace, diag N(0,1/4), off-diagonal components N(0,1/8).
    MatrixXcd h(2 * n, 2 * n);
    h.setZero();
    double sd_d = 0.5, sd_o = std::sqrt(1.0 / 8.0);
    MatrixXcd A(n, n), B(n, n);
    for (long i = 0; i < n; ++i) A(i, i) = sd_d * rng.normal();
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) {
            A(i, j) = cplx(sd_o * rng.normal(), sd_o * rng.normal());
            A(j, i) = std::conj(A(i, j));
        }
    B.setZero();
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) {
            B(i, j) = cplx(sd_o * rng.normal(), sd_o * rng.normal());
            B(j, i) = -B(i, j);
        }
    h.topLeftCorner(n, n) = A;
    h.topRightCorner(n, n) = B;
    h.bottomLeftCorner(n, n) = -B.conjugate();
    h.bottomRightCorner(n, n) = A.conjugate();
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    return dedupe_pairs(es.eigenvalues());
}

std::vector<double> sample_wishart(Rng& rng, int beta, long n, long bpar) {
    long n1 = n + bpar;
    if (beta == 1) {
        MatrixXd x = gaussian_real(rng, n1, n, 1.0);
        MatrixXd w = x.transpose() * x;
        Eigen::SelfAdjointEigenSolver<MatrixXd> es(w, Eigen::EigenvaluesOnly);
        return {es.eigenvalues().data(), es.eigenvalues().data() + n};
    }
    if (beta == 2) {
        MatrixXcd x = gaussian_complex(rng, n1, n, 1.0 / std::sqrt(2.0));
        MatrixXcd w = x.adjoint() * x;
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es(w, Eigen::EigenvaluesOnly);
        return {es.eigenvalues().data(), es.eigenvalues().data() + n};
    }
    MatrixXcd x = gaussian_quaternion_embedded(rng, n1, n, 0.5);
    MatrixXcd w = x.adjoint() * x;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(w, Eigen::EigenvaluesOnly);
    return dedupe_pairs(es.eigenvalues());
}

std::vector<double> sample_manova(Rng& rng, int beta, long n, long apar, long bpar) {
    long n1 = n + bpar, n2 = n + apar;
    if (beta == 1) {
        MatrixXd x = gaussian_real(rng, n1, n, 1.0), y = gaussian_real(rng, n2, n, 1.0);
        MatrixXd w1 = x.transpose() * x, w2 = y.transpose() * y;
        Eigen::GeneralizedSelfAdjointEigenSolver<MatrixXd> es(w1, w1 + w2,
                                                              Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
        return {es.eigenvalues().data(), es.eigenvalues().data() + n};
    }
    if (beta == 2) {
        MatrixXcd x = gaussian_complex(rng, n1, n, 1.0), y = gaussian_complex(rng, n2, n, 1.0);
        MatrixXcd w1 = x.adjoint() * x, w2 = y.adjoint() * y;
        Eigen::GeneralizedSelfAdjointEigenSolver<MatrixXcd> es(w1, w1 + w2,
                                                               Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
        return {es.eigenvalues().data(), es.eigenvalues().data() + n};
    }
    MatrixXcd x = gaussian_quaternion_embedded(rng, n1, n, 1.0);
    MatrixXcd y = gaussian_quaternion_embedded(rng, n2, n, 1.0);
    MatrixXcd w1 = x.adjoint() * x, w2 = y.adjoint() * y;
    Eigen::GeneralizedSelfAdjointEigenSolver<MatrixXcd> es(w1, w1 + w2,
                                                           Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
    return dedupe_pairs(es.eigenvalues());
}

}  // namespace

bool matrix_model_realizable(const EnsembleSpec& e) {
    if (!e.n.is_integer()) return false;
    switch (e.family) {
        case Family::Gaussian:
            return true;
        case Family::Laguerre:
            return e.b.is_integer() && e.b >= HalfInt(0);
        case Family::Jacobi:
            return e.a.is_integer() && e.a >= HalfInt(0) && e.b.is_integer() && e.b >= HalfInt(0);
    }
    return false;
}

double jpdf_log_density(const EnsembleSpec& e, const std::vector<double>& x) {
    double a = dbl(e.a), b = dbl(e.b), beta = e.beta;
    double lp = 0;
    for (double xi : x) {
        switch (e.family) {
            case Family::Gaussian:
                lp += -beta * xi * xi / 2;
                break;
            case Family::Laguerre:
                if (xi <= 0) return -std::numeric_limits<double>::infinity();
                lp += (beta / 2 * (b + 1) - 1) * std::log(xi) - beta * xi / 2;
                break;
            case Family::Jacobi:
                if (xi <= 0 || xi >= 1) return -std::numeric_limits<double>::infinity();
                lp += (beta / 2 * (b + 1) - 1) * std::log(xi) +
                      (beta / 2 * (a + 1) - 1) * std::log(1 - xi);
                break;
        }
    }
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j)
            lp += beta * std::log(std::abs(x[j] - x[i]));
    return lp;
}

struct SpectrumSampler::Impl {
    EnsembleSpec e;
    Rng rng;
    int stream_id;
    long n;
    bool use_metropolis;
    double iact = 1.0;
    // Metropolis state
    std::vector<double> state;
    double step = 0.3;
    long thin = 1;

    Impl(const EnsembleSpec& spec, std::uint64_t seed, int stream)
        : e(spec), rng(stream_seed(seed, stream)), stream_id(stream) {
        n = int_of(e.n, "SpectrumSampler");
        use_metropolis = !matrix_model_realizable(e);
        if (use_metropolis) init_metropolis();
    }

    void init_metropolis() {
        state.resize(n);
        // Spread starting points over the bulk of the support.
        for (long i = 0; i < n; ++i) {
            double q = (i + 1.0) / (n + 1.0);
            switch (e.family) {
                case Family::Gaussian:
                    state[i] = 2.0 * (q - 0.5) * std::sqrt(2.0 * n / e.beta + 1);
                    break;
                case Family::Laguerre:
                    state[i] = q * (2.0 * n + 2 * std::max(0.0, dbl(e.b)) + 2) / 1.0;
                    break;
                case Family::Jacobi:
                    state[i] = q;
                    break;
            }
        }
        switch (e.family) {
            case Family::Gaussian:
                step = 0.7;
                break;
            case Family::Laguerre:
                step = 0.4 * std::sqrt(std::max(1.0, dbl(e.b) + n));
                break;
            case Family::Jacobi:
                step = 0.15;
                break;
        }
        // Burn-in with acceptance-driven step adaptation, then freeze.
        double lp = jpdf_log_density(e, state);
        long accept = 0, tries = 0;
        for (long sweep = 0; sweep < 400 + 200 * n; ++sweep) {
            for (long i = 0; i < n; ++i) {
                accept += metropolis_update(lp, i) ? 1 : 0;
                ++tries;
            }
            if (sweep % 50 == 49) {
                double rate = static_cast<double>(accept) / tries;
                step *= rate > 0.35 ? 1.15 : 0.85;
                accept = 0;
                tries = 0;
            }
        }
        // Pilot pass for the integrated autocorrelation of sum x_j.
        const long pilot = 3000;
        std::vector<double> obs(pilot);
        for (long t = 0; t < pilot; ++t) {
            sweep_once(lp);
            double s = 0;
            for (double v : state) s += v;
            obs[t] = s;
        }
        double mean = 0;
        for (double v : obs) mean += v;
        mean /= pilot;
        double var = 0;
        for (double v : obs) var += (v - mean) * (v - mean);
        var /= pilot;
        double tau = 1.0;
        if (var > 0) {
            for (long lag = 1; lag < 250; ++lag) {
                double c = 0;
                for (long t = 0; t + lag < pilot; ++t) c += (obs[t] - mean) * (obs[t + lag] - mean);
                c /= (pilot - lag) * var;
                if (c < 0.03) break;
                tau += 2 * c;
            }
        }
        iact = tau;
        thin = std::clamp<long>(std::lround(tau), 1, 150);
    }

    bool last_accepted_ = false;
    bool metropolis_update(double& lp, long i) {
        double old = state[i];
        state[i] = old + step * rng.normal();
        double lp_new = jpdf_log_density(e, state);
        if (std::log(rng.uniform()) < lp_new - lp) {
            lp = lp_new;
            last_accepted_ = true;
            return true;
        }
        state[i] = old;
        last_accepted_ = false;
        return false;
    }

    void sweep_once(double& lp) {
        for (long i = 0; i < n; ++i) metropolis_update(lp, i);
    }

    SpectrumSample next() {
        if (!use_metropolis) {
            switch (e.family) {
                case Family::Gaussian:
                    return {sample_gaussian_matrix(rng, e.beta, n), stream_id};
                case Family::Laguerre:
                    return {sample_wishart(rng, e.beta, n, int_of(e.b, "wishart b")), stream_id};
                case Family::Jacobi:
                    return {sample_manova(rng, e.beta, n, int_of(e.a, "manova a"),
                                          int_of(e.b, "manova b")),
                            stream_id};
            }
        }
        double lp = jpdf_log_density(e, state);
        for (long t = 0; t < thin; ++t) sweep_once(lp);
        return {state, stream_id};
    }
};

SpectrumSampler::SpectrumSampler(const EnsembleSpec& e, std::uint64_t seed, int stream_id)
    : impl_(std::make_unique<Impl>(e, seed, stream_id)) {}
SpectrumSampler::~SpectrumSampler() = default;
SpectrumSampler::SpectrumSampler(SpectrumSampler&&) noexcept = default;

SpectrumSample SpectrumSampler::next() { return impl_->next(); }
bool SpectrumSampler::metropolis() const { return impl_->use_metropolis; }
double SpectrumSampler::iact() const { return impl_->iact; }

namespace {

int thread_budget() {
    if (const char* env = std::getenv("RMTM_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

}  // namespace

MCEstimate mc_moment(const SamplerConfig& cfg, double k) {
    long n = int_of(cfg.ensemble.n, "mc_moment");
    if (k == 0) return {static_cast<double>(n), 0.0, cfg.streams * cfg.samples_per_stream};
    Rational kr(k);
    kr.canonicalize();
    if (!moment_converges(cfg.ensemble, kr))
        throw DivergentMoment("mc_moment: divergent moment order");

    struct StreamStat {
        double sum = 0, sumsq = 0;
        bool metro = false;
        double iact = 1;
    };
    std::vector<StreamStat> stats(cfg.streams);
    auto run_stream = [&](int s) {
        SpectrumSampler sampler(cfg.ensemble, cfg.seed, s);
        StreamStat st;
        st.metro = sampler.metropolis();
        st.iact = sampler.iact();
        for (long i = 0; i < cfg.samples_per_stream; ++i) {
            SpectrumSample sample = sampler.next();
            double v = 0;
            for (double x : sample.eigenvalues) v += std::pow(x, k);
            st.sum += v;
            st.sumsq += v * v;
        }
        stats[s] = st;
    };

    int workers = std::min(thread_budget(), cfg.streams);
    if (workers <= 1) {
        for (int s = 0; s < cfg.streams; ++s) run_stream(s);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next_stream{0};
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int s; (s = next_stream.fetch_add(1)) < cfg.streams;) run_stream(s);
            });
        for (auto& t : pool) t.join();
    }

    long total = cfg.streams * cfg.samples_per_stream;
    double sum = 0, sumsq = 0;
    bool metro = false;
    double iact = 1;
    for (const auto& st : stats) {
        sum += st.sum;
        sumsq += st.sumsq;
        metro = metro || st.metro;
        iact = std::max(iact, st.iact);
    }
    double mean = sum / total;
    double var = std::max(0.0, sumsq / total - mean * mean);
    double se = std::sqrt(var / total);
    if (metro) se *= std::sqrt(iact);  // residual correlation after thinning
    return {mean, se, total, metro, iact};
}

namespace {

struct BruteSetup {
    std::function<double(double)> weight;   // in the substituted variable u
    std::function<double(double)> x_of_u;   // map back to eigenvalue
    double lo, hi;
};

BruteSetup brute_setup(const EnsembleSpec& e, long n, double k) {
    double a = dbl(e.a), b = dbl(e.b), beta = e.beta;
    switch (e.family) {
        case Family::Gaussian: {
            // Vandermonde growth and the observable add polynomial powers.
            double cut = weight_tail_cut(beta * (n - 1) + std::abs(k) + 20, 0, beta / 2.0);
            return {[beta](double u) { return std::exp(-beta * u * u / 2); },
                    [](double u) { return u; }, -cut, cut};
        }
        case Family::Laguerre: {
            double p = beta / 2 * (b + 1) - 1;
            double cut = weight_tail_cut(p + beta * (n - 1) + std::max(k, 0.0) + 20, beta / 2.0, 0);
            // substitution x = u^2 regularizes half-integer powers at the edge
            double pu = 2 * p + 1;
            return {[pu, beta](double u) {
                        return (pu == 0 ? 2.0 : 2.0 * std::pow(u, pu)) *
                               std::exp(-beta * u * u / 2);
                    },
                    [](double u) { return u * u; }, 0, std::sqrt(cut)};
        }
        case Family::Jacobi: {
            // x = sin^2 t
            double pb = beta / 2 * (b + 1) - 1, pa = beta / 2 * (a + 1) - 1;
            return {[pb, pa](double t) {
                        double s = std::sin(t), c = std::cos(t);
                        return 2 * std::pow(s, 2 * pb + 1) * std::pow(c, 2 * pa + 1);
                    },
                    [](double t) {
                        double s = std::sin(t);
                        return s * s;
                    },
                    0, M_PI / 2};
        }
    }
    throw std::logic_error("brute_setup");
}

}  // namespace

double bruteforce_jpdf_moment(const EnsembleSpec& e, double k, double rel_tol) {
    long n = int_of(e.n, "bruteforce_jpdf_moment");
    if (n < 1 || n > 3) throw InvalidParameter("bruteforce_jpdf_moment: n must be 1, 2 or 3");
    if (!moment_converges(e, [&] {
            Rational kr(k);
            kr.canonicalize();
            return kr;
        }()))
        throw DivergentMoment("bruteforce_jpdf_moment: divergent moment order");

    BruteSetup s = brute_setup(e, n, k);
    double beta = e.beta;
    // Ordered sector u_1 < ... < u_n; both the symmetric observable and the
    // jpdf pick up the same n! so the ratio is unaffected.
    auto vandermonde = [&](const std::vector<double>& xs) {
        double v = 1;
        for (size_t i = 0; i < xs.size(); ++i)
            for (size_t j = i + 1; j < xs.size(); ++j) v *= std::pow(xs[j] - xs[i], beta);
        return v;
    };
    auto observable = [&](const std::vector<double>& xs) {
        double v = 0;
        for (double x : xs) v += std::pow(x, k);
        return v;
    };

    // Ordered simplex mapped to the unit box: u_d is a fraction of the
    // interval below its successor; integrand stays smooth and a tensor
    // Gauss-Legendre sweep converges geometrically. Numerator and
    // normalization are accumulated in the same sweep.
    auto sweep = [&](int order) -> std::pair<double, double> {
        const GaussRule& g = gauss_legendre_01(order);
        double num = 0, den = 0;
        std::vector<double> us(n), xs(n);
        std::vector<long> idx(n, 0);
        for (;;) {
            double jac = 1, top = s.hi;
            for (long d = n - 1; d >= 0; --d) {
                double width = top - s.lo;
                us[d] = s.lo + width * g.x[idx[d]];
                jac *= width * g.w[idx[d]];
                top = us[d];
            }
            double wprod = 1;
            for (long d = 0; d < n; ++d) {
                xs[d] = s.x_of_u(us[d]);
                wprod *= s.weight(us[d]);
            }
            double base = jac * wprod * vandermonde(xs);
            den += base;
            num += base * observable(xs);
            long d = 0;
            while (d < n && ++idx[d] == order) idx[d++] = 0;
            if (d == n) break;
        }
        return {num, den};
    };

    double best = 0;
    double prev = 0;
    bool have_prev = false, converged = false;
    for (int order : {24, 34, 48, 68, 96, 136}) {
        auto [num, den] = sweep(order);
        if (den == 0 || !std::isfinite(num / den))
            throw QuadratureFailure("bruteforce_jpdf_moment: normalization failed");
        best = num / den;
        // absolute floor covers exact zeros (odd Gaussian observables)
        if (have_prev &&
            std::abs(best - prev) <= std::max(0.3 * rel_tol * std::abs(best), 1e-11)) {
            converged = true;
            break;
        }
        prev = best;
        have_prev = true;
    }
    if (!converged)
        throw QuadratureFailure("bruteforce_jpdf_moment: tensor rule did not converge");
    return best;
}

}  // namespace rmt
