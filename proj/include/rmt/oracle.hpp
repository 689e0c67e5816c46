#pragma once
// Stochastic and brute-force oracles. Matrix models (Gaussian, Wishart,
// MANOVA; quaternion cases through the 2n x 2n complex embedding with
// Kramers-pair deduplication) are used whenever the ensemble parameters are
// realizable by integer channel counts; otherwise a Metropolis chain on the
// joint density takes over, with integrated-autocorrelation thinning.

#include <cstdint>
#include <memory>
#include <vector>

#include "rmt/ensemble.hpp"

namespace rmt {

struct SamplerConfig {
    EnsembleSpec ensemble;
    std::uint64_t seed = 1;
    int streams = 4;
    long samples_per_stream = 25000;
};

struct SpectrumSample {
    std::vector<double> eigenvalues;
    int stream_id = 0;
};

struct MCEstimate {
    double mean = 0;
    double std_error = 0;
    long samples = 0;
    bool metropolis = false;  // set when the fallback sampler was used
    double iact = 1.0;        // integrated autocorrelation of the pilot observable
};

/// Whether the parameters admit a direct matrix-model construction.
bool matrix_model_realizable(const EnsembleSpec& e);

/// One sampling stream; deterministic in (ensemble, seed, stream_id).
class SpectrumSampler {
  public:
    SpectrumSampler(const EnsembleSpec& e, std::uint64_t seed, int stream_id);
    ~SpectrumSampler();
    SpectrumSampler(SpectrumSampler&&) noexcept;

    SpectrumSample next();
    bool metropolis() const;
    double iact() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Monte Carlo estimate of < sum_j x_j^k >; streams merge deterministically
/// regardless of thread count (bounded by RMTM_THREADS when set).
MCEstimate mc_moment(const SamplerConfig& cfg, double k);

/// Literal n-fold integral of Eq-(1)-type averages by nested adaptive
/// quadrature over the ordered sector; n <= 3.
double bruteforce_jpdf_moment(const EnsembleSpec& e, double k, double rel_tol = 1e-8);

/// Log joint density (unnormalized) of the eigenvalue vector; exposed for
/// the Vandermonde-symmetry property test.
double jpdf_log_density(const EnsembleSpec& e, const std::vector<double>& x);

}  // namespace rmt
