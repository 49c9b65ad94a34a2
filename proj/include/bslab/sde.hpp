#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bslab::sde {

// Geometric Brownian Motion coefficients: dS = mu S dt + sigma S dW.
struct GbmParams {
  double mu;     // drift per unit time
  double sigma;  // volatility per sqrt unit time, >= 0
  double s0;     // initial price, > 0
};

// Throws ValidationError if sigma < 0 or s0 <= 0 (or anything non-finite).
void validate(const GbmParams& params);

// An ensemble of simulated price paths on a uniform time grid.
struct PathSet {
  std::vector<double> times;               // n_steps + 1 entries, spacing dt
  std::vector<std::vector<double>> paths;  // n_paths rows x (n_steps + 1)
  std::uint64_t seed;
};

// n_steps independent draws from N(0, dt), i.e. Wiener increments over
// steps of length dt. Deterministic in (seed, stream); distinct streams are
// independent. Throws ValidationError on n_steps == 0 or dt <= 0.
std::vector<double> sample_wiener_increments(std::size_t n_steps, double dt,
                                             std::uint64_t seed,
                                             std::uint64_t stream);

// Simulates paths [first_path, first_path + n_paths) of the ensemble defined
// by (params, seed). Path i always consumes increment stream i, so splitting
// an ensemble into ranges and concatenating the results is bit-identical to
// one full run. This is the partitioning primitive for multi-worker use.
PathSet simulate_gbm_range(const GbmParams& params, std::size_t n_steps,
                           double dt, std::size_t first_path,
                           std::size_t n_paths, std::uint64_t seed);

// Full ensemble: paths 0 .. n_paths-1. Each path follows the exact log update
//   S_{k+1} = S_k * exp((mu - sigma^2/2) dt + sigma dW_k),
// which keeps prices strictly positive for every draw.
PathSet simulate_gbm(const GbmParams& params, std::size_t n_steps, double dt,
                     std::size_t n_paths, std::uint64_t seed);

struct EnsembleStats {
  std::vector<double> mean;      // per time point
  std::vector<double> variance;  // unbiased; 0 for a single path
};

// Columnwise sample mean and unbiased sample variance over the ensemble.
// Throws ValidationError on an empty PathSet.
EnsembleStats ensemble_stats(const PathSet& paths);

}  // namespace bslab::sde
