#include "bslab/sde.hpp"

#include <cmath>

#include "bslab/errors.hpp"
#include "bslab/philox.hpp"

namespace bslab::sde {

void validate(const GbmParams& params) {
  if (!std::isfinite(params.mu) || !std::isfinite(params.sigma) ||
      !std::isfinite(params.s0)) {
    throw ValidationError("GbmParams must be finite");
  }
  if (params.sigma < 0.0) {
    throw ValidationError("GbmParams: sigma must be >= 0");
  }
  if (params.s0 <= 0.0) {
    throw ValidationError("GbmParams: s0 must be > 0");
  }
}

std::vector<double> sample_wiener_increments(std::size_t n_steps, double dt,
                                             std::uint64_t seed,
                                             std::uint64_t stream) {
  if (n_steps == 0) {
    throw ValidationError("sample_wiener_increments: n_steps must be positive");
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ValidationError("sample_wiener_increments: dt must be > 0");
  }
  const double sqrt_dt = std::sqrt(dt);
  std::vector<double> increments(n_steps);
  for (std::size_t k = 0; k < n_steps; k += 2) {
    const auto z = rng::normal_pair(seed, stream, k / 2);
    increments[k] = z[0] * sqrt_dt;
    if (k + 1 < n_steps) {
      increments[k + 1] = z[1] * sqrt_dt;
    }
  }
  return increments;
}

PathSet simulate_gbm_range(const GbmParams& params, std::size_t n_steps,
                           double dt, std::size_t first_path,
                           std::size_t n_paths, std::uint64_t seed) {
  validate(params);
  if (n_steps == 0 || n_paths == 0) {
    throw ValidationError("simulate_gbm: n_steps and n_paths must be positive");
  }
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ValidationError("simulate_gbm: dt must be > 0");
  }

  PathSet out;
  out.seed = seed;
  out.times.resize(n_steps + 1);
  for (std::size_t k = 0; k <= n_steps; ++k) {
    out.times[k] = static_cast<double>(k) * dt;
  }

  const double drift = (params.mu - 0.5 * params.sigma * params.sigma) * dt;
  out.paths.resize(n_paths);
  for (std::size_t i = 0; i < n_paths; ++i) {
    const auto dw =
        sample_wiener_increments(n_steps, dt, seed, first_path + i);
    auto& path = out.paths[i];
    path.resize(n_steps + 1);
    path[0] = params.s0;
    for (std::size_t k = 0; k < n_steps; ++k) {
      path[k + 1] = path[k] * std::exp(drift + params.sigma * dw[k]);
    }
  }
  return out;
}

PathSet simulate_gbm(const GbmParams& params, std::size_t n_steps, double dt,
                     std::size_t n_paths, std::uint64_t seed) {
  return simulate_gbm_range(params, n_steps, dt, 0, n_paths, seed);
}

EnsembleStats ensemble_stats(const PathSet& paths) {
  if (paths.paths.empty() || paths.times.empty()) {
    throw ValidationError("ensemble_stats: empty PathSet");
  }
  const std::size_t n_paths = paths.paths.size();
  const std::size_t n_times = paths.times.size();

  EnsembleStats stats;
  stats.mean.assign(n_times, 0.0);
  stats.variance.assign(n_times, 0.0);
  for (std::size_t k = 0; k < n_times; ++k) {
    double sum = 0.0;
    for (const auto& path : paths.paths) {
      sum += path[k];
    }
    const double mean = sum / static_cast<double>(n_paths);
    stats.mean[k] = mean;
    if (n_paths > 1) {
      double ssq = 0.0;
      for (const auto& path : paths.paths) {
        const double d = path[k] - mean;
        ssq += d * d;
      }
      stats.variance[k] = ssq / static_cast<double>(n_paths - 1);
    }
  }
  return stats;
}

}  // namespace bslab::sde
