#include <cmath>
#include <cstddef>
#include <vector>

#include "bslab/errors.hpp"
#include "bslab/philox.hpp"
#include "bslab/sde.hpp"
#include "doctest.h"

using bslab::ValidationError;
namespace sde = bslab::sde;

TEST_CASE("gbm parameter validation") {
  CHECK_NOTHROW(sde::validate({1.0, 0.8, 100.0}));
  CHECK_NOTHROW(sde::validate({-0.5, 0.0, 1e-8}));  // sigma = 0 is legal
  CHECK_THROWS_AS(sde::validate({1.0, -0.1, 100.0}), ValidationError);
  CHECK_THROWS_AS(sde::validate({1.0, 0.8, 0.0}), ValidationError);
  CHECK_THROWS_AS(sde::validate({1.0, 0.8, -5.0}), ValidationError);
  const double nan = std::nan("");
  CHECK_THROWS_AS(sde::validate({nan, 0.8, 100.0}), ValidationError);
  CHECK_THROWS_AS(sde::validate({1.0, nan, 100.0}), ValidationError);
  CHECK_THROWS_AS(sde::validate({1.0, 0.8, nan}), ValidationError);
}

TEST_CASE("wiener increments: shape, determinism, argument checks") {
  CHECK_THROWS_AS(sde::sample_wiener_increments(0, 0.1, 1, 0), ValidationError);
  CHECK_THROWS_AS(sde::sample_wiener_increments(5, 0.0, 1, 0), ValidationError);
  CHECK_THROWS_AS(sde::sample_wiener_increments(5, -0.1, 1, 0), ValidationError);

  const auto dw = sde::sample_wiener_increments(7, 0.25, 9, 4);
  REQUIRE(dw.size() == 7);
  for (std::size_t k = 0; k < dw.size(); ++k) {
    CHECK(dw[k] == bslab::rng::nth_normal(9, 4, k) * std::sqrt(0.25));
  }
  CHECK(dw == sde::sample_wiener_increments(7, 0.25, 9, 4));
  CHECK(dw != sde::sample_wiener_increments(7, 0.25, 9, 5));
}

TEST_CASE("wiener increments have variance dt and negligible autocorrelation") {
  const std::size_t n = 1000000;
  const double dt = 0.25;
  const auto dw = sde::sample_wiener_increments(n, dt, 42, 0);

  double sum = 0.0;
  for (double v : dw) sum += v;
  const double mean = sum / static_cast<double>(n);
  CHECK(std::abs(mean) < 0.002);

  double ss = 0.0, lag = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double d = dw[k] - mean;
    ss += d * d;
    if (k + 1 < n) lag += d * (dw[k + 1] - mean);
  }
  const double variance = ss / static_cast<double>(n - 1);
  CHECK(variance == doctest::Approx(dt).epsilon(0.005));
  CHECK(std::abs(lag / ss) < 0.003);  // 3 / sqrt(n)
}

TEST_CASE("paths start at s0 and follow the exact drift when sigma is zero") {
  const sde::GbmParams params{1.0, 0.0, 100.0};
  const auto set = sde::simulate_gbm(params, 2, 0.1, 3, 5);
  REQUIRE(set.paths.size() == 3);
  REQUIRE(set.times.size() == 3);
  CHECK(set.seed == 5);
  for (const auto& path : set.paths) {
    REQUIRE(path.size() == 3);
    CHECK(path[0] == 100.0);
    CHECK(path[1] == 100.0 * std::exp(0.1));
    CHECK(path[2] == 100.0 * std::exp(0.1) * std::exp(0.1));
  }
  CHECK(set.times[0] == 0.0);
  CHECK(set.times[1] == 0.1);
  CHECK(set.times[2] == 2 * 0.1);
}

TEST_CASE("one exact lognormal step reproduces the frozen draw") {
  // seed 42, stream 0:   z0 = -0.6653748678073486
  // S1 = 100 exp((0.05 - 0.02) * 1 + 0.2 * z0)
  const auto set = sde::simulate_gbm({0.05, 0.2, 100.0}, 1, 1.0, 1, 42);
  CHECK(set.paths[0][1] == doctest::Approx(90.2059340344797).epsilon(1e-12));
}

TEST_CASE("splitting an ensemble into ranges is bit-identical to one run") {
  const sde::GbmParams params{0.3, 0.5, 50.0};
  const auto full = sde::simulate_gbm(params, 10, 0.05, 10, 11);
  const auto head = sde::simulate_gbm_range(params, 10, 0.05, 0, 4, 11);
  const auto tail = sde::simulate_gbm_range(params, 10, 0.05, 4, 6, 11);
  REQUIRE(head.paths.size() == 4);
  REQUIRE(tail.paths.size() == 6);
  for (std::size_t i = 0; i < 4; ++i) CHECK(full.paths[i] == head.paths[i]);
  for (std::size_t i = 0; i < 6; ++i) CHECK(full.paths[4 + i] == tail.paths[i]);
  CHECK(full.times == head.times);
}

TEST_CASE("every simulated price stays strictly positive") {
  const auto set = sde::simulate_gbm({1.0, 2.0, 0.01}, 50, 0.1, 100, 3);
  for (const auto& path : set.paths) {
    for (double s : path) CHECK(s > 0.0);
  }
}

TEST_CASE("ensemble statistics: columnwise mean and unbiased variance") {
  sde::PathSet two;
  two.times = {0.0, 1.0};
  two.paths = {{100.0, 110.0}, {100.0, 90.0}};
  const auto stats = sde::ensemble_stats(two);
  REQUIRE(stats.mean.size() == 2);
  CHECK(stats.mean[0] == 100.0);
  CHECK(stats.mean[1] == 100.0);
  CHECK(stats.variance[0] == 0.0);
  CHECK(stats.variance[1] == 200.0);  // (10^2 + 10^2) / (2 - 1)

  sde::PathSet one;
  one.times = {0.0};
  one.paths = {{42.0}};
  CHECK(sde::ensemble_stats(one).variance[0] == 0.0);

  CHECK_THROWS_AS(sde::ensemble_stats(sde::PathSet{}), ValidationError);
}

TEST_CASE("terminal mean and log-return variance match the model") {
  // mu = 1, sigma = 0.8, T = 1 in ten steps; all bounds are 3 standard
  // errors around the model values for this frozen seed.
  const sde::GbmParams params{1.0, 0.8, 100.0};
  const std::size_t n_paths = 10000;
  const auto set = sde::simulate_gbm(params, 10, 0.1, n_paths, 1);

  double sum = 0.0, ss = 0.0;
  for (const auto& path : set.paths) sum += path.back();
  const double mean_st = sum / static_cast<double>(n_paths);
  for (const auto& path : set.paths) {
    const double d = path.back() - mean_st;
    ss += d * d;
  }
  const double se_mean =
      std::sqrt(ss / static_cast<double>(n_paths - 1) /
                static_cast<double>(n_paths));
  CHECK(std::abs(mean_st - 100.0 * std::exp(1.0)) < 3.0 * se_mean);

  double lr_sum = 0.0;
  std::size_t m = 0;
  for (const auto& path : set.paths) {
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      lr_sum += std::log(path[k + 1] / path[k]);
      ++m;
    }
  }
  const double lr_mean = lr_sum / static_cast<double>(m);
  double lr_ss = 0.0;
  for (const auto& path : set.paths) {
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      const double d = std::log(path[k + 1] / path[k]) - lr_mean;
      lr_ss += d * d;
    }
  }
  const double lr_var = lr_ss / static_cast<double>(m - 1);
  const double expected = 0.8 * 0.8 * 0.1;
  const double se_var = lr_var * std::sqrt(2.0 / static_cast<double>(m - 1));
  CHECK(std::abs(lr_var - expected) < 3.0 * se_var);
}

TEST_CASE("simulation rejects bad arguments") {
  CHECK_THROWS_AS(sde::simulate_gbm({1.0, -0.8, 100.0}, 5, 0.1, 1, 1),
                  ValidationError);
  CHECK_THROWS_AS(sde::simulate_gbm({1.0, 0.8, 100.0}, 0, 0.1, 1, 1),
                  ValidationError);
  CHECK_THROWS_AS(sde::simulate_gbm({1.0, 0.8, 100.0}, 5, 0.0, 1, 1),
                  ValidationError);
}
