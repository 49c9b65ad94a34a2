#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bslab/analytic.hpp"
#include "bslab/fdm.hpp"

namespace bslab::pricer {

struct MarketParams {
  double r;      // risk-free rate per unit time
  double sigma;  // volatility, > 0
};

// Throws ValidationError unless sigma > 0 and both fields are finite.
void validate(const MarketParams& market);

// Call prices over market coordinates: f[i][j] is the price at
// (t_values[i], s_values[j]). Both axes ascend; row t = T is the payoff.
struct PriceSurface {
  std::vector<double> s_values;
  std::vector<double> t_values;
  std::vector<std::vector<double>> f;
  MarketParams market;
  analytic::OptionContract contract;
};

struct McEstimate {
  double price;
  double std_err;
  std::size_t n_paths;
};

// Full pipeline: build the heat grid, march the heat equation with the
// transformed payoff and boundary data, and map every node back to price
// coordinates. The heat march runs tau upward, which is market time downward,
// so heat row m lands in surface row M - m; t_values come out ascending.
// Explicit method requires delta <= 1/2 (StabilityError otherwise).
PriceSurface price_surface_fd(const MarketParams& market,
                              const analytic::OptionContract& contract,
                              double s_max, std::size_t n_space,
                              std::size_t n_time, fdm::Method method,
                              double s_floor_ratio = 1e-6);

// Bilinear interpolation over the four nodes enclosing (S, t).
// Throws RangeError when the query leaves the surface's bounding box.
double price_at(const PriceSurface& surface, double S, double t);

// Central difference of f in S at fixed t, stepped by one grid interval at
// the query point. Throws RangeError when S +- h leaves the grid.
double hedge_ratio(const PriceSurface& surface, double S, double t);

// Value of the hedged holding: f - delta * S.
double portfolio_value(double f, double delta, double S);

// Risk-neutral Monte Carlo: one exact lognormal step to expiry per path
// (the terminal law is known exactly, so no path discretization is needed),
// discounted mean payoff plus its standard error. Path i draws from stream i,
// making the estimate deterministic per seed and independent of how paths
// might be partitioned across workers. Requires n_paths >= 100.
McEstimate price_mc(const MarketParams& market,
                    const analytic::OptionContract& contract, double spot,
                    std::size_t n_paths, std::uint64_t seed);

}  // namespace bslab::pricer
