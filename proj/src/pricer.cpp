#include "bslab/pricer.hpp"

#include <algorithm>
#include <cmath>

#include "bslab/errors.hpp"
#include "bslab/philox.hpp"
#include "bslab/transform.hpp"

namespace bslab::pricer {

void validate(const MarketParams& market) {
  if (!std::isfinite(market.r) || !std::isfinite(market.sigma) ||
      !(market.sigma > 0.0)) {
    throw ValidationError("MarketParams: sigma must be > 0 and finite");
  }
}

PriceSurface price_surface_fd(const MarketParams& market,
                              const analytic::OptionContract& contract,
                              double s_max, std::size_t n_space,
                              std::size_t n_time, fdm::Method method,
                              double s_floor_ratio) {
  validate(market);
  analytic::validate(contract);
  const auto consts = transform::constants(market.r, market.sigma);
  const auto grid = fdm::build_grid(contract, market.sigma, s_max,
                                    s_floor_ratio, n_space, n_time);

  const double K = contract.strike;
  const double k = consts.k;
  const double sigma_sq = market.sigma * market.sigma;
  // Right-edge price consistent with the grid: K e^{x_max} (equals s_max up
  // to rounding); using it keeps the boundary and initial data matching
  // exactly in the corner.
  const double s_right = K * std::exp(grid.x_max);

  // The transformed payoff peaks at x_max with magnitude e^{(k+1) x_max / 2},
  // which overflows doubles once k = 2r/sigma^2 is large (small sigma). The
  // heat equation is linear, so we march w = u e^{-lscale} instead; both
  // steppers commute with the constant scaling, and the map back to prices
  // happens in log space where the factor is just an addend.
  const double lscale = 0.5 * (k + 1.0) * grid.x_max;

  const auto scaled_ic = [&](double x) {
    return x > 0.0 ? std::exp(0.5 * (k - 1.0) * x - lscale) * std::expm1(x)
                   : 0.0;
  };
  const auto bc_left = [](double) { return 0.0; };
  // Scaled right boundary: dividing the exact discounted value by
  // K e^{alpha x_max + lscale} = K e^{x_max} = s_right.
  const auto scaled_bc_right = [&](double tau) {
    const double discounted_strike = K * std::exp(-market.r * (2.0 * tau / sigma_sq));
    return (s_right - discounted_strike) / (s_right * std::exp(consts.beta * tau));
  };

  const auto heat =
      fdm::solve_heat(grid, scaled_ic, bc_left, scaled_bc_right, method);

  PriceSurface surface;
  surface.market = market;
  surface.contract = contract;
  surface.s_values.resize(n_space + 1);
  for (std::size_t j = 0; j <= n_space; ++j) {
    surface.s_values[j] = K * std::exp(grid.x_at(j));
  }
  const double T = contract.expiry;
  surface.t_values.resize(n_time + 1);
  for (std::size_t i = 0; i <= n_time; ++i) {
    // tau_m = tau_max (M - i) / M corresponds to t = T i / M exactly.
    surface.t_values[i] =
        T * (static_cast<double>(i) / static_cast<double>(n_time));
  }

  const double log_strike = std::log(K);
  surface.f.resize(n_time + 1);
  for (std::size_t i = 0; i <= n_time; ++i) {
    const std::size_t m = n_time - i;
    const double tau = grid.tau_at(m);
    auto& out_row = surface.f[i];
    const auto& w_row = heat.values[m];
    out_row.resize(n_space + 1);
    for (std::size_t j = 0; j <= n_space; ++j) {
      const double w = w_row[j];
      // f = K e^{alpha x + beta tau} e^{lscale} w, assembled in log space so
      // a huge prefactor against a tiny w cannot round through inf * 0.
      out_row[j] =
          w > 0.0
              ? std::exp(log_strike + consts.alpha * grid.x_at(j) +
                         consts.beta * tau + lscale + std::log(w))
              : 0.0;
    }
  }
  return surface;
}

namespace {

// Index of the interval [axis[i], axis[i+1]] containing v, clamped so the
// right endpoint maps to the last interval.
std::size_t bracket(const std::vector<double>& axis, double v) {
  const auto it = std::upper_bound(axis.begin(), axis.end(), v);
  const std::size_t raw = static_cast<std::size_t>(it - axis.begin());
  if (raw == 0) {
    return 0;
  }
  return std::min(raw - 1, axis.size() - 2);
}

}  // namespace

double price_at(const PriceSurface& surface, double S, double t) {
  if (surface.s_values.size() < 2 || surface.t_values.size() < 2) {
    throw ValidationError("price_at: surface needs at least a 2x2 grid");
  }
  if (S < surface.s_values.front() || S > surface.s_values.back() ||
      t < surface.t_values.front() || t > surface.t_values.back()) {
    throw RangeError("price_at: query outside the surface bounding box");
  }
  const std::size_t j = bracket(surface.s_values, S);
  const std::size_t i = bracket(surface.t_values, t);
  const double ws = (S - surface.s_values[j]) /
                    (surface.s_values[j + 1] - surface.s_values[j]);
  const double wt = (t - surface.t_values[i]) /
                    (surface.t_values[i + 1] - surface.t_values[i]);
  return (1.0 - wt) * ((1.0 - ws) * surface.f[i][j] + ws * surface.f[i][j + 1]) +
         wt * ((1.0 - ws) * surface.f[i + 1][j] + ws * surface.f[i + 1][j + 1]);
}

double hedge_ratio(const PriceSurface& surface, double S, double t) {
  if (surface.s_values.size() < 2) {
    throw ValidationError("hedge_ratio: surface needs at least 2 spot nodes");
  }
  if (S < surface.s_values.front() || S > surface.s_values.back()) {
    throw RangeError("hedge_ratio: S outside the surface");
  }
  const std::size_t j = bracket(surface.s_values, S);
  const double h = surface.s_values[j + 1] - surface.s_values[j];
  const double lo = S - h;
  const double hi = S + h;
  if (lo < surface.s_values.front() || hi > surface.s_values.back()) {
    throw RangeError("hedge_ratio: S too close to the grid edge");
  }
  return (price_at(surface, hi, t) - price_at(surface, lo, t)) / (2.0 * h);
}

double portfolio_value(double f, double delta, double S) {
  return f - delta * S;
}

McEstimate price_mc(const MarketParams& market,
                    const analytic::OptionContract& contract, double spot,
                    std::size_t n_paths, std::uint64_t seed) {
  validate(market);
  analytic::validate(contract);
  if (!(spot > 0.0)) {
    throw ValidationError("price_mc: spot must be > 0");
  }
  if (n_paths < 100) {
    throw ValidationError("price_mc: need at least 100 paths");
  }

  const double T = contract.expiry;
  const double drift = (market.r - 0.5 * market.sigma * market.sigma) * T;
  const double vol = market.sigma * std::sqrt(T);

  // Streaming mean and squared deviation (Welford); one draw per path from
  // that path's own stream keeps the estimate partition-independent.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t i = 0; i < n_paths; ++i) {
    const double z = rng::normal_pair(seed, i, 0)[0];
    const double terminal = spot * std::exp(drift + vol * z);
    const double payoff = analytic::payoff_call(terminal, contract.strike);
    const double d = payoff - mean;
    mean += d / static_cast<double>(i + 1);
    m2 += d * (payoff - mean);
  }
  const double discount = std::exp(-market.r * T);
  const double variance = m2 / static_cast<double>(n_paths - 1);
  return {discount * mean,
          discount * std::sqrt(variance / static_cast<double>(n_paths)),
          n_paths};
}

}  // namespace bslab::pricer
