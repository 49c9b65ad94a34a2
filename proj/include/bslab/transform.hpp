#pragma once

#include <utility>

#include "bslab/analytic.hpp"

namespace bslab::transform {

// Constants of the change of variables that turns the pricing equation into
// the heat equation u_tau = u_xx.
struct TransformConstants {
  double k;      // 2 r / sigma^2
  double alpha;  // (1 - k) / 2
  double beta;   // -(k + 1)^2 / 4, never positive
};

// Heat-equation coordinates: x = log-moneyness, tau = scaled remaining time.
struct HeatCoords {
  double x;
  double tau;  // in [0, sigma^2 T / 2]
};

// k = 2r/sigma^2, alpha = (1-k)/2, beta = -(k+1)^2/4.
// Throws ValidationError on sigma <= 0.
TransformConstants constants(double r, double sigma);

// x = ln(S/K), tau = (sigma^2/2)(T - t).
// Throws DomainError on S <= 0 or t > T.
HeatCoords to_heat(double S, double t, const analytic::OptionContract& contract,
                   double sigma);

// Exact inverse: S = K e^x, t = T - (2/sigma^2) tau.
std::pair<double, double> from_heat(const HeatCoords& coords,
                                    const analytic::OptionContract& contract,
                                    double sigma);

// Transformed call payoff max(e^{(k+1)x/2} - e^{(k-1)x/2}, 0). The difference
// is positive exactly for x > 0, where it is computed in the factored form
// e^{(k-1)x/2} expm1(x) to dodge cancellation near the strike.
double initial_condition(double x, double k);

// u at the right edge of the grid: the exact discounted value
//   (S_max - K e^{-r(T-t)}) / (K e^{alpha x_max + beta tau}),
// with S_max = K e^{x_max} and t = T - 2 tau / sigma^2. This is the exact
// form, not the asymptotic e^{(1-alpha)x - beta tau} approximation.
double right_boundary(double x_max, double tau,
                      const analytic::OptionContract& contract, double r,
                      double sigma);

// Map a heat value back to a price: f = K e^{alpha x + beta tau} u.
double u_to_price(double u, const HeatCoords& coords,
                  const analytic::OptionContract& contract,
                  const TransformConstants& consts);

}  // namespace bslab::transform
