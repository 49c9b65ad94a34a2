#include "bslab/transform.hpp"

#include <cmath>

#include "bslab/errors.hpp"

namespace bslab::transform {

TransformConstants constants(double r, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma) || !std::isfinite(r)) {
    throw ValidationError("transform constants: sigma must be > 0");
  }
  const double k = 2.0 * r / (sigma * sigma);
  return {k, (1.0 - k) / 2.0, -(k + 1.0) * (k + 1.0) / 4.0};
}

HeatCoords to_heat(double S, double t, const analytic::OptionContract& contract,
                   double sigma) {
  analytic::validate(contract);
  if (!(sigma > 0.0)) {
    throw ValidationError("to_heat: sigma must be > 0");
  }
  if (!(S > 0.0)) {
    throw DomainError("to_heat: S must be > 0");
  }
  if (t > contract.expiry) {
    throw DomainError("to_heat: t must not exceed expiry");
  }
  return {std::log(S / contract.strike),
          0.5 * sigma * sigma * (contract.expiry - t)};
}

std::pair<double, double> from_heat(const HeatCoords& coords,
                                    const analytic::OptionContract& contract,
                                    double sigma) {
  analytic::validate(contract);
  if (!(sigma > 0.0)) {
    throw ValidationError("from_heat: sigma must be > 0");
  }
  return {contract.strike * std::exp(coords.x),
          contract.expiry - 2.0 * coords.tau / (sigma * sigma)};
}

double initial_condition(double x, double k) {
  if (!(x > 0.0)) {
    return 0.0;  // the exponent gap is x itself, so x <= 0 means no payoff
  }
  return std::exp(0.5 * (k - 1.0) * x) * std::expm1(x);
}

double right_boundary(double x_max, double tau,
                      const analytic::OptionContract& contract, double r,
                      double sigma) {
  analytic::validate(contract);
  const auto c = constants(r, sigma);
  if (tau < 0.0) {
    throw DomainError("right_boundary: tau must be >= 0");
  }
  const double s_max = contract.strike * std::exp(x_max);
  // t = T - 2 tau / sigma^2, so the discount horizon T - t is 2 tau / sigma^2.
  const double discounted_strike =
      contract.strike * std::exp(-r * (2.0 * tau / (sigma * sigma)));
  return (s_max - discounted_strike) /
         (contract.strike * std::exp(c.alpha * x_max + c.beta * tau));
}

double u_to_price(double u, const HeatCoords& coords,
                  const analytic::OptionContract& contract,
                  const TransformConstants& consts) {
  return contract.strike *
         std::exp(consts.alpha * coords.x + consts.beta * coords.tau) * u;
}

}  // namespace bslab::transform
