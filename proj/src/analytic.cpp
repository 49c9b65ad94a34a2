#include "bslab/analytic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "bslab/errors.hpp"

namespace bslab::analytic {
namespace {

// 20-point Gauss-Legendre rule on [-1, 1]. Nodes are the roots of P_20,
// found by Newton iteration from the Chebyshev initial guess; weights are
// 2 / ((1 - x^2) P'_20(x)^2). Computing them once at startup avoids a table
// of hand-copied constants.
struct GaussLegendre20 {
  std::array<double, 20> node;
  std::array<double, 20> weight;

  GaussLegendre20() {
    constexpr int n = 20;
    for (int i = 0; i < n / 2; ++i) {
      double x = std::cos(std::numbers::pi * (4.0 * i + 3.0) / (4.0 * n + 2.0));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        // Recurrence (j+1) P_{j+1} = (2j+1) x P_j - j P_{j-1}.
        double p0 = 1.0;
        double p1 = x;
        for (int j = 1; j < n; ++j) {
          const double p2 =
              ((2.0 * j + 1.0) * x * p1 - static_cast<double>(j) * p0) /
              (static_cast<double>(j) + 1.0);
          p0 = p1;
          p1 = p2;
        }
        dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) {
          break;
        }
      }
      const double w = 2.0 / ((1.0 - x * x) * dp * dp);
      node[i] = -x;  // ascending order, negative half first
      node[n - 1 - i] = x;
      weight[i] = w;
      weight[n - 1 - i] = w;
    }
  }
};

const GaussLegendre20& gl20() {
  static const GaussLegendre20 rule;
  return rule;
}

constexpr double inv_sqrt_2pi =
    std::numbers::inv_sqrtpi / std::numbers::sqrt2;  // 1 / sqrt(2 pi)

}  // namespace

void validate(const OptionContract& contract) {
  if (!std::isfinite(contract.strike) || contract.strike <= 0.0) {
    throw ValidationError("OptionContract: strike must be > 0");
  }
  if (!std::isfinite(contract.expiry) || contract.expiry <= 0.0) {
    throw ValidationError("OptionContract: expiry must be > 0");
  }
}

std::pair<double, double> cauchy_euler_roots(const CauchyEulerCoeffs& coeffs) {
  const double p = coeffs.a - 1.0;  // m^2 + p m + b
  const double disc = p * p - 4.0 * coeffs.b;
  if (!(disc > 0.0)) {
    throw UnsupportedRootsError(
        "cauchy_euler_roots: repeated or complex roots (discriminant <= 0)");
  }
  const double sq = std::sqrt(disc);
  return {(-p + sq) / 2.0, (-p - sq) / 2.0};
}

double eval_cauchy_euler(const PowerSolution& sol, double x) {
  if (!(x > 0.0)) {
    throw DomainError("eval_cauchy_euler: x must be > 0");
  }
  return sol.alpha * std::pow(x, sol.m1) + sol.beta * std::pow(x, sol.m2);
}

std::pair<double, double> separation_exponents(double r, double sigma,
                                               double c) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw ValidationError("separation_exponents: sigma must be > 0");
  }
  const double k = 2.0 * r / (sigma * sigma);
  const double disc = (k - 1.0) * (k - 1.0) + 8.0 * c / (sigma * sigma);
  if (disc < 0.0) {
    throw UnsupportedRootsError(
        "separation_exponents: negative discriminant, complex exponents");
  }
  const double sq = std::sqrt(disc);
  return {(1.0 - k + sq) / 2.0, (1.0 - k - sq) / 2.0};
}

double eval_separation(const SeparationSolution& sol, double S, double t) {
  if (!(S > 0.0)) {
    throw DomainError("eval_separation: S must be > 0");
  }
  const auto [m1, m2] = separation_exponents(sol.r, sol.sigma, sol.c);
  const double spatial = sol.alpha * std::pow(S, m1) + sol.beta * std::pow(S, m2);
  return spatial * sol.gamma * std::exp((sol.r - sol.c) * t);
}

double payoff_call(double S, double K) { return std::max(S - K, 0.0); }

double closed_form_call(double S, double t, const OptionContract& contract,
                        double r, double sigma) {
  validate(contract);
  if (!(S > 0.0)) {
    throw DomainError("closed_form_call: S must be > 0");
  }
  if (!(sigma > 0.0)) {
    throw ValidationError("closed_form_call: sigma must be > 0");
  }
  if (t >= contract.expiry) {
    throw DomainError("closed_form_call: t must be before expiry");
  }

  const double tau = contract.expiry - t;
  const double s = sigma * std::sqrt(tau);
  const double mean_log = (r - 0.5 * sigma * sigma) * tau;

  // Payoff is nonzero only for z above the kink where S e^{mean_log + s z}
  // crosses K. Beyond |z - s| ~ 12 the integrand is below 1e-31 of the spot
  // scale, so a fixed window keeps the absolute error far under 1e-8.
  const double z_kink = (std::log(contract.strike / S) - mean_log) / s;
  const double hi = s + 12.0;
  const double lo = std::max(z_kink, -hi);
  if (lo >= hi) {
    return 0.0;
  }

  const auto& rule = gl20();
  constexpr int panels = 16;
  const double panel_width = (hi - lo) / panels;
  double integral = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + p * panel_width;
    const double mid = a + 0.5 * panel_width;
    const double half = 0.5 * panel_width;
    double panel_sum = 0.0;
    for (int q = 0; q < 20; ++q) {
      const double z = mid + half * rule.node[q];
      const double density = inv_sqrt_2pi * std::exp(-0.5 * z * z);
      const double terminal = S * std::exp(mean_log + s * z);
      panel_sum += rule.weight[q] * density * (terminal - contract.strike);
    }
    integral += panel_sum * half;
  }
  return std::exp(-r * tau) * integral;
}

double implied_vol(double target_price, double S, const OptionContract& contract,
                   double r) {
  validate(contract);
  if (!(S > 0.0)) {
    throw DomainError("implied_vol: S must be > 0");
  }
  const double intrinsic =
      std::max(S - contract.strike * std::exp(-r * contract.expiry), 0.0);
  if (!(target_price > intrinsic) || !(target_price < S)) {
    throw NoSolutionError(
        "implied_vol: target price outside the no-arbitrage interval");
  }

  double lo = 1e-6;
  double hi = 5.0;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double price = closed_form_call(S, 0.0, contract, r, mid);
    if (std::abs(price - target_price) < 1e-8) {
      return mid;
    }
    if (price > target_price) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  throw ConvergenceError("implied_vol: no convergence after 200 bisections");
}

}  // namespace bslab::analytic
