#pragma once

#include <utility>

namespace bslab::analytic {

// Coefficients of x^2 y'' + a x y' + b y = 0.
struct CauchyEulerCoeffs {
  double a;
  double b;
};

// y(x) = alpha x^{m1} + beta x^{m2}, the distinct-real-roots solution family.
struct PowerSolution {
  double m1;  // larger exponent
  double m2;
  double alpha;
  double beta;
};

// Separated solution family f(S, t) = [alpha S^{m1} + beta S^{m2}] * B(t)
// with B(t) = gamma e^{(r - c) t} and c the separation constant. The spatial
// exponents come from separation_exponents(r, sigma, c).
struct SeparationSolution {
  double alpha;
  double beta;
  double gamma;
  double c;
  double r;
  double sigma;  // > 0
};

// European call: right to buy at `strike` when `expiry` is reached.
struct OptionContract {
  double strike;  // K > 0
  double expiry;  // T > 0
};

// Throws ValidationError unless strike > 0 and expiry > 0 (finite).
void validate(const OptionContract& contract);

// The two real roots of m^2 + (a - 1) m + b = 0, larger first. Repeated or
// complex roots throw UnsupportedRootsError: only the distinct-real regime
// yields the power solution family above.
std::pair<double, double> cauchy_euler_roots(const CauchyEulerCoeffs& coeffs);

// alpha x^{m1} + beta x^{m2}. Throws DomainError for x <= 0 (real powers of
// a non-positive base).
double eval_cauchy_euler(const PowerSolution& sol, double x);

// Spatial exponents of the separated solution:
//   [(1 - 2r/sigma^2) +- sqrt((2r/sigma^2 - 1)^2 + 8c/sigma^2)] / 2,
// larger first. Throws UnsupportedRootsError on a negative discriminant and
// ValidationError on sigma <= 0.
std::pair<double, double> separation_exponents(double r, double sigma, double c);

// [alpha S^{m1} + beta S^{m2}] * gamma * e^{(r - c) t}.
// Throws DomainError for S <= 0.
double eval_separation(const SeparationSolution& sol, double S, double t);

// max(S - K, 0).
double payoff_call(double S, double K);

// Discounted risk-neutral expectation of the call payoff:
//   e^{-r (T-t)} E[max(S_T - K, 0)],  ln S_T ~ N(ln S + (r - sigma^2/2)(T-t),
//                                                sigma^2 (T-t)),
// evaluated by fixed-node Gauss-Legendre quadrature over the standard normal
// density, absolute accuracy better than 1e-8. This is the pricing oracle the
// finite-difference and Monte Carlo routes are checked against.
// Throws DomainError for t >= T.
double closed_form_call(double S, double t, const OptionContract& contract,
                        double r, double sigma);

// Inverts closed_form_call in sigma by bisection on [1e-6, 5]: the price is
// strictly increasing in sigma, so the bracket shrinks monotonically. Stops
// when the repriced value is within 1e-8 of target_price.
// Throws NoSolutionError when target_price is outside the open no-arbitrage
// interval (max(S - K e^{-rT}, 0), S), ConvergenceError after 200 bisections.
double implied_vol(double target_price, double S, const OptionContract& contract,
                   double r);

}  // namespace bslab::analytic
