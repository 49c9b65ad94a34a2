#include <cmath>
#include <functional>
#include <random>
#include <utility>

#include "bslab/analytic.hpp"
#include "bslab/errors.hpp"
#include "doctest.h"
#include "oracle.hpp"

using bslab::ConvergenceError;
using bslab::DomainError;
using bslab::NoSolutionError;
using bslab::UnsupportedRootsError;
using bslab::ValidationError;
namespace analytic = bslab::analytic;

TEST_CASE("contract validation") {
  CHECK_NOTHROW(analytic::validate({100.0, 1.0}));
  CHECK_THROWS_AS(analytic::validate({0.0, 1.0}), ValidationError);
  CHECK_THROWS_AS(analytic::validate({-100.0, 1.0}), ValidationError);
  CHECK_THROWS_AS(analytic::validate({100.0, 0.0}), ValidationError);
  CHECK_THROWS_AS(analytic::validate({100.0, -1.0}), ValidationError);
  CHECK_THROWS_AS(analytic::validate({std::nan(""), 1.0}), ValidationError);
}

TEST_CASE("characteristic roots of the power family") {
  // m^2 - m - 2 = (m - 2)(m + 1)
  const auto roots = analytic::cauchy_euler_roots({0.0, -2.0});
  CHECK(roots.first == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(roots.second == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(roots.first > roots.second);

  // complex pair (disc < 0) and repeated root (disc = 0) are both rejected
  CHECK_THROWS_AS(analytic::cauchy_euler_roots({1.0, 0.25}),
                  UnsupportedRootsError);
  CHECK_THROWS_AS(analytic::cauchy_euler_roots({3.0, 1.0}),
                  UnsupportedRootsError);
}

TEST_CASE("power solutions evaluate and reject non-positive bases") {
  const analytic::PowerSolution sol{2.0, -1.0, 1.0, 2.0};
  CHECK(analytic::eval_cauchy_euler(sol, 2.0) ==
        doctest::Approx(5.0).epsilon(1e-14));  // 4 + 2/2
  CHECK_THROWS_AS(analytic::eval_cauchy_euler(sol, 0.0), DomainError);
  CHECK_THROWS_AS(analytic::eval_cauchy_euler(sol, -1.0), DomainError);
}

TEST_CASE("power solutions zero their equation at random points") {
  std::mt19937 gen(2024);
  std::uniform_real_distribution<double> coeff_a(-2.0, 2.0);
  std::uniform_real_distribution<double> disc_draw(0.5, 4.0);
  std::uniform_real_distribution<double> weight(-2.0, 2.0);
  std::uniform_real_distribution<double> point(0.5, 3.0);

  for (int trial = 0; trial < 10; ++trial) {
    const double a = coeff_a(gen);
    const double disc = disc_draw(gen);
    const double b = ((a - 1.0) * (a - 1.0) - disc) / 4.0;
    const auto [m1, m2] = analytic::cauchy_euler_roots({a, b});
    const analytic::PowerSolution sol{m1, m2, weight(gen), weight(gen)};

    const auto y = [&](double x) { return analytic::eval_cauchy_euler(sol, x); };
    const double x = point(gen);
    const double h = 0.005 * x;
    const double term2 = x * x * oracle::deriv2(y, x, h);
    const double term1 = a * x * oracle::deriv1(y, x, h);
    const double term0 = b * y(x);
    const double scale = std::max(
        {std::abs(term2), std::abs(term1), std::abs(term0), 1.0});
    CHECK(std::abs(term2 + term1 + term0) / scale < 1e-6);
  }
}

TEST_CASE("separation exponents: closed forms and special constants") {
  const auto [m1, m2] = analytic::separation_exponents(0.05, 0.2, 0.1);
  CHECK(m1 == doctest::Approx(1.6084952830141508).epsilon(1e-12));
  CHECK(m2 == doctest::Approx(-3.108495283014151).epsilon(1e-12));

  // c = r makes the plain asset S itself a solution (exponent exactly 1)
  const auto at_r = analytic::separation_exponents(0.05, 0.2, 0.05);
  CHECK(at_r.first == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(at_r.second == doctest::Approx(-2.5).epsilon(1e-12));

  // c = 0 admits the constant solution (exponent exactly 0)
  const auto at_zero = analytic::separation_exponents(0.05, 0.2, 0.0);
  CHECK(at_zero.first == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(at_zero.second == doctest::Approx(-1.5).epsilon(1e-12));

  CHECK_THROWS_AS(analytic::separation_exponents(0.05, 0.0, 0.1),
                  ValidationError);
  CHECK_THROWS_AS(analytic::separation_exponents(0.05, -0.2, 0.1),
                  ValidationError);
  // discriminant (k-1)^2 + 8c/sigma^2 < 0 needs c < 0
  CHECK_THROWS_AS(analytic::separation_exponents(0.05, 0.2, -10.0),
                  UnsupportedRootsError);
}

TEST_CASE("separated solutions satisfy the pricing equation at random points") {
  std::mt19937 gen(77);
  std::uniform_real_distribution<double> rate(0.0, 0.1);
  std::uniform_real_distribution<double> vol(0.1, 0.5);
  std::uniform_real_distribution<double> sep(0.0, 0.2);
  std::uniform_real_distribution<double> weight(-2.0, 2.0);
  std::uniform_real_distribution<double> spot(0.5, 3.0);
  std::uniform_real_distribution<double> when(0.0, 1.0);

  for (int trial = 0; trial < 10; ++trial) {
    const analytic::SeparationSolution sol{weight(gen), weight(gen),
                                           weight(gen), sep(gen), rate(gen),
                                           vol(gen)};
    const double S = spot(gen);
    const double t = when(gen);
    const auto in_s = [&](double s) {
      return analytic::eval_separation(sol, s, t);
    };
    const auto in_t = [&](double tt) {
      return analytic::eval_separation(sol, S, tt);
    };
    const double hs = 0.005 * S;
    const double f = in_s(S);
    const double f_t = oracle::deriv1(in_t, t, 0.01);
    const double f_s = oracle::deriv1(in_s, S, hs);
    const double f_ss = oracle::deriv2(in_s, S, hs);

    const double diffusion = 0.5 * sol.sigma * sol.sigma * S * S * f_ss;
    const double drift = sol.r * S * f_s;
    const double discount = -sol.r * f;
    const double scale =
        std::max({std::abs(f_t), std::abs(diffusion), std::abs(drift),
                  std::abs(discount), 1.0});
    CHECK(std::abs(f_t + diffusion + drift + discount) / scale < 1e-6);
  }
}

TEST_CASE("eval_separation rejects non-positive spots") {
  const analytic::SeparationSolution sol{1.0, 0.0, 1.0, 0.1, 0.05, 0.2};
  CHECK_THROWS_AS(analytic::eval_separation(sol, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(analytic::eval_separation(sol, -1.0, 0.0), DomainError);
}

TEST_CASE("payoff") {
  CHECK(analytic::payoff_call(105.0, 100.0) == 5.0);
  CHECK(analytic::payoff_call(95.0, 100.0) == 0.0);
  CHECK(analytic::payoff_call(100.0, 100.0) == 0.0);
}

TEST_CASE("quadrature price agrees with the erfc route") {
  // at-the-money reference value, frozen from the erfc formula
  const double atm =
      analytic::closed_form_call(100.0, 0.0, {100.0, 1.0}, 0.05, 0.2);
  CHECK(atm == doctest::Approx(10.450583572185565).epsilon(1e-10));

  double worst = 0.0;
  for (double S : {50.0, 80.0, 90.0, 100.0, 110.0, 150.0, 400.0}) {
    for (double sigma : {0.05, 0.2, 0.8, 2.0, 5.0}) {
      for (double T : {0.1, 1.0}) {
        const double quad =
            analytic::closed_form_call(S, 0.0, {100.0, T}, 0.05, sigma);
        const double ref = oracle::bs_call(S, 100.0, T, 0.05, sigma);
        worst = std::max(worst, std::abs(quad - ref));
      }
    }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("price approaches the deterministic limit as volatility vanishes") {
  CHECK(analytic::closed_form_call(150.0, 0.0, {100.0, 1.0}, 0.0, 1e-12) ==
        doctest::Approx(50.0).epsilon(1e-6));
  // discounted forward intrinsic when r > 0
  CHECK(analytic::closed_form_call(400.0, 0.0, {100.0, 1.0}, 0.05, 1e-12) ==
        doctest::Approx(400.0 - 100.0 * std::exp(-0.05)).epsilon(1e-9));
  // at the money everything rides on the drift
  CHECK(analytic::closed_form_call(100.0, 0.0, {100.0, 1.0}, 0.05, 1e-12) ==
        doctest::Approx(100.0 - 100.0 * std::exp(-0.05)).epsilon(1e-9));
}

TEST_CASE("price is monotone in volatility and respects arbitrage bounds") {
  const analytic::OptionContract contract{100.0, 1.0};
  CHECK(analytic::closed_form_call(100.0, 0.0, contract, 0.05, 0.4) >
        analytic::closed_form_call(100.0, 0.0, contract, 0.05, 0.2));

  for (double S : {80.0, 100.0, 125.0}) {
    for (double sigma : {0.05, 0.2, 0.8, 2.0}) {
      const double price =
          analytic::closed_form_call(S, 0.0, contract, 0.05, sigma);
      const double intrinsic = std::max(S - 100.0 * std::exp(-0.05), 0.0);
      CHECK(price > intrinsic);
      CHECK(price < S);
    }
  }

  // far in the money the time value is numerically gone
  const double deep =
      analytic::closed_form_call(10000.0, 0.0, contract, 0.05, 0.2);
  CHECK(std::abs(deep - (10000.0 - 100.0 * std::exp(-0.05))) < 1e-4 * 100.0);
}

TEST_CASE("closed form rejects queries at or past expiry") {
  CHECK_THROWS_AS(analytic::closed_form_call(100.0, 1.0, {100.0, 1.0}, 0.05, 0.2),
                  DomainError);
  CHECK_THROWS_AS(analytic::closed_form_call(100.0, 1.5, {100.0, 1.0}, 0.05, 0.2),
                  DomainError);
  CHECK_THROWS_AS(analytic::closed_form_call(-5.0, 0.0, {100.0, 1.0}, 0.05, 0.2),
                  DomainError);
}

TEST_CASE("implied volatility round trip") {
  const analytic::OptionContract contract{100.0, 1.0};
  for (double sigma : {0.05, 0.2, 0.5, 1.0, 2.0}) {
    const double price =
        analytic::closed_form_call(100.0, 0.0, contract, 0.05, sigma);
    const double recovered = analytic::implied_vol(price, 100.0, contract, 0.05);
    CHECK(std::abs(recovered - sigma) < 1e-6);
  }
}

TEST_CASE("implied volatility rejects prices outside the arbitrage interval") {
  const analytic::OptionContract contract{100.0, 1.0};
  const double intrinsic = 100.0 - 100.0 * std::exp(-0.05);
  CHECK_THROWS_AS(analytic::implied_vol(intrinsic, 100.0, contract, 0.05),
                  NoSolutionError);
  CHECK_THROWS_AS(analytic::implied_vol(0.0, 100.0, contract, 0.05),
                  NoSolutionError);
  CHECK_THROWS_AS(analytic::implied_vol(-1.0, 100.0, contract, 0.05),
                  NoSolutionError);
  CHECK_THROWS_AS(analytic::implied_vol(100.0, 100.0, contract, 0.05),
                  NoSolutionError);
  CHECK_THROWS_AS(analytic::implied_vol(110.0, 100.0, contract, 0.05),
                  NoSolutionError);
}
