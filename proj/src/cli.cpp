#include "bslab/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bslab/analytic.hpp"
#include "bslab/csv.hpp"
#include "bslab/errors.hpp"
#include "bslab/fdm.hpp"
#include "bslab/pricer.hpp"
#include "bslab/sde.hpp"

namespace bslab::cli {

namespace {

void attach_options(CLI::App& app, RunConfig& config) {
  app.option_defaults()->always_capture_default();

  app.add_option("command", config.command,
                 "One of: gbm, surface, price, implied-vol")
      ->required()
      ->check(CLI::IsMember({"gbm", "surface", "price", "implied-vol"}));

  app.set_config("--config", "",
                 "Config file with key=value lines, # comments; flags given "
                 "on the command line win");

  app.add_option("--r", config.r, "Risk-free rate");
  app.add_option("--sigma", config.sigma, "Volatility")
      ->check(CLI::PositiveNumber);
  app.add_option("--strike", config.strike, "Strike K")
      ->check(CLI::PositiveNumber);
  app.add_option("--expiry", config.expiry, "Expiry T in years")
      ->check(CLI::PositiveNumber);

  app.add_option("--n-space", config.n_space, "Spatial intervals N");
  app.add_option("--n-time", config.n_time, "Time intervals M");
  app.add_option("--s-max", config.s_max, "Upper price cutoff")
      ->check(CLI::PositiveNumber);
  app.add_option("--s-floor-ratio", config.s_floor_ratio,
                 "Lower grid edge as a fraction of K")
      ->check(CLI::PositiveNumber);
  app.add_option("--method", config.method,
                 "Pricing route (surface allows explicit|implicit)")
      ->check(CLI::IsMember({"explicit", "implicit", "mc", "closed-form"}));

  app.add_option("--mu", config.mu, "GBM drift");
  app.add_option("--sigma-list", config.sigma_list,
                 "Volatilities for gbm, comma separated")
      ->delimiter(',')
      ->check(CLI::NonNegativeNumber);
  app.add_option("--n-steps", config.n_steps, "Steps per path")
      ->check(CLI::PositiveNumber);
  app.add_option("--dt", config.dt, "Step size in years")
      ->check(CLI::PositiveNumber);
  app.add_option("--s0", config.s0, "Initial price")
      ->check(CLI::PositiveNumber);
  app.add_option("--n-paths", config.n_paths,
                 "Paths per ensemble (mc pricing defaults to 200000)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "RNG seed");

  app.add_option("--spot", config.spot, "Price/implied-vol query point")
      ->check(CLI::PositiveNumber);
  app.add_option("--target-price", config.target_price,
                 "Observed call price to invert (implied-vol)");

  app.add_option("--output", config.output,
                 "Output file (default gbm.csv / surface.csv)");
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"csv"}));
}

// BS_LAB_CONFIG points at the same kind of file as --config; an explicit
// --config flag wins over the environment.
void append_env_config(std::vector<std::string>& args) {
  for (const auto& arg : args) {
    if (arg == "--config" || arg.rfind("--config=", 0) == 0) return;
  }
  const char* env = std::getenv("BS_LAB_CONFIG");
  if (env != nullptr && *env != '\0') {
    args.emplace_back("--config");
    args.emplace_back(env);
  }
}

// Invariants that span several flags, checked after the merge.
void validate_config(const RunConfig& config) {
  if (config.command == "surface" && config.method != "explicit" &&
      config.method != "implicit") {
    throw UsageError("surface supports --method explicit or implicit, got '" +
                     config.method + "'");
  }
  if (config.command == "implied-vol" && !std::isfinite(config.target_price)) {
    throw UsageError("implied-vol requires --target-price");
  }
  if (config.command == "gbm" && config.sigma_list.empty()) {
    throw UsageError("gbm requires a non-empty --sigma-list");
  }
}

RunConfig parse_args(std::vector<std::string> args) {
  RunConfig config;
  CLI::App app{"Black-Scholes lab: GBM paths, PDE price surfaces, Monte "
               "Carlo, implied volatility"};
  attach_options(app, config);
  append_env_config(args);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("bslab");
  for (const auto& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& err) {
    throw UsageError(err.what());
  }
  config.n_paths_given = app.count("--n-paths") > 0;
  validate_config(config);
  return config;
}

std::filesystem::path sigma_suffixed(const std::filesystem::path& base,
                                     double sigma) {
  std::filesystem::path out = base;
  out.replace_filename(base.stem().string() + "_sigma" +
                       csv::format_double(sigma) +
                       base.extension().string());
  return out;
}

void run_gbm(const RunConfig& config) {
  const std::filesystem::path base =
      config.output.empty() ? "gbm.csv" : config.output;
  for (std::size_t j = 0; j < config.sigma_list.size(); ++j) {
    sde::GbmParams params{config.mu, config.sigma_list[j], config.s0};
    // Disjoint stream ranges per ensemble: path i of ensemble j draws from
    // stream j * n_paths + i, so no two paths anywhere share randomness.
    sde::PathSet paths =
        sde::simulate_gbm_range(params, config.n_steps, config.dt,
                                j * config.n_paths, config.n_paths, config.seed);
    const std::filesystem::path out =
        config.sigma_list.size() == 1 ? base
                                      : sigma_suffixed(base, config.sigma_list[j]);
    csv::write_pathset(paths, out);
  }
}

fdm::Method method_from_name(const std::string& name) {
  return name == "explicit" ? fdm::Method::Explicit : fdm::Method::Implicit;
}

void run_surface(const RunConfig& config) {
  pricer::MarketParams market{config.r, config.sigma};
  analytic::OptionContract contract{config.strike, config.expiry};
  pricer::PriceSurface surface = pricer::price_surface_fd(
      market, contract, config.s_max, config.n_space, config.n_time,
      method_from_name(config.method), config.s_floor_ratio);
  csv::write_surface(surface,
                     config.output.empty() ? "surface.csv" : config.output);
}

void run_price(const RunConfig& config) {
  pricer::MarketParams market{config.r, config.sigma};
  analytic::OptionContract contract{config.strike, config.expiry};
  if (config.method == "closed-form") {
    double price =
        analytic::closed_form_call(config.spot, 0.0, contract, config.r,
                                   config.sigma);
    std::cout << csv::format_double(price) << "\n";
    return;
  }
  if (config.method == "mc") {
    std::size_t n_paths = config.n_paths_given ? config.n_paths : 200000;
    pricer::McEstimate estimate =
        pricer::price_mc(market, contract, config.spot, n_paths, config.seed);
    std::cout << csv::format_double(estimate.price) << " "
              << csv::format_double(estimate.std_err) << "\n";
    return;
  }
  pricer::PriceSurface surface = pricer::price_surface_fd(
      market, contract, config.s_max, config.n_space, config.n_time,
      method_from_name(config.method), config.s_floor_ratio);
  std::cout << csv::format_double(pricer::price_at(surface, config.spot, 0.0))
            << "\n";
}

void run_implied_vol(const RunConfig& config) {
  analytic::OptionContract contract{config.strike, config.expiry};
  double sigma = analytic::implied_vol(config.target_price, config.spot,
                                       contract, config.r);
  std::cout << csv::format_double(sigma) << "\n";
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args) {
  return parse_args(args);
}

int run(const RunConfig& config) {
  if (config.command == "gbm") {
    run_gbm(config);
  } else if (config.command == "surface") {
    run_surface(config);
  } else if (config.command == "price") {
    run_price(config);
  } else if (config.command == "implied-vol") {
    run_implied_vol(config);
  } else {
    throw UsageError("unknown command '" + config.command + "'");
  }
  return 0;
}

int run_main(int argc, const char* const argv[]) {
  std::vector<std::string> args(argv + 1, argv + argc);
  for (const auto& arg : args) {
    if (arg == "-h" || arg == "--help") {
      RunConfig config;
      CLI::App app{"Black-Scholes lab: GBM paths, PDE price surfaces, Monte "
                   "Carlo, implied volatility"};
      attach_options(app, config);
      std::cout << app.help();
      return 0;
    }
  }
  try {
    RunConfig config = parse_args(std::move(args));
    return run(config);
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const StabilityError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 3;
  } catch (const ConvergenceError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 5;
  } catch (const NoSolutionError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 4;
  } catch (const SingularSystemError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 4;
  } catch (const UnsupportedRootsError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 4;
  } catch (const ValidationError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 4;
  } catch (const DomainError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 4;
  } catch (const RangeError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 4;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}

}  // namespace bslab::cli
