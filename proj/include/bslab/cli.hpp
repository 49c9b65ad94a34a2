#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace bslab::cli {

// Bad command line or config file; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Everything a run needs, after defaults, config file, and flags merge.
// Flags beat config-file values, which beat the defaults below.
struct RunConfig {
  std::string command;  // gbm | surface | price | implied-vol

  // market and contract
  double r = 0.05;
  double sigma = 0.2;
  double strike = 100.0;
  double expiry = 1.0;

  // grid numerics
  std::size_t n_space = 200;
  std::size_t n_time = 2000;
  double s_max = 500.0;
  double s_floor_ratio = 1e-6;
  std::string method = "implicit";  // explicit | implicit | mc | closed-form

  // simulation
  double mu = 1.0;
  std::vector<double> sigma_list = {0.8, 1.0, 1.2, 1.4, 1.6, 1.8};
  std::size_t n_steps = 50;
  double dt = 0.1;
  double s0 = 100.0;
  std::size_t n_paths = 1;
  bool n_paths_given = false;  // mc pricing defaults to 200000 when not set
  std::uint64_t seed = 1;

  // queries
  double spot = 100.0;
  double target_price = std::numeric_limits<double>::quiet_NaN();

  // io
  std::string output;  // empty -> gbm.csv / surface.csv per command
  std::string format = "csv";
};

// Parses argv (without the program name). Honors --config <file> and the
// BS_LAB_CONFIG environment variable as a fallback pointer to the same kind
// of file (flat key=value lines, # comments). Throws UsageError on unknown
// flags, unparsable values, or violated invariants.
RunConfig parse_config(const std::vector<std::string>& args);

// Executes one command. Returns 0 on success and lets typed errors escape;
// run_main maps them to exit codes. Writes CSV outputs through a temp file
// plus rename, so failures leave nothing partial behind.
int run(const RunConfig& config);

// Full program behavior: parse, validate, run, map errors to exit codes
// (usage 2, stability 3, domain/validation 4, convergence 5).
int run_main(int argc, const char* const argv[]);

}  // namespace bslab::cli
