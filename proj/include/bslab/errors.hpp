#pragma once

#include <stdexcept>
#include <string>

namespace bslab {

// Bad construction parameters: negative volatility, empty grids, and so on.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Evaluation point outside an operation's mathematical domain (x <= 0 under a
// real power, querying past expiry, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Query outside a stored surface's bounding box.
struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Characteristic equation has repeated or complex roots; only the distinct
// real-root regime is supported.
struct UnsupportedRootsError : std::domain_error {
  using std::domain_error::domain_error;
};

// Mesh ratio delta = dtau/dx^2 above 1/2 for the explicit scheme.
class StabilityError : public std::runtime_error {
 public:
  explicit StabilityError(double delta)
      : std::runtime_error("stability violated (delta=" + std::to_string(delta) +
                           " > 0.5): increase M or decrease dx"),
        delta_(delta) {}

  double delta() const noexcept { return delta_; }

 private:
  double delta_;
};

// Zero pivot during the tridiagonal elimination. Cannot happen for strictly
// diagonally dominant systems; kept as a defensive check.
struct SingularSystemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Target price violates the no-arbitrage bounds, so no volatility matches it.
struct NoSolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An iteration failed to reach its tolerance within the iteration budget.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bslab
