#include "bslab/fdm.hpp"

#include <cmath>
#include <string>

#include "bslab/errors.hpp"

namespace bslab::fdm {

Grid make_grid(double x_min, double x_max, std::size_t n_space, double tau_max,
               std::size_t n_time) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || x_min >= x_max) {
    throw ValidationError("make_grid: need x_min < x_max");
  }
  if (n_space < 3) {
    throw ValidationError("make_grid: need n_space >= 3");
  }
  if (!(tau_max >= 0.0) || !std::isfinite(tau_max)) {
    throw ValidationError("make_grid: tau_max must be >= 0");
  }
  if (n_time > 0 && !(tau_max > 0.0)) {
    throw ValidationError("make_grid: tau_max must be > 0 when n_time > 0");
  }
  Grid g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.n_space = n_space;
  g.tau_max = tau_max;
  g.n_time = n_time;
  g.dx = (x_max - x_min) / static_cast<double>(n_space);
  g.dtau = n_time == 0 ? 0.0 : tau_max / static_cast<double>(n_time);
  g.delta = g.dtau / (g.dx * g.dx);
  return g;
}

Grid build_grid(const analytic::OptionContract& contract, double sigma,
                double s_max, double s_floor_ratio, std::size_t n_space,
                std::size_t n_time) {
  analytic::validate(contract);
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw ValidationError("build_grid: sigma must be > 0");
  }
  if (!(s_max > contract.strike)) {
    throw ValidationError("build_grid: s_max must exceed the strike");
  }
  if (!(s_floor_ratio > 0.0) || s_floor_ratio >= s_max / contract.strike) {
    throw ValidationError("build_grid: s_floor_ratio must be in (0, s_max/K)");
  }
  if (n_time < 1) {
    throw ValidationError("build_grid: need n_time >= 1");
  }
  return make_grid(std::log(s_floor_ratio), std::log(s_max / contract.strike),
                   n_space, 0.5 * sigma * sigma * contract.expiry, n_time);
}

void check_stability(double delta) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw ValidationError("check_stability: delta must be > 0");
  }
  if (delta > 0.5) {
    throw StabilityError(delta);
  }
}

std::vector<double> explicit_step(const std::vector<double>& row, double delta,
                                  double left_bc, double right_bc) {
  const std::size_t n = row.size();
  if (n < 3) {
    throw ValidationError("explicit_step: row needs at least 3 nodes");
  }
  std::vector<double> next(n);
  const double center = 1.0 - 2.0 * delta;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    next[i] = center * row[i] + delta * (row[i + 1] + row[i - 1]);
  }
  next[0] = left_bc;
  next[n - 1] = right_bc;
  return next;
}

std::vector<double> solve_tridiagonal(const TridiagonalSystem& system) {
  const std::size_t L = system.main.size();
  if (L == 0 || system.rhs.size() != L || system.sub.size() + 1 != L ||
      system.sup.size() + 1 != L) {
    throw ValidationError("solve_tridiagonal: inconsistent band lengths");
  }

  // Thomas algorithm: eliminate the sub-diagonal, then substitute backwards.
  std::vector<double> sup_prime(L - 1 > 0 ? L - 1 : 0);
  std::vector<double> rhs_prime(L);
  double pivot = system.main[0];
  if (pivot == 0.0 || !std::isfinite(pivot)) {
    throw SingularSystemError("solve_tridiagonal: zero pivot at row 0");
  }
  if (L > 1) {
    sup_prime[0] = system.sup[0] / pivot;
  }
  rhs_prime[0] = system.rhs[0] / pivot;
  for (std::size_t i = 1; i < L; ++i) {
    pivot = system.main[i] - system.sub[i - 1] * sup_prime[i - 1];
    if (pivot == 0.0 || !std::isfinite(pivot)) {
      throw SingularSystemError("solve_tridiagonal: zero pivot at row " +
                                std::to_string(i));
    }
    if (i + 1 < L) {
      sup_prime[i] = system.sup[i] / pivot;
    }
    rhs_prime[i] = (system.rhs[i] - system.sub[i - 1] * rhs_prime[i - 1]) / pivot;
  }

  std::vector<double> x(L);
  x[L - 1] = rhs_prime[L - 1];
  for (std::size_t i = L - 1; i-- > 0;) {
    x[i] = rhs_prime[i] - sup_prime[i] * x[i + 1];
  }
  return x;
}

std::vector<double> implicit_step(const std::vector<double>& row, double delta,
                                  double left_bc_next, double right_bc_next) {
  const std::size_t n = row.size();
  if (n < 3) {
    throw ValidationError("implicit_step: row needs at least 3 nodes");
  }
  const std::size_t L = n - 2;  // interior unknowns

  TridiagonalSystem system;
  system.sub.assign(L - 1, -delta);
  system.sup.assign(L - 1, -delta);
  system.main.assign(L, 1.0 + 2.0 * delta);
  system.rhs.assign(row.begin() + 1, row.end() - 1);
  // The first and last equations reference the new boundary nodes, so their
  // known terms pick up the boundary contributions.
  system.rhs.front() += delta * left_bc_next;
  system.rhs.back() += delta * right_bc_next;

  const auto interior = solve_tridiagonal(system);
  std::vector<double> next(n);
  next[0] = left_bc_next;
  for (std::size_t i = 0; i < L; ++i) {
    next[i + 1] = interior[i];
  }
  next[n - 1] = right_bc_next;
  return next;
}

HeatSurface solve_heat(const Grid& grid,
                       const std::function<double(double)>& ic,
                       const std::function<double(double)>& bc_left,
                       const std::function<double(double)>& bc_right,
                       Method method) {
  const std::size_t n_nodes = grid.n_space + 1;
  HeatSurface surface;
  surface.grid = grid;
  surface.values.resize(grid.n_time + 1);

  auto& first = surface.values[0];
  first.resize(n_nodes);
  for (std::size_t j = 0; j < n_nodes; ++j) {
    first[j] = ic(grid.x_at(j));
  }
  if (grid.n_time == 0) {
    return surface;  // nothing to march
  }

  if (method == Method::Explicit) {
    check_stability(grid.delta);
  }
  for (std::size_t m = 1; m <= grid.n_time; ++m) {
    const double tau = grid.tau_at(m);
    const double bcl = bc_left(tau);
    const double bcr = bc_right(tau);
    surface.values[m] =
        method == Method::Explicit
            ? explicit_step(surface.values[m - 1], grid.delta, bcl, bcr)
            : implicit_step(surface.values[m - 1], grid.delta, bcl, bcr);
  }
  return surface;
}

}  // namespace bslab::fdm
