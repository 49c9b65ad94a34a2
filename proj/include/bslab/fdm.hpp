#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "bslab/analytic.hpp"

namespace bslab::fdm {

// Rectangular (x, tau) lattice: N+1 space nodes, M+1 time levels.
struct Grid {
  double x_min;
  double x_max;
  std::size_t n_space;  // N >= 3
  double tau_max;
  std::size_t n_time;  // M; build_grid requires M >= 1
  double dx;           // (x_max - x_min) / N
  double dtau;         // tau_max / M (0 when M == 0)
  double delta;        // dtau / dx^2, the mesh ratio

  double x_at(std::size_t j) const {
    return x_min + (x_max - x_min) *
                       (static_cast<double>(j) / static_cast<double>(n_space));
  }
  double tau_at(std::size_t m) const {
    return n_time == 0 ? 0.0
                       : tau_max * (static_cast<double>(m) /
                                    static_cast<double>(n_time));
  }
};

// Grid over explicit coordinate bounds. n_time == 0 is allowed and yields a
// degenerate grid that can only carry its initial row (dtau = delta = 0);
// the market-facing build_grid below insists on n_time >= 1.
Grid make_grid(double x_min, double x_max, std::size_t n_space, double tau_max,
               std::size_t n_time);

// Market-facing grid: x in [ln(s_floor_ratio), ln(s_max/K)], tau in
// [0, sigma^2 T / 2]. The left edge s_floor_ratio stands in for S -> 0 and is
// deliberately configurable: any small positive value works.
// Throws ValidationError on degenerate ranges (s_max <= K, n_space < 3, ...).
Grid build_grid(const analytic::OptionContract& contract, double sigma,
                double s_max, double s_floor_ratio, std::size_t n_space,
                std::size_t n_time);

// u values over the lattice: values[m][n] is time level m, space node n.
struct HeatSurface {
  std::vector<std::vector<double>> values;  // (M+1) x (N+1)
  Grid grid;
};

// ok iff 0 < delta <= 1/2. delta > 1/2 throws StabilityError (carrying delta
// and the remedy "increase M or decrease dx"); delta <= 0 throws
// ValidationError.
void check_stability(double delta);

// One forward step: interior nodes get
//   u_n' = (1 - 2 delta) u_n + delta (u_{n+1} + u_{n-1}),
// end nodes are set to the supplied boundary values for the new level.
// Callers gate delta <= 1/2 through check_stability first.
std::vector<double> explicit_step(const std::vector<double>& row, double delta,
                                  double left_bc, double right_bc);

// A tridiagonal system in banded storage: main has length L, sub and sup
// length L-1. Assembled from the implicit scheme it is strictly diagonally
// dominant (1 + 2 delta > 2 delta), which makes elimination pivot-free.
struct TridiagonalSystem {
  std::vector<double> sub;
  std::vector<double> main;
  std::vector<double> sup;
  std::vector<double> rhs;
};

// Forward elimination + back substitution, O(L). Throws SingularSystemError
// on a vanishing pivot and ValidationError on inconsistent band lengths.
std::vector<double> solve_tridiagonal(const TridiagonalSystem& system);

// One backward step: solves
//   -delta u_{n-1}' + (1 + 2 delta) u_n' - delta u_{n+1}' = u_n
// for the N-1 interior unknowns, with delta * left_bc_next and
// delta * right_bc_next added to the first and last right-hand sides. The
// returned row has its end nodes set to the boundary values.
// Unconditionally stable; no delta gate.
std::vector<double> implicit_step(const std::vector<double>& row, double delta,
                                  double left_bc_next, double right_bc_next);

enum class Method { Explicit, Implicit };

// March row by row from the initial condition. Row 0 is ic(x_n) for every
// node (including the corners); rows m >= 1 carry bc_left(tau_m) and
// bc_right(tau_m) in their end nodes. The explicit method checks stability
// up front; a grid with n_time == 0 returns just the initial row.
HeatSurface solve_heat(const Grid& grid,
                       const std::function<double(double)>& ic,
                       const std::function<double(double)>& bc_left,
                       const std::function<double(double)>& bc_right,
                       Method method);

}  // namespace bslab::fdm
