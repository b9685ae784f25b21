#ifndef HYBSQI_PROBLEMS_HPP
#define HYBSQI_PROBLEMS_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "hybsqi/grid.hpp"

namespace hybsqi {

// One experiment: flux, wave-speed bound, initial data, optional exact
// solution, boundary behavior, and the run parameters it is usually
// exercised with.
struct Problem {
  std::string name;
  int components = 1;
  double domain_a = 0.0;
  double domain_b = 1.0;
  BoundaryCondition bc = BoundaryCondition::periodic();
  bool discontinuous = true;  // selects the K = 1/dx indicator default

  // Typical run parameters for this problem.
  int default_m = 200;
  double default_cfl = 0.4;
  double default_t_final = 0.5;

  std::function<void(const double* u, double* f)> flux;
  std::function<double(const double* u)> max_speed;  // spectral radius of f'(u)
  std::function<void(double x, double* u)> initial;
  std::function<void(double x, double t, double* u)> exact;  // may be empty

  // Batched variants used in the hot loops. flux_array maps n node-major
  // states to n fluxes; max_alpha returns a bound on the spectral radius of
  // f'(u) over the convex hull of the n states (for non-convex fluxes this
  // exceeds the nodal maximum). Both fall back to the per-node functions.
  std::function<void(const double* u, double* f, int n)> flux_array;
  std::function<double(const double* u, int n)> max_alpha;

  bool has_exact() const { return static_cast<bool>(exact); }

  void flux_range(const double* u, double* f, int n) const {
    if (flux_array) {
      flux_array(u, f, n);
      return;
    }
    for (int i = 0; i < n; ++i) flux(u + i * components, f + i * components);
  }

  double alpha_bound(const double* u, int n) const {
    if (max_alpha) return max_alpha(u, n);
    double a = 0.0;
    for (int i = 0; i < n; ++i) a = std::max(a, max_speed(u + i * components));
    return a;
  }
};

Problem catalog(const std::string& name);
std::vector<std::string> catalog_names();

// Euler problem built from a plain-text file of key = value lines:
// rho_left/u_left/p_left, rho_right/u_right/p_right, x0, gamma and optional
// domain_a/domain_b.
Problem euler_from_riemann_file(const std::string& path);

enum class NonconvexVariant { up, down };

// Entropy solution of the piecewise-C1 flux step problems, t > 0.
double exact_nonconvex(NonconvexVariant variant, double x, double t);

// Ideal-gas state in primitive variables.
struct EulerState {
  double rho = 1.0;
  double u = 0.0;
  double p = 1.0;

  double energy(double gamma) const { return p / (gamma - 1.0) + 0.5 * rho * u * u; }
  double sound_speed(double gamma) const;
  void to_conserved(double* c, double gamma) const;
  static EulerState from_conserved(const double* c, double gamma);
};

struct RiemannStar {
  double p = 0.0;
  double u = 0.0;
  int iterations = 0;
};

// Star-region pressure/velocity by Newton iteration from the two-rarefaction
// guess, converged to |dp/p| < 1e-12. Rejects vacuum-generating data.
RiemannStar euler_star_state(const EulerState& left, const EulerState& right, double gamma);

// Samples the exact similarity solution at xi = x/t.
EulerState euler_riemann_exact(const EulerState& left, const EulerState& right,
                               double xi, double gamma = 1.4);

// Reference values at the m_coarse+1 nodes of the coarse grid: exact solution
// when available, otherwise a pure WENO5 run at CFL 0.2 on n_fine cells
// restricted by nodal sampling (requires n_fine % m_coarse == 0 and
// n_fine >= 10 * m_coarse). Layout matches SolutionField interiors.
std::vector<double> reference_solution(const Problem& problem, double t,
                                       int n_fine, int m_coarse);

}  // namespace hybsqi

#endif
