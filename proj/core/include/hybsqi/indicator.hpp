#ifndef HYBSQI_INDICATOR_HPP
#define HYBSQI_INDICATOR_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hybsqi/grid.hpp"
#include "hybsqi/problems.hpp"

namespace hybsqi {

// Raw weak-residual magnitudes and the binary per-node flags derived from
// them. raw is node-major with one entry per component.
struct IndicatorField {
  std::vector<double> raw;
  std::vector<std::uint8_t> flags;
  double threshold_k = 0.0;
  int dilation_m = 0;
};

// Weak local truncation error at every interior node, one value per
// conservation equation:
//   E_j = (dx/6)[du_{j+1} + 4 du_j + du_{j-1}]
//       + (dt/4)[f(u^n)_{j+1} - f(u^n)_{j-1} + f(u^{n-1})_{j+1} - f(u^{n-1})_{j-1}]
// with du = u^n - u^{n-1}. Both fields must be ghost-filled and share a grid.
std::vector<double> wlte(const SolutionField& u_prev, const SolutionField& u_curr,
                         const Problem& problem, double dx, double dt);

// flags[j] = 1 iff |E_{j,c}| > K*dx^4 for any component c.
std::vector<std::uint8_t> smooth_indicator(std::span<const double> e, int components,
                                           double k, double dx);

// M-neighborhood union of the input flags, wrapping under periodic BC.
std::vector<std::uint8_t> dilate(std::span<const std::uint8_t> flags, int m_dilate,
                                 const BoundaryCondition& bc);

namespace detail {

// Flux values at nodes -1..m+1 of one level; the time loop caches the
// current level's array and reuses it as next step's previous level.
std::vector<double> wlte_fluxes(const SolutionField& u, const Problem& problem);

std::vector<double> wlte_from_fluxes(const SolutionField& u_prev, const SolutionField& u_curr,
                                     const std::vector<double>& f_prev,
                                     const std::vector<double>& f_curr, double dx, double dt);

}  // namespace detail

}  // namespace hybsqi

#endif
