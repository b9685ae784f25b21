#ifndef HYBSQI_BSQI_HPP
#define HYBSQI_BSQI_HPP

#include <array>
#include <span>
#include <vector>

#include "hybsqi/rational.hpp"

namespace hybsqi {

// B-spline quasi-interpolation degree. Odd degrees sample at the knots,
// even degrees at cell midpoints; either way the samples form one uniform
// grid and the nodal stencils below act on it.
enum class BsqiDegree : int {
  quadratic = 2,
  cubic = 3,
  quadric = 4,
  quintic = 5,
};

// Nodal evaluation stencil b_{k,l} for the quasi-interpolant (l=0) or its
// first derivative (l=1), offsets k = -4..4, exact rationals with a
// one-time double conversion.
struct DerivativeStencil {
  BsqiDegree degree = BsqiDegree::cubic;
  int order = 0;      // l
  int half_width = 0; // largest |k| with a nonzero coefficient
  std::array<Rational, 9> exact{};
  std::array<double, 9> weight{};

  Rational exact_coeff(int k) const { return exact[static_cast<std::size_t>(k + 4)]; }
  double coeff(int k) const { return weight[static_cast<std::size_t>(k + 4)]; }
};

// Table row for the requested degree and derivative order l in {0,1}.
const DerivativeStencil& stencil(BsqiDegree degree, int order);

// Coefficient functional mu_j(u). `samples` holds u_k at k = 0..len-1 in the
// same indexing the per-degree formulas use; throws std::out_of_range when
// the formula would read outside the array.
double mu_coefficient(BsqiDegree degree, std::span<const double> samples, std::ptrdiff_t j);

// First derivative of the quasi-interpolant at every sample point where the
// stencil fits: out[i] = (1/dx) * sum_k b_{k,1} samples[i + w + k], so the
// result has samples.size() - 2w entries (w = stencil half-width).
std::vector<double> qi_derivative(BsqiDegree degree, std::span<const double> samples, double dx);

}  // namespace hybsqi

#endif
