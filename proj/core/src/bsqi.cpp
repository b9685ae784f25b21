#include "hybsqi/bsqi.hpp"

#include <stdexcept>

namespace hybsqi {

namespace {

DerivativeStencil make_stencil(BsqiDegree d, int order, int half_width,
                               std::array<Rational, 9> coeffs) {
  DerivativeStencil s;
  s.degree = d;
  s.order = order;
  s.half_width = half_width;
  s.exact = coeffs;
  for (std::size_t i = 0; i < 9; ++i) s.weight[i] = coeffs[i].to_double();
  return s;
}

using R = Rational;

// Interior-node evaluation coefficients b_{k,l}, k = -4..4. The quintic
// first-derivative entries at |k| = 1,2 use denominator 2880 (antisymmetry
// and the telescoped interface flux both force it), and the quintic value
// row uses 13/28800 at both ends (symmetry and sum 1 force it).
const DerivativeStencil stencils_l0[4] = {
    make_stencil(BsqiDegree::quadratic, 0, 2,
                 {R(0), R(0), R(-1, 64), R(1, 16), R(29, 32), R(1, 16), R(-1, 64), R(0), R(0)}),
    make_stencil(BsqiDegree::cubic, 0, 2,
                 {R(0), R(0), R(-1, 36), R(1, 9), R(15, 18), R(1, 9), R(-1, 36), R(0), R(0)}),
    make_stencil(BsqiDegree::quadric, 0, 4,
                 {R(47, 442368), R(131, 18432), R(-4951, 110592), R(6271, 55296),
                  R(62543, 73728), R(6271, 55296), R(-4951, 110592), R(131, 18432),
                  R(47, 442368)}),
    make_stencil(BsqiDegree::quintic, 0, 4,
                 {R(13, 28800), R(113, 14400), R(-101, 1800), R(2111, 14400),
                  R(2311, 2880), R(2111, 14400), R(-101, 1800), R(113, 14400),
                  R(13, 28800)}),
};

const DerivativeStencil stencils_l1[4] = {
    make_stencil(BsqiDegree::quadratic, 1, 2,
                 {R(0), R(0), R(1, 16), R(-5, 8), R(0), R(5, 8), R(-1, 16), R(0), R(0)}),
    make_stencil(BsqiDegree::cubic, 1, 2,
                 {R(0), R(0), R(1, 12), R(-2, 3), R(0), R(2, 3), R(-1, 12), R(0), R(0)}),
    make_stencil(BsqiDegree::quadric, 1, 4,
                 {R(-47, 55296), R(-101, 9216), R(3751, 27648), R(-20323, 27648), R(0),
                  R(20323, 27648), R(-3751, 27648), R(101, 9216), R(47, 55296)}),
    make_stencil(BsqiDegree::quintic, 1, 4,
                 {R(-13, 5760), R(-1, 320), R(341, 2880), R(-2069, 2880), R(0),
                  R(2069, 2880), R(-341, 2880), R(1, 320), R(13, 5760)}),
};

int degree_index(BsqiDegree d) { return static_cast<int>(d) - 2; }

}  // namespace

const DerivativeStencil& stencil(BsqiDegree degree, int order) {
  if (order != 0 && order != 1)
    throw std::invalid_argument("stencil: order must be 0 or 1");
  const int i = degree_index(degree);
  if (i < 0 || i > 3) throw std::invalid_argument("stencil: bad degree");
  return order == 0 ? stencils_l0[i] : stencils_l1[i];
}

double mu_coefficient(BsqiDegree degree, std::span<const double> samples, std::ptrdiff_t j) {
  const auto n = static_cast<std::ptrdiff_t>(samples.size());
  const auto u = [&](std::ptrdiff_t k) -> double {
    if (k < 0 || k >= n)
      throw std::out_of_range("mu_coefficient: index outside the interior validity range");
    return samples[static_cast<std::size_t>(k)];
  };
  switch (degree) {
    case BsqiDegree::quadratic:
      return (-u(j - 1) + 10.0 * u(j) - u(j + 1)) / 8.0;
    case BsqiDegree::cubic:
      return (-u(j - 3) + 8.0 * u(j - 2) - u(j - 1)) / 6.0;
    case BsqiDegree::quadric:
      return (47.0 / 1152.0) * (u(j - 4) + u(j)) - (107.0 / 288.0) * (u(j - 3) + u(j - 1)) +
             (319.0 / 192.0) * u(j - 2);
    case BsqiDegree::quintic:
      return (13.0 / 240.0) * (u(j - 5) + u(j - 1)) - (7.0 / 15.0) * (u(j - 4) + u(j - 2)) +
             (73.0 / 40.0) * u(j - 3);
  }
  throw std::invalid_argument("mu_coefficient: bad degree");
}

std::vector<double> qi_derivative(BsqiDegree degree, std::span<const double> samples, double dx) {
  const DerivativeStencil& s = stencil(degree, 1);
  const int w = s.half_width;
  if (static_cast<int>(samples.size()) < 2 * w + 1)
    throw std::invalid_argument("qi_derivative: sample array shorter than stencil width");
  const std::size_t n_out = samples.size() - 2 * static_cast<std::size_t>(w);
  std::vector<double> out(n_out);
  const double inv_dx = 1.0 / dx;
  for (std::size_t i = 0; i < n_out; ++i) {
    double acc = 0.0;
    for (int k = -w; k <= w; ++k)
      acc += s.coeff(k) * samples[i + static_cast<std::size_t>(w + k)];
    out[i] = acc * inv_dx;
  }
  return out;
}

}  // namespace hybsqi
