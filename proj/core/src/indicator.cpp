#include "hybsqi/indicator.hpp"

#include <cmath>
#include <stdexcept>

namespace hybsqi {

namespace detail {

std::vector<double> wlte_fluxes(const SolutionField& u, const Problem& problem) {
  const int n = u.m + 3;  // nodes -1..m+1
  std::vector<double> f(static_cast<std::size_t>(n) * u.components);
  problem.flux_range(u.node(-1), f.data(), n);
  return f;
}

std::vector<double> wlte_from_fluxes(const SolutionField& u_prev, const SolutionField& u_curr,
                                     const std::vector<double>& f_prev,
                                     const std::vector<double>& f_curr, double dx, double dt) {
  const int m = u_curr.m;
  const int p = u_curr.components;
  std::vector<double> e(static_cast<std::size_t>(m + 1) * p);
  for (int j = 0; j <= m; ++j) {
    for (int c = 0; c < p; ++c) {
      const double du_l = u_curr.at(j - 1, c) - u_prev.at(j - 1, c);
      const double du_c = u_curr.at(j, c) - u_prev.at(j, c);
      const double du_r = u_curr.at(j + 1, c) - u_prev.at(j + 1, c);
      const std::size_t rl = static_cast<std::size_t>(j) * p + c;
      const std::size_t rr = static_cast<std::size_t>(j + 2) * p + c;
      const double flux_part = (f_curr[rr] - f_curr[rl]) + (f_prev[rr] - f_prev[rl]);
      e[static_cast<std::size_t>(j) * p + c] =
          (dx / 6.0) * (du_r + 4.0 * du_c + du_l) + (dt / 4.0) * flux_part;
    }
  }
  return e;
}

}  // namespace detail

std::vector<double> wlte(const SolutionField& u_prev, const SolutionField& u_curr,
                         const Problem& problem, double dx, double dt) {
  if (u_prev.m != u_curr.m || u_prev.components != u_curr.components ||
      u_prev.ghost != u_curr.ghost)
    throw std::invalid_argument("wlte: mismatched fields");
  if (!(u_prev.time < u_curr.time))
    throw std::invalid_argument("wlte: u_prev must precede u_curr");
  const std::vector<double> f_prev = detail::wlte_fluxes(u_prev, problem);
  const std::vector<double> f_curr = detail::wlte_fluxes(u_curr, problem);
  return detail::wlte_from_fluxes(u_prev, u_curr, f_prev, f_curr, dx, dt);
}

std::vector<std::uint8_t> smooth_indicator(std::span<const double> e, int components,
                                           double k, double dx) {
  if (k < 0.0) throw std::invalid_argument("smooth_indicator: K must be nonnegative");
  if (components < 1 || e.size() % static_cast<std::size_t>(components) != 0)
    throw std::invalid_argument("smooth_indicator: bad component count");
  const std::size_t n = e.size() / static_cast<std::size_t>(components);
  const double threshold = k * dx * dx * dx * dx;
  std::vector<std::uint8_t> flags(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (int c = 0; c < components; ++c)
      if (std::abs(e[j * components + c]) > threshold) {
        flags[j] = 1;
        break;
      }
  return flags;
}

std::vector<std::uint8_t> dilate(std::span<const std::uint8_t> flags, int m_dilate,
                                 const BoundaryCondition& bc) {
  if (m_dilate < 0) throw std::invalid_argument("dilate: M must be nonnegative");
  const auto n = static_cast<std::ptrdiff_t>(flags.size());
  std::vector<std::uint8_t> out(flags.begin(), flags.end());
  if (m_dilate == 0 || n == 0) return out;
  const bool wrap = bc.kind == BcKind::periodic;
  for (std::ptrdiff_t j = 0; j < n; ++j) {
    if (!flags[static_cast<std::size_t>(j)]) continue;
    for (int a = 1; a <= m_dilate; ++a) {
      for (const std::ptrdiff_t k : {j - a, j + a}) {
        if (k >= 0 && k < n) {
          out[static_cast<std::size_t>(k)] = 1;
        } else if (wrap) {
          out[static_cast<std::size_t>(((k % n) + n) % n)] = 1;
        }
      }
    }
  }
  return out;
}

}  // namespace hybsqi
