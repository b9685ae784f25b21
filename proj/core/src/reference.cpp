#include <string>

#include "hybsqi/errors.hpp"
#include "hybsqi/evolve.hpp"
#include "hybsqi/problems.hpp"

namespace hybsqi {

std::vector<double> reference_solution(const Problem& problem, double t, int n_fine,
                                       int m_coarse) {
  if (m_coarse < 1) throw std::invalid_argument("reference_solution: bad coarse resolution");
  const int p = problem.components;

  if (problem.has_exact()) {
    const double dx = (problem.domain_b - problem.domain_a) / m_coarse;
    std::vector<double> out(static_cast<std::size_t>(m_coarse + 1) * p);
    for (int j = 0; j <= m_coarse; ++j)
      problem.exact(problem.domain_a + j * dx, t,
                    out.data() + static_cast<std::size_t>(j) * p);
    return out;
  }

  if (n_fine < 10 * m_coarse)
    throw std::invalid_argument("reference_solution: n_fine must be >= 10x the coarse resolution");
  if (n_fine % m_coarse != 0)
    throw std::invalid_argument("reference_solution: n_fine must be a multiple of m_coarse");

  HybridConfig cfg = HybridConfig::pure(SchemeKind::weno5);
  cfg.cfl = 0.2;
  const Grid fine = build_grid(problem.domain_a, problem.domain_b, n_fine, 4);
  auto [field, report] = run(problem, fine, cfg, t);

  const int stride = n_fine / m_coarse;
  std::vector<double> out(static_cast<std::size_t>(m_coarse + 1) * p);
  for (int j = 0; j <= m_coarse; ++j)
    for (int c = 0; c < p; ++c)
      out[static_cast<std::size_t>(j) * p + c] = field.at(j * stride, c);
  return out;
}

}  // namespace hybsqi
