#include "hybsqi/grid.hpp"

#include <stdexcept>

#include "hybsqi/errors.hpp"

namespace hybsqi {

Grid build_grid(double a, double b, int m, int ghost_width) {
  if (!(b > a)) throw std::invalid_argument("build_grid: requires b > a");
  if (ghost_width < 0) throw std::invalid_argument("build_grid: negative ghost width");
  if (m < 2 * ghost_width + 2)
    throw std::invalid_argument("build_grid: m too small for requested ghost width");
  Grid g;
  g.a = a;
  g.b = b;
  g.m = m;
  g.ghost = ghost_width;
  g.dx = (b - a) / m;
  g.nodes.resize(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) g.nodes[static_cast<std::size_t>(j)] = a + j * g.dx;
  g.nodes.front() = a;
  g.nodes.back() = b;
  return g;
}

SolutionField make_field(const Grid& grid, int components) {
  if (components < 1) throw std::invalid_argument("make_field: components must be positive");
  SolutionField f;
  f.components = components;
  f.m = grid.m;
  f.ghost = grid.ghost;
  f.time = 0.0;
  f.values.assign(static_cast<std::size_t>(grid.n_padded()) * components, 0.0);
  return f;
}

void fill_ghosts(SolutionField& field, const Grid& grid, const BoundaryCondition& bc) {
  if (field.m != grid.m || field.ghost != grid.ghost)
    throw std::invalid_argument("fill_ghosts: field does not match grid");
  const int m = grid.m;
  const int g = grid.ghost;
  const int p = field.components;

  switch (bc.kind) {
    case BcKind::periodic:
      // u_0 and u_m are the same physical point: u_{-k} = u_{m-k}, u_{m+k} = u_k.
      for (int k = 1; k <= g; ++k)
        for (int c = 0; c < p; ++c) {
          field.at(-k, c) = field.at(m - k, c);
          field.at(m + k, c) = field.at(k, c);
        }
      break;
    case BcKind::transmissive:
      for (int k = 1; k <= g; ++k)
        for (int c = 0; c < p; ++c) {
          field.at(-k, c) = field.at(0, c);
          field.at(m + k, c) = field.at(m, c);
        }
      break;
    case BcKind::fixed_state:
      if (static_cast<int>(bc.left_state.size()) != p ||
          static_cast<int>(bc.right_state.size()) != p)
        throw std::invalid_argument("fill_ghosts: fixed state component count mismatch");
      for (int k = 1; k <= g; ++k)
        for (int c = 0; c < p; ++c) {
          field.at(-k, c) = bc.left_state[static_cast<std::size_t>(c)];
          field.at(m + k, c) = bc.right_state[static_cast<std::size_t>(c)];
        }
      break;
  }
}

}  // namespace hybsqi
