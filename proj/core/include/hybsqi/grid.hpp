#ifndef HYBSQI_GRID_HPP
#define HYBSQI_GRID_HPP

#include <cstddef>
#include <vector>

namespace hybsqi {

// Uniform 1D mesh of m cells on [a,b] with node x_j = a + j*dx, j = 0..m,
// padded by `ghost` extra nodes on each side.
struct Grid {
  double a = 0.0;
  double b = 1.0;
  int m = 0;
  int ghost = 0;
  double dx = 0.0;
  std::vector<double> nodes;  // interior nodes only, size m+1

  int n_nodes() const { return m + 1; }
  int n_padded() const { return m + 1 + 2 * ghost; }
  double x(int j) const { return a + j * dx; }  // valid for ghost indices too
};

Grid build_grid(double a, double b, int m, int ghost_width);

enum class BcKind { periodic, transmissive, fixed_state };

struct BoundaryCondition {
  BcKind kind = BcKind::periodic;
  std::vector<double> left_state;   // p entries, fixed_state only
  std::vector<double> right_state;  // p entries, fixed_state only

  static BoundaryCondition periodic() { return {BcKind::periodic, {}, {}}; }
  static BoundaryCondition transmissive() { return {BcKind::transmissive, {}, {}}; }
  static BoundaryCondition fixed(std::vector<double> left, std::vector<double> right) {
    return {BcKind::fixed_state, std::move(left), std::move(right)};
  }
};

// Nodal values of p conserved components at one time level, node-major,
// including ghost nodes. Interior node j lives at storage index j+ghost.
struct SolutionField {
  int components = 1;
  int m = 0;
  int ghost = 0;
  double time = 0.0;
  std::vector<double> values;  // (m+1+2*ghost) * components

  double& at(int j, int c = 0) {
    return values[static_cast<std::size_t>(j + ghost) * components + c];
  }
  double at(int j, int c = 0) const {
    return values[static_cast<std::size_t>(j + ghost) * components + c];
  }
  const double* node(int j) const {
    return values.data() + static_cast<std::size_t>(j + ghost) * components;
  }
  double* node(int j) {
    return values.data() + static_cast<std::size_t>(j + ghost) * components;
  }
};

SolutionField make_field(const Grid& grid, int components);

// Writes ghost values per the boundary condition; interior entries untouched.
void fill_ghosts(SolutionField& field, const Grid& grid, const BoundaryCondition& bc);

}  // namespace hybsqi

#endif
