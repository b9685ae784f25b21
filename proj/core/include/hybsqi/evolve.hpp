#ifndef HYBSQI_EVOLVE_HPP
#define HYBSQI_EVOLVE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hybsqi/grid.hpp"
#include "hybsqi/indicator.hpp"
#include "hybsqi/problems.hpp"
#include "hybsqi/schemes.hpp"

namespace hybsqi {

enum class Pairing { hybrid4, hybrid6, pure_bsqi, pure_weno };

std::string pairing_name(Pairing pairing);

// Scheme selection plus indicator and time-step parameters for one run.
struct HybridConfig {
  Pairing pairing = Pairing::hybrid6;
  SchemeKind smooth_scheme = SchemeKind::qnbsqi;
  SchemeKind shock_scheme = SchemeKind::weno5;
  std::optional<double> indicator_k;  // empty: 1/dx (discontinuous) or 1 (smooth)
  int dilation_m = 2;
  double epsilon = 1e-6;
  double cfl = 0.4;
  // dt rule: cfl*dx/alpha by default, or fixed dt = coeff * dx^power.
  bool fixed_dt = false;
  double fixed_dt_coeff = 0.1;
  double fixed_dt_power = 1.5;
  bool allow_mixed_pairing = false;

  void validate() const;  // rejects off-menu scheme pairings unless overridden

  static HybridConfig hybrid4();
  static HybridConfig hybrid6();
  static HybridConfig pure(SchemeKind kind);
  // "cbsqi"|"qnbsqi"|"weno3"|"weno5"|"hybrid4"|"hybrid6"
  static HybridConfig from_scheme_name(const std::string& name);
};

std::string config_scheme_name(const HybridConfig& cfg);

// K actually used on this grid (resolves the 1/dx-vs-1 default).
double resolve_indicator_k(const HybridConfig& cfg, const Problem& problem, const Grid& grid);

struct StepDiagnostics {
  int step = 0;
  double time = 0.0;  // time at the beginning of the step
  double dt = 0.0;
  double alpha = 0.0;
  int weno_cells = 0;
  int total_cells = 0;
};

struct RunReport {
  std::vector<StepDiagnostics> steps;
  double wall_seconds = 0.0;
  double weno_fraction_avg = 0.0;    // time average of weno_cells/total_cells
  double weno_fraction_final = 0.0;  // last step's fraction
  double max_step_mass_drift = 0.0;  // periodic runs: max per-step |d(sum u dx)|
};

// Blended semi-discrete right-hand side at the interior nodes, node-major:
// cells with flags[j] = 1 take the WENO flux difference, the rest the BSQI
// one. WENO interface fluxes are evaluated only next to flagged cells.
// `u` must be ghost-filled.
std::vector<double> rhs_hybrid(const SolutionField& u, std::span<const std::uint8_t> flags,
                               const HybridConfig& cfg, const Problem& problem,
                               const Grid& grid);

using RhsOperator = std::function<void(const SolutionField& u, std::vector<double>& out)>;

// One three-stage strong-stability-preserving RK3 step; refreshes ghosts
// before every stage evaluation and advances field.time by dt. Throws
// numerical_error on a non-finite stage. `compensation`, when non-null,
// points at (m+1)*components running Kahan correction terms carried across
// steps.
void ssprk3_step(SolutionField& field, double dt, const RhsOperator& rhs,
                 const Grid& grid, const BoundaryCondition& bc,
                 double* compensation = nullptr);

// dt = cfl*dx/alpha with alpha the global max wave speed (floored at 1e-12).
std::pair<double, double> compute_dt(const SolutionField& u, const Problem& problem,
                                     const Grid& grid, double cfl);

// Per-step callback, e.g. for indicator history output. flags has one entry
// per interior node and describes the step being taken.
struct RunObserver {
  virtual ~RunObserver() = default;
  virtual void on_step(const StepDiagnostics& diag, std::span<const std::uint8_t> flags) = 0;
};

// Full time integration from the problem's initial data to t_final with
// per-step indicator refresh (all-WENO on the first hybrid step) and exact
// final-time landing.
std::pair<SolutionField, RunReport> run(const Problem& problem, const Grid& grid,
                                        const HybridConfig& cfg, double t_final,
                                        RunObserver* observer = nullptr);

}  // namespace hybsqi

#endif
