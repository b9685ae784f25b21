#ifndef HYBSQI_HARNESS_HPP
#define HYBSQI_HARNESS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hybsqi/evolve.hpp"
#include "hybsqi/problems.hpp"

namespace hybsqi {

struct Norms {
  double linf = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
};

// Discrete error norms; l1/l2 are dx-weighted sums unless dx_weighted is
// false, in which case plain means are used.
Norms error_norms(std::span<const double> numerical, std::span<const double> exact,
                  double dx, bool dx_weighted = true);

struct ErrorReport {
  int n = 0;
  double linf = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
  std::optional<double> order_linf;
  std::optional<double> order_l1;
  std::optional<double> order_l2;
  double wall_seconds = 0.0;
  double weno_fraction = 0.0;  // time-averaged, in [0,1]
};

// r = log(e_prev/e_next) / log(n_next/n_prev) between consecutive rows.
void fill_orders(std::vector<ErrorReport>& rows);

// Runs a scalar problem with an exact solution at each resolution and
// tabulates norms and observed orders versus the exact nodal values.
std::vector<ErrorReport> convergence_study(const Problem& problem, const HybridConfig& cfg,
                                           std::span<const int> n_list, double t_final);

// Time-averaged WENO-cell percentage over a run.
double weno_usage_percent(std::span<const StepDiagnostics> history);
// Percentage of flagged cells at the final step.
double weno_final_percent(std::span<const StepDiagnostics> history);

struct TimingRow {
  std::string scheme;
  int n = 0;
  double seconds = 0.0;  // median over repetitions
};

// Median wall-clock seconds per (scheme, n); schemes are run sequentially.
std::vector<TimingRow> efficiency_benchmark(const Problem& problem,
                                            std::span<const std::string> scheme_names,
                                            std::span<const int> n_list, double t_final,
                                            int repetitions);

}  // namespace hybsqi

#endif
