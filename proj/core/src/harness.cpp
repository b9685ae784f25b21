#include "hybsqi/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "hybsqi/errors.hpp"

namespace hybsqi {

Norms error_norms(std::span<const double> numerical, std::span<const double> exact,
                  double dx, bool dx_weighted) {
  if (numerical.size() != exact.size())
    throw std::invalid_argument("error_norms: length mismatch");
  Norms n;
  double sum1 = 0.0;
  double sum2 = 0.0;
  for (std::size_t i = 0; i < numerical.size(); ++i) {
    const double e = std::abs(numerical[i] - exact[i]);
    n.linf = std::max(n.linf, e);
    sum1 += e;
    sum2 += e * e;
  }
  const double w = dx_weighted ? dx : 1.0 / static_cast<double>(std::max<std::size_t>(numerical.size(), 1));
  n.l1 = sum1 * w;
  n.l2 = std::sqrt(sum2 * w);
  return n;
}

void fill_orders(std::vector<ErrorReport>& rows) {
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double ratio = std::log(static_cast<double>(rows[i].n) / rows[i - 1].n);
    const auto order = [&](double e_prev, double e_next) -> std::optional<double> {
      if (!(e_prev > 0.0) || !(e_next > 0.0)) return std::nullopt;
      return std::log(e_prev / e_next) / ratio;
    };
    rows[i].order_linf = order(rows[i - 1].linf, rows[i].linf);
    rows[i].order_l1 = order(rows[i - 1].l1, rows[i].l1);
    rows[i].order_l2 = order(rows[i - 1].l2, rows[i].l2);
  }
}

std::vector<ErrorReport> convergence_study(const Problem& problem, const HybridConfig& cfg,
                                           std::span<const int> n_list, double t_final) {
  if (n_list.size() < 2) throw std::invalid_argument("convergence_study: need at least 2 resolutions");
  for (std::size_t i = 1; i < n_list.size(); ++i)
    if (n_list[i] <= n_list[i - 1])
      throw std::invalid_argument("convergence_study: n_list must be strictly increasing");
  if (!problem.has_exact())
    throw std::invalid_argument("convergence_study: problem has no exact solution");
  if (problem.components != 1)
    throw std::invalid_argument("convergence_study: scalar problems only");

  const bool periodic = problem.bc.kind == BcKind::periodic;
  std::vector<ErrorReport> rows;
  rows.reserve(n_list.size());
  for (const int n : n_list) {
    Grid grid;
    SolutionField field;
    RunReport report;
    try {
      grid = build_grid(problem.domain_a, problem.domain_b, n, 4);
      std::tie(field, report) = run(problem, grid, cfg, t_final);
    } catch (const numerical_error& err) {
      throw numerical_error("convergence_study failed at N = " + std::to_string(n) + ": " +
                            err.what());
    }
    // duplicated periodic endpoint excluded so dx-weighted sums cover the domain once
    const int n_cmp = periodic ? grid.m : grid.m + 1;
    std::vector<double> num(static_cast<std::size_t>(n_cmp));
    std::vector<double> ref(static_cast<std::size_t>(n_cmp));
    for (int j = 0; j < n_cmp; ++j) {
      num[static_cast<std::size_t>(j)] = field.at(j, 0);
      double value;
      problem.exact(grid.x(j), t_final, &value);
      ref[static_cast<std::size_t>(j)] = value;
    }
    const Norms norms = error_norms(num, ref, grid.dx);
    ErrorReport row;
    row.n = n;
    row.linf = norms.linf;
    row.l1 = norms.l1;
    row.l2 = norms.l2;
    row.wall_seconds = report.wall_seconds;
    row.weno_fraction = report.weno_fraction_avg;
    rows.push_back(row);
  }
  fill_orders(rows);
  return rows;
}

double weno_usage_percent(std::span<const StepDiagnostics> history) {
  if (history.empty()) throw std::invalid_argument("weno_usage_percent: empty history");
  double acc = 0.0;
  for (const auto& s : history) acc += static_cast<double>(s.weno_cells) / s.total_cells;
  return 100.0 * acc / static_cast<double>(history.size());
}

double weno_final_percent(std::span<const StepDiagnostics> history) {
  if (history.empty()) throw std::invalid_argument("weno_final_percent: empty history");
  const auto& last = history.back();
  return 100.0 * static_cast<double>(last.weno_cells) / last.total_cells;
}

std::vector<TimingRow> efficiency_benchmark(const Problem& problem,
                                            std::span<const std::string> scheme_names,
                                            std::span<const int> n_list, double t_final,
                                            int repetitions) {
  if (repetitions < 3)
    throw std::invalid_argument("efficiency_benchmark: need at least 3 repetitions");
  std::vector<TimingRow> rows;
  for (const int n : n_list) {
    for (const auto& name : scheme_names) {
      HybridConfig cfg = HybridConfig::from_scheme_name(name);
      cfg.cfl = problem.default_cfl;
      const Grid grid = build_grid(problem.domain_a, problem.domain_b, n, 4);
      std::vector<double> seconds(static_cast<std::size_t>(repetitions));
      for (int r = 0; r < repetitions; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        run(problem, grid, cfg, t_final);
        seconds[static_cast<std::size_t>(r)] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      }
      std::sort(seconds.begin(), seconds.end());
      rows.push_back({name, n, seconds[seconds.size() / 2]});
    }
  }
  return rows;
}

}  // namespace hybsqi
