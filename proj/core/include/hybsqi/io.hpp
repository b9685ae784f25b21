#ifndef HYBSQI_IO_HPP
#define HYBSQI_IO_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hybsqi/grid.hpp"
#include "hybsqi/harness.hpp"
#include "hybsqi/problems.hpp"

namespace hybsqi {

// 9 significant digits, scientific notation.
std::string format_sci(double v);

// x plus one column per component; Euler fields are written as primitives
// (x,rho,u,p).
void write_solution_csv(const std::string& path, const Grid& grid,
                        const SolutionField& field, const Problem& problem);

// 0/1 matrix, one row per time step, one column per node.
void write_indicator_csv(const std::string& path,
                         std::span<const std::vector<std::uint8_t>> history);

// step,t,dt,alpha,weno_cells
void write_diagnostics_csv(const std::string& path, std::span<const StepDiagnostics> steps);

// n,linf,order_linf,l1,order_l1,l2,order_l2,seconds,weno_pct; whitespace
// separated instead of commas when gnuplot is true.
void write_convergence_csv(const std::string& path, std::span<const ErrorReport> rows,
                           bool gnuplot = false);

// n,<scheme columns...>,hybrid4/weno3,hybrid6/weno5 when all four schemes are
// present; otherwise scheme,n,seconds rows.
void write_efficiency_csv(const std::string& path, std::span<const TimingRow> rows);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace hybsqi

#endif
