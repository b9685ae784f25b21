#include "hybsqi/presets.hpp"

#include <sstream>

#include "hybsqi/errors.hpp"
#include "hybsqi/evolve.hpp"
#include "hybsqi/harness.hpp"
#include "hybsqi/io.hpp"
#include "hybsqi/problems.hpp"

namespace hybsqi {

namespace {

// records per-step flags for the (x,t) indicator maps
struct IndicatorRecorder : RunObserver {
  std::vector<std::vector<std::uint8_t>> rows;
  void on_step(const StepDiagnostics&, std::span<const std::uint8_t> flags) override {
    rows.emplace_back(flags.begin(), flags.end());
  }
};

const char* numerics_notes =
    "# numerics conventions\n"
    "# flux splitting: f_pm = (f(u) +/- alpha*u)/2, alpha = global max spectral radius of f'(u)\n"
    "# cbsqi interface flux: (-f[j-1] + 7 f[j] + 7 f[j+1] - f[j+2]) / 12\n"
    "# qnbsqi interface flux: (13 f[j-3] + 31 f[j-2] - 651 f[j-1] + 3487 f[j]\n"
    "#                         + 3487 f[j+1] - 651 f[j+2] + 31 f[j+3] + 13 f[j+4]) / 5760\n"
    "# quintic derivative stencil: (-13/5760, -1/320, 341/2880, -2069/2880, 0, ...) antisymmetric\n"
    "# buckley_leverett flux: u^2 / (u^2 + (1-u)^2)\n"
    "# euler flux: (rho u, rho u^2 + p, u (e + p)), gamma = 1.4\n"
    "# piecewise C1 flux upper branch: u^2/2 - u/2 + 3/16 (value and slope match at u = 1/2)\n"
    "# indicator: flag iff |E_j| > K dx^4 per equation, dilated by M cells; all-WENO first step\n";

HybridConfig scheme_config(const RunConfig& cfg) {
  HybridConfig hc = HybridConfig::from_scheme_name(cfg.scheme);
  hc.cfl = cfg.cfl;
  hc.indicator_k = cfg.indicator_k;
  hc.dilation_m = cfg.dilation_m;
  hc.epsilon = cfg.epsilon;
  const DtRule rule = parse_dt_rule(cfg.dt_rule);
  hc.fixed_dt = rule.fixed;
  hc.fixed_dt_coeff = rule.coeff;
  hc.fixed_dt_power = rule.power;
  return hc;
}

std::string join_path(const std::string& dir, const std::string& name) {
  if (dir.empty() || dir == ".") return name;
  return dir.back() == '/' ? dir + name : dir + "/" + name;
}

}  // namespace

int run_experiment(const RunConfig& raw) {
  RunConfig cfg = raw;
  finalize_config(cfg);
  const Problem problem = cfg.problem == "euler_custom"
                              ? euler_from_riemann_file(cfg.riemann_file)
                              : catalog(cfg.problem);
  const Grid grid = build_grid(problem.domain_a, problem.domain_b, cfg.m, 4);
  const HybridConfig hc = scheme_config(cfg);

  IndicatorRecorder recorder;
  auto [field, report] =
      run(problem, grid, hc, cfg.t_final, cfg.write_indicator ? &recorder : nullptr);

  const std::string base = join_path(cfg.out_dir, cfg.stem);
  write_solution_csv(base + ".solution.csv", grid, field, problem);
  if (cfg.write_indicator) write_indicator_csv(base + ".indicator.csv", recorder.rows);
  if (cfg.write_diagnostics) write_diagnostics_csv(base + ".diagnostics.csv", report.steps);

  std::ostringstream manifest;
  manifest << "# run manifest\n";
  manifest << "version = " << version_string << '\n';
  manifest << print_config(cfg);
  manifest << "resolved_k = " << format_sci(resolve_indicator_k(hc, problem, grid)) << '\n';
  manifest << "steps = " << report.steps.size() << '\n';
  manifest << "wall_seconds = " << format_sci(report.wall_seconds) << '\n';
  manifest << "weno_avg_pct = " << format_sci(100.0 * report.weno_fraction_avg) << '\n';
  manifest << "weno_final_pct = " << format_sci(100.0 * report.weno_fraction_final) << '\n';
  manifest << "max_step_mass_drift = " << format_sci(report.max_step_mass_drift) << '\n';
  manifest << numerics_notes;
  write_text_file(base + ".manifest.txt", manifest.str());
  return 0;
}

std::vector<std::string> preset_names() {
  return {"table2", "table3", "table4", "table5", "table6",
          "table7", "fig4d",  "sod",    "lax",    "bl",
          "nonconvex"};
}

int run_preset(const std::string& name, const std::string& out_dir) {
  const auto convergence_preset = [&](const std::string& problem_name,
                                      const std::string& scheme, std::vector<int> ns,
                                      double t_final, const std::string& dt_rule,
                                      double cfl, const std::string& file) {
    const Problem problem = catalog(problem_name);
    RunConfig rc;
    rc.problem = problem_name;
    rc.scheme = scheme;
    rc.cfl = cfl;
    rc.dt_rule = dt_rule;
    rc.m = ns.front();
    rc.t_final = t_final;
    finalize_config(rc);
    HybridConfig hc = scheme_config(rc);
    const auto rows = convergence_study(problem, hc, ns, t_final);
    write_convergence_csv(join_path(out_dir, file), rows);
  };

  if (name == "table2")
    convergence_preset("advection_sine", "cbsqi", {20, 40, 80, 160, 320}, 1.0,
                       "fixed:0.1:1.5", 0.4, "table2.csv");
  else if (name == "table3")
    convergence_preset("advection_sine", "qnbsqi", {20, 40, 80, 160, 320}, 1.0,
                       "fixed:0.1:1.5", 0.4, "table3.csv");
  else if (name == "table4")
    convergence_preset("burgers_sine", "cbsqi", {40, 80, 160, 320, 640}, 0.5,
                       "fixed:0.1:1.5", 0.4, "table4.csv");
  else if (name == "table5")
    convergence_preset("burgers_sine", "qnbsqi", {40, 80, 160, 320, 640}, 0.5,
                       "fixed:0.1:1.5", 0.4, "table5.csv");
  else if (name == "table6") {
    convergence_preset("burgers_pulse", "weno3", {50, 100, 150, 200}, 0.5, "cfl", 0.1,
                       "table6_weno3.csv");
    convergence_preset("burgers_pulse", "hybrid4", {50, 100, 150, 200}, 0.5, "cfl", 0.1,
                       "table6_hybrid4.csv");
  } else if (name == "table7") {
    convergence_preset("burgers_pulse", "weno5", {50, 100, 150, 200}, 0.5, "cfl", 0.1,
                       "table7_weno5.csv");
    convergence_preset("burgers_pulse", "hybrid6", {50, 100, 150, 200}, 0.5, "cfl", 0.1,
                       "table7_hybrid6.csv");
  } else if (name == "fig4d") {
    const Problem problem = catalog("burgers_pulse");
    HybridConfig hc = HybridConfig::hybrid6();
    hc.cfl = 0.4;
    std::ostringstream csv;
    csv << "n,weno_final_pct,weno_avg_pct\n";
    for (const int n : {100, 200, 400, 800}) {
      const Grid grid = build_grid(problem.domain_a, problem.domain_b, n, 4);
      auto [field, report] = run(problem, grid, hc, 0.5);
      csv << n << ',' << format_sci(weno_final_percent(report.steps)) << ','
          << format_sci(weno_usage_percent(report.steps)) << '\n';
    }
    write_text_file(join_path(out_dir, "fig4d.csv"), csv.str());
  } else if (name == "sod" || name == "lax" || name == "bl" || name == "nonconvex") {
    const auto single = [&](const std::string& problem_name, int m, double cfl,
                            double t_final) {
      RunConfig rc;
      rc.problem = problem_name;
      rc.scheme = "hybrid6";
      rc.m = m;
      rc.cfl = cfl;
      rc.t_final = t_final;
      rc.out_dir = out_dir;
      run_experiment(rc);
    };
    if (name == "sod") single("euler_sod", 300, 0.3, 0.25);
    else if (name == "lax") single("euler_lax", 500, 0.4, 1.3);
    else if (name == "bl") single("buckley_leverett", 800, 0.2, 0.21);
    else {
      single("nonconvex_up", 200, 0.2, 1.0);
      single("nonconvex_down", 200, 0.2, 1.0);
    }
  } else {
    throw config_error("unknown preset: " + name);
  }
  return 0;
}

}  // namespace hybsqi
