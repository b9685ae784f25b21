// hybsqi: experiment driver for hybrid BSQI/WENO conservation-law schemes.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hybsqi/config.hpp"
#include "hybsqi/errors.hpp"
#include "hybsqi/evolve.hpp"
#include "hybsqi/harness.hpp"
#include "hybsqi/io.hpp"
#include "hybsqi/presets.hpp"
#include "hybsqi/problems.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config = 2;
constexpr int exit_numerical = 3;
constexpr int exit_io = 4;

std::vector<int> parse_n_list(const std::string& spec) {
  std::vector<int> ns;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      ns.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw hybsqi::config_error("bad resolution list entry: " + item);
    }
  }
  if (ns.empty()) throw hybsqi::config_error("empty resolution list");
  return ns;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace hybsqi;

  CLI::App app{"experiment driver for hybrid BSQI/WENO conservation-law schemes"};
  app.require_subcommand(1);

  // ---- run ----
  auto* run_cmd = app.add_subcommand("run", "run one experiment and write CSV artifacts");
  std::string config_path, problem_name, scheme = "hybrid6", k_spec = "auto";
  std::string dt_rule = "cfl", out_dir = ".", stem, riemann_file;
  int m = 0, m_dilate = 2;
  double cfl = -1.0, t_final = -1.0, epsilon = 1e-6;
  bool print_cfg = false, no_indicator = false, no_diagnostics = false;
  run_cmd->add_option("--config", config_path, "key = value config file");
  auto* opt_problem = run_cmd->add_option("--problem", problem_name, "problem name");
  auto* opt_scheme = run_cmd->add_option("--scheme", scheme,
                                         "cbsqi|qnbsqi|weno3|weno5|hybrid4|hybrid6");
  auto* opt_m = run_cmd->add_option("--m", m, "number of cells");
  auto* opt_cfl = run_cmd->add_option("--cfl", cfl, "CFL number");
  auto* opt_tf = run_cmd->add_option("--t-final", t_final, "final time");
  auto* opt_k = run_cmd->add_option("--k", k_spec, "indicator threshold K or 'auto'");
  auto* opt_md = run_cmd->add_option("--m-dilate", m_dilate, "indicator dilation radius");
  auto* opt_eps = run_cmd->add_option("--epsilon", epsilon, "WENO epsilon");
  auto* opt_dt = run_cmd->add_option("--dt-rule", dt_rule, "cfl or fixed:<coeff>:<power>");
  auto* opt_out = run_cmd->add_option("--out-dir", out_dir, "output directory");
  auto* opt_stem = run_cmd->add_option("--stem", stem, "output file basename");
  auto* opt_rf = run_cmd->add_option("--riemann-file", riemann_file,
                                     "primitive Riemann data for euler_custom");
  run_cmd->add_flag("--print-config", print_cfg, "echo the resolved configuration and exit");
  run_cmd->add_flag("--no-indicator-csv", no_indicator, "skip indicator history output");
  run_cmd->add_flag("--no-diagnostics-csv", no_diagnostics, "skip per-step diagnostics output");

  // ---- convergence ----
  auto* conv_cmd = app.add_subcommand("convergence", "refinement study against the exact solution");
  std::string c_problem, c_scheme = "cbsqi", c_dt_rule = "cfl", c_n_spec, c_out = "convergence.csv";
  double c_cfl = -1.0, c_tf = -1.0;
  bool c_gnuplot = false;
  conv_cmd->add_option("--problem", c_problem, "problem name")->required();
  conv_cmd->add_option("--scheme", c_scheme, "scheme name");
  conv_cmd->add_option("--n", c_n_spec, "comma-separated resolutions")->required();
  conv_cmd->add_option("--t-final", c_tf, "final time");
  conv_cmd->add_option("--cfl", c_cfl, "CFL number");
  conv_cmd->add_option("--dt-rule", c_dt_rule, "cfl or fixed:<coeff>:<power>");
  conv_cmd->add_option("--out", c_out, "output CSV path");
  conv_cmd->add_flag("--gnuplot", c_gnuplot, "whitespace-delimited output");

  // ---- efficiency ----
  auto* eff_cmd = app.add_subcommand("efficiency", "wall-clock comparison of the four schemes");
  std::string e_problem, e_n_spec, e_out = "efficiency.csv";
  double e_tf = 0.25;
  int e_reps = 3;
  eff_cmd->add_option("--problem", e_problem, "problem name")->required();
  eff_cmd->add_option("--n", e_n_spec, "comma-separated resolutions")->required();
  eff_cmd->add_option("--t-final", e_tf, "final time");
  eff_cmd->add_option("--reps", e_reps, "repetitions per timing (median taken)");
  eff_cmd->add_option("--out", e_out, "output CSV path");

  // ---- reproduce ----
  auto* rep_cmd = app.add_subcommand("reproduce", "run a named preset experiment");
  std::string preset, rep_out_dir = ".";
  rep_cmd->add_option("name", preset, "preset name")->required();
  rep_cmd->add_option("--out-dir", rep_out_dir, "output directory");

  auto* list_cmd = app.add_subcommand("list", "list problems, schemes and presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_config;
  }

  try {
    if (run_cmd->parsed()) {
      RunConfig cfg;
      if (!config_path.empty()) cfg = parse_config_file(config_path);
      if (*opt_problem) cfg.problem = problem_name;
      if (*opt_scheme) cfg.scheme = scheme;
      if (*opt_m) cfg.m = m;
      if (*opt_cfl) cfg.cfl = cfl;
      if (*opt_tf) cfg.t_final = t_final;
      if (*opt_k) {
        if (k_spec == "auto") cfg.indicator_k.reset();
        else cfg.indicator_k = std::stod(k_spec);
      }
      if (*opt_md) cfg.dilation_m = m_dilate;
      if (*opt_eps) cfg.epsilon = epsilon;
      if (*opt_dt) cfg.dt_rule = dt_rule;
      if (*opt_out) cfg.out_dir = out_dir;
      if (*opt_stem) cfg.stem = stem;
      if (*opt_rf) cfg.riemann_file = riemann_file;
      if (no_indicator) cfg.write_indicator = false;
      if (no_diagnostics) cfg.write_diagnostics = false;
      finalize_config(cfg);
      if (print_cfg) {
        std::cout << print_config(cfg);
        return exit_ok;
      }
      return run_experiment(cfg);
    }
    if (conv_cmd->parsed()) {
      const Problem problem = catalog(c_problem);
      HybridConfig hc = HybridConfig::from_scheme_name(c_scheme);
      hc.cfl = c_cfl > 0.0 ? c_cfl : problem.default_cfl;
      const DtRule rule = parse_dt_rule(c_dt_rule);
      hc.fixed_dt = rule.fixed;
      hc.fixed_dt_coeff = rule.coeff;
      hc.fixed_dt_power = rule.power;
      const double tf = c_tf > 0.0 ? c_tf : problem.default_t_final;
      const std::vector<int> ns = parse_n_list(c_n_spec);
      const auto rows = convergence_study(problem, hc, ns, tf);
      write_convergence_csv(c_out, rows, c_gnuplot);
      std::cout << "wrote " << c_out << "\n";
      return exit_ok;
    }
    if (eff_cmd->parsed()) {
      const Problem problem = catalog(e_problem);
      const std::vector<std::string> schemes = {"hybrid4", "hybrid6", "weno3", "weno5"};
      const std::vector<int> ns = parse_n_list(e_n_spec);
      const auto rows = efficiency_benchmark(problem, schemes, ns, e_tf, e_reps);
      write_efficiency_csv(e_out, rows);
      std::cout << "wrote " << e_out << "\n";
      return exit_ok;
    }
    if (rep_cmd->parsed()) return run_preset(preset, rep_out_dir);
    if (list_cmd->parsed()) {
      std::cout << "problems:";
      for (const auto& n : catalog_names()) std::cout << ' ' << n;
      std::cout << " euler_custom\nschemes: cbsqi qnbsqi weno3 weno5 hybrid4 hybrid6\npresets:";
      for (const auto& n : preset_names()) std::cout << ' ' << n;
      std::cout << '\n';
      return exit_ok;
    }
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return exit_config;
  } catch (const numerical_error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return exit_numerical;
  } catch (const io_error& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return exit_io;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return exit_config;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_numerical;
  }
  return exit_ok;
}
