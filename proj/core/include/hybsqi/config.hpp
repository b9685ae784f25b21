#ifndef HYBSQI_CONFIG_HPP
#define HYBSQI_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hybsqi {

// Fully describes one solver run; deterministic (no seeds anywhere).
struct RunConfig {
  std::string problem;
  std::string scheme = "hybrid6";
  int m = 0;             // 0: problem default
  double cfl = -1.0;     // <0: problem default
  double t_final = -1.0; // <0: problem default
  std::optional<double> indicator_k;  // empty: 1/dx or 1 by problem kind
  int dilation_m = 2;
  double epsilon = 1e-6;
  std::string dt_rule = "cfl";  // "cfl" or "fixed:<coeff>:<power>"
  std::string out_dir = ".";
  std::string stem;  // output basename; empty: <problem>_<scheme>_m<m>
  bool write_indicator = true;
  bool write_diagnostics = true;
  std::string riemann_file;  // euler_custom only

  std::string resolved_stem() const;
};

// Applies `key = value` lines; '#' starts a comment. Unknown keys and
// malformed values raise config_error.
void apply_config_line(RunConfig& cfg, const std::string& line);
RunConfig parse_config_file(const std::string& path, RunConfig base = {});

// Validates names and numeric ranges, resolving problem defaults into cfg.
void finalize_config(RunConfig& cfg);

// key = value dump; parsing it back yields an equivalent configuration.
std::string print_config(const RunConfig& cfg);

struct DtRule {
  bool fixed = false;
  double coeff = 0.1;
  double power = 1.5;
};
// Parses "cfl" or "fixed:<coeff>:<power>"; rejects anything else.
DtRule parse_dt_rule(const std::string& spec);

}  // namespace hybsqi

#endif
