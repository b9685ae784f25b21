#include "hybsqi/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hybsqi/errors.hpp"
#include "hybsqi/evolve.hpp"
#include "hybsqi/problems.hpp"

namespace hybsqi {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double to_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw config_error("bad numeric value for " + key + ": " + value);
  }
}

int to_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw config_error("bad integer value for " + key + ": " + value);
  }
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw config_error("bad boolean value for " + key + ": " + value);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string RunConfig::resolved_stem() const {
  if (!stem.empty()) return stem;
  return problem + "_" + scheme + "_m" + std::to_string(m);
}

void apply_config_line(RunConfig& cfg, const std::string& raw) {
  std::string line = raw;
  const auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  line = trim(line);
  if (line.empty()) return;
  const auto eq = line.find('=');
  if (eq == std::string::npos) throw config_error("expected key = value, got: " + raw);
  const std::string key = trim(line.substr(0, eq));
  const std::string value = trim(line.substr(eq + 1));

  if (key == "problem") cfg.problem = value;
  else if (key == "scheme") cfg.scheme = value;
  else if (key == "m") cfg.m = to_int(key, value);
  else if (key == "cfl") cfg.cfl = to_double(key, value);
  else if (key == "t_final") cfg.t_final = to_double(key, value);
  else if (key == "k") {
    if (value == "auto") cfg.indicator_k.reset();
    else cfg.indicator_k = to_double(key, value);
  } else if (key == "m_dilate") cfg.dilation_m = to_int(key, value);
  else if (key == "epsilon") cfg.epsilon = to_double(key, value);
  else if (key == "dt_rule") cfg.dt_rule = value;
  else if (key == "out_dir") cfg.out_dir = value;
  else if (key == "stem") cfg.stem = value;
  else if (key == "write_indicator") cfg.write_indicator = to_bool(key, value);
  else if (key == "write_diagnostics") cfg.write_diagnostics = to_bool(key, value);
  else if (key == "riemann_file") cfg.riemann_file = value;
  else throw config_error("unknown config key: " + key);
}

RunConfig parse_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) apply_config_line(base, line);
  return base;
}

DtRule parse_dt_rule(const std::string& spec) {
  DtRule rule;
  if (spec == "cfl") return rule;
  if (spec.rfind("fixed:", 0) == 0) {
    const std::string rest = spec.substr(6);
    const auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw config_error("dt_rule fixed form is fixed:<coeff>:<power>, got: " + spec);
    rule.fixed = true;
    rule.coeff = to_double("dt_rule coeff", rest.substr(0, colon));
    rule.power = to_double("dt_rule power", rest.substr(colon + 1));
    if (!(rule.coeff > 0.0)) throw config_error("dt_rule coefficient must be positive");
    return rule;
  }
  throw config_error("dt_rule must be 'cfl' or 'fixed:<coeff>:<power>', got: " + spec);
}

void finalize_config(RunConfig& cfg) {
  if (cfg.problem.empty()) throw config_error("missing problem name");
  Problem problem;
  if (cfg.problem == "euler_custom") {
    if (cfg.riemann_file.empty())
      throw config_error("problem euler_custom requires riemann_file");
    problem = euler_from_riemann_file(cfg.riemann_file);
  } else {
    problem = catalog(cfg.problem);
  }
  HybridConfig scheme_cfg = HybridConfig::from_scheme_name(cfg.scheme);  // validates name
  (void)scheme_cfg;
  if (cfg.m == 0) cfg.m = problem.default_m;
  if (cfg.cfl < 0.0) cfg.cfl = problem.default_cfl;
  if (cfg.t_final < 0.0) cfg.t_final = problem.default_t_final;
  if (cfg.m < 10) throw config_error("m must be at least 10");
  if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) throw config_error("cfl must be in (0, 1]");
  if (!(cfg.t_final > 0.0)) throw config_error("t_final must be positive");
  if (cfg.dilation_m < 0) throw config_error("m_dilate must be nonnegative");
  if (!(cfg.epsilon > 0.0)) throw config_error("epsilon must be positive");
  if (cfg.indicator_k && *cfg.indicator_k < 0.0) throw config_error("k must be nonnegative");
  parse_dt_rule(cfg.dt_rule);
  if (cfg.stem.empty()) cfg.stem = cfg.resolved_stem();
}

std::string print_config(const RunConfig& cfg) {
  std::ostringstream out;
  out << "problem = " << cfg.problem << '\n';
  out << "scheme = " << cfg.scheme << '\n';
  out << "m = " << cfg.m << '\n';
  out << "cfl = " << fmt(cfg.cfl) << '\n';
  out << "t_final = " << fmt(cfg.t_final) << '\n';
  out << "k = " << (cfg.indicator_k ? fmt(*cfg.indicator_k) : "auto") << '\n';
  out << "m_dilate = " << cfg.dilation_m << '\n';
  out << "epsilon = " << fmt(cfg.epsilon) << '\n';
  out << "dt_rule = " << cfg.dt_rule << '\n';
  out << "out_dir = " << cfg.out_dir << '\n';
  out << "stem = " << cfg.stem << '\n';
  out << "write_indicator = " << (cfg.write_indicator ? "true" : "false") << '\n';
  out << "write_diagnostics = " << (cfg.write_diagnostics ? "true" : "false") << '\n';
  out << "riemann_file = " << cfg.riemann_file << '\n';
  return out.str();
}

}  // namespace hybsqi
