#include "hybsqi/evolve.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "hybsqi/errors.hpp"

namespace hybsqi {

std::string pairing_name(Pairing pairing) {
  switch (pairing) {
    case Pairing::hybrid4: return "hybrid4";
    case Pairing::hybrid6: return "hybrid6";
    case Pairing::pure_bsqi: return "pure_bsqi";
    case Pairing::pure_weno: return "pure_weno";
  }
  return "?";
}

void HybridConfig::validate() const {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw config_error("cfl must be in (0, 1]");
  if (epsilon <= 0.0) throw config_error("epsilon must be positive");
  if (dilation_m < 0) throw config_error("dilation M must be nonnegative");
  if (indicator_k && *indicator_k < 0.0) throw config_error("K must be nonnegative");
  if (fixed_dt && !(fixed_dt_coeff > 0.0)) throw config_error("fixed dt coefficient must be positive");
  if (allow_mixed_pairing) return;
  if (pairing == Pairing::hybrid4 &&
      !(smooth_scheme == SchemeKind::cbsqi && shock_scheme == SchemeKind::weno3))
    throw config_error("hybrid4 pairs cbsqi with weno3");
  if (pairing == Pairing::hybrid6 &&
      !(smooth_scheme == SchemeKind::qnbsqi && shock_scheme == SchemeKind::weno5))
    throw config_error("hybrid6 pairs qnbsqi with weno5");
}

HybridConfig HybridConfig::hybrid4() {
  HybridConfig cfg;
  cfg.pairing = Pairing::hybrid4;
  cfg.smooth_scheme = SchemeKind::cbsqi;
  cfg.shock_scheme = SchemeKind::weno3;
  return cfg;
}

HybridConfig HybridConfig::hybrid6() {
  HybridConfig cfg;
  cfg.pairing = Pairing::hybrid6;
  cfg.smooth_scheme = SchemeKind::qnbsqi;
  cfg.shock_scheme = SchemeKind::weno5;
  return cfg;
}

HybridConfig HybridConfig::pure(SchemeKind kind) {
  HybridConfig cfg;
  switch (kind) {
    case SchemeKind::cbsqi:
      cfg.pairing = Pairing::pure_bsqi;
      cfg.smooth_scheme = SchemeKind::cbsqi;
      cfg.shock_scheme = SchemeKind::weno3;
      break;
    case SchemeKind::qnbsqi:
      cfg.pairing = Pairing::pure_bsqi;
      cfg.smooth_scheme = SchemeKind::qnbsqi;
      cfg.shock_scheme = SchemeKind::weno5;
      break;
    case SchemeKind::weno3:
      cfg.pairing = Pairing::pure_weno;
      cfg.smooth_scheme = SchemeKind::cbsqi;
      cfg.shock_scheme = SchemeKind::weno3;
      break;
    case SchemeKind::weno5:
      cfg.pairing = Pairing::pure_weno;
      cfg.smooth_scheme = SchemeKind::qnbsqi;
      cfg.shock_scheme = SchemeKind::weno5;
      break;
  }
  return cfg;
}

HybridConfig HybridConfig::from_scheme_name(const std::string& name) {
  if (name == "hybrid4") return hybrid4();
  if (name == "hybrid6") return hybrid6();
  return pure(scheme_from_name(name));
}

std::string config_scheme_name(const HybridConfig& cfg) {
  switch (cfg.pairing) {
    case Pairing::hybrid4: return "hybrid4";
    case Pairing::hybrid6: return "hybrid6";
    case Pairing::pure_bsqi: return scheme_name(cfg.smooth_scheme);
    case Pairing::pure_weno: return scheme_name(cfg.shock_scheme);
  }
  return "?";
}

double resolve_indicator_k(const HybridConfig& cfg, const Problem& problem, const Grid& grid) {
  if (cfg.indicator_k) return *cfg.indicator_k;
  return problem.discontinuous ? 1.0 / grid.dx : 1.0;
}

namespace {

struct RhsWorkspace {
  std::vector<double> fnode;  // padded-node physical flux, node-major
  std::vector<double> fp, fm; // per-component split arrays (mostly-flagged path)
  std::vector<double> flux_smooth;  // interface t+1/2 at index t+1
  std::vector<std::uint8_t> need_smooth, need_shock;  // interface t+1/2 at index t+1
  // interface masks depend only on the flags, which are frozen across the
  // three stages of a step
  bool masks_valid = false;
  bool any_smooth = false;
  int n_shock = 0;
};

// Strided window kernels: `f`/`u` point at the node of interface j+1/2 in a
// node-major array and s is the component stride. The WENO variants apply the
// Lax-Friedrichs split per window element, which avoids materializing full
// f± arrays when few cells are flagged.
inline double cbsqi_at(const double* f, std::ptrdiff_t s) {
  return (-f[-s] + 7.0 * f[0] + 7.0 * f[s] - f[2 * s]) / 12.0;
}

inline double qnbsqi_at(const double* f, std::ptrdiff_t s) {
  return (13.0 * f[-3 * s] + 31.0 * f[-2 * s] - 651.0 * f[-s] + 3487.0 * f[0] +
          3487.0 * f[s] - 651.0 * f[2 * s] + 31.0 * f[3 * s] + 13.0 * f[4 * s]) /
         5760.0;
}

double weno3_split_at(const double* f, const double* u, double alpha, std::ptrdiff_t s,
                      WenoWorkspace& ws) {
  const double wp[3] = {0.5 * (f[-s] + alpha * u[-s]), 0.5 * (f[0] + alpha * u[0]),
                        0.5 * (f[s] + alpha * u[s])};
  const double wm[3] = {0.5 * (f[2 * s] - alpha * u[2 * s]), 0.5 * (f[s] - alpha * u[s]),
                        0.5 * (f[0] - alpha * u[0])};
  return weno3_part(wp, ws) + weno3_part(wm, ws);
}

double weno5_split_at(const double* f, const double* u, double alpha, std::ptrdiff_t s,
                      WenoWorkspace& ws) {
  const double wp[5] = {0.5 * (f[-2 * s] + alpha * u[-2 * s]), 0.5 * (f[-s] + alpha * u[-s]),
                        0.5 * (f[0] + alpha * u[0]), 0.5 * (f[s] + alpha * u[s]),
                        0.5 * (f[2 * s] + alpha * u[2 * s])};
  const double wm[5] = {0.5 * (f[3 * s] - alpha * u[3 * s]), 0.5 * (f[2 * s] - alpha * u[2 * s]),
                        0.5 * (f[s] - alpha * u[s]), 0.5 * (f[0] - alpha * u[0]),
                        0.5 * (f[-s] - alpha * u[-s])};
  return weno5_part(wp, ws) + weno5_part(wm, ws);
}

// Blended RHS at the interior nodes; alpha is the frozen per-step splitting
// speed. Interface t (between nodes t and t+1) is evaluated with a scheme
// only when an adjacent cell uses it.
void rhs_hybrid_impl(const SolutionField& u, std::span<const std::uint8_t> flags,
                     const HybridConfig& cfg, const Problem& problem, const Grid& grid,
                     double alpha, RhsWorkspace& ws, std::vector<double>& out) {
  const int m = grid.m;
  const int g = grid.ghost;
  const int p = u.components;
  const int total = grid.n_padded();
  const int n_if = m + 2;
  const double inv_dx = 1.0 / grid.dx;

  out.resize(static_cast<std::size_t>(m + 1) * p);
  ws.fnode.resize(static_cast<std::size_t>(total) * p);
  ws.fp.resize(static_cast<std::size_t>(total));
  ws.fm.resize(static_cast<std::size_t>(total));
  ws.flux_smooth.resize(static_cast<std::size_t>(n_if));

  problem.flux_range(u.values.data(), ws.fnode.data(), total);

  if (!ws.masks_valid) {
    ws.need_smooth.assign(static_cast<std::size_t>(n_if), 0);
    ws.need_shock.assign(static_cast<std::size_t>(n_if), 0);
    ws.any_smooth = false;
    ws.n_shock = 0;
    for (int t = -1; t <= m; ++t) {
      const bool left = t >= 0 && flags[static_cast<std::size_t>(t)];
      const bool right = t + 1 <= m && flags[static_cast<std::size_t>(t + 1)];
      const bool left_c = t >= 0 && !flags[static_cast<std::size_t>(t)];
      const bool right_c = t + 1 <= m && !flags[static_cast<std::size_t>(t + 1)];
      ws.need_shock[static_cast<std::size_t>(t + 1)] = left || right;
      ws.need_smooth[static_cast<std::size_t>(t + 1)] = left_c || right_c;
      ws.n_shock += (left || right) ? 1 : 0;
      ws.any_smooth = ws.any_smooth || left_c || right_c;
    }
    ws.masks_valid = true;
  }
  const bool any_smooth = ws.any_smooth;
  const int n_shock = ws.n_shock;
  // materializing f± arrays only pays off when most interfaces use WENO
  const bool split_arrays = n_shock * 4 > n_if;

  WenoWorkspace weno_ws;
  weno_ws.epsilon = cfg.epsilon;

  // An unflagged cell has both its interfaces in the smooth mask and a
  // flagged cell both in the shock mask, so each pass can emit the cell's
  // flux difference as soon as its right interface is reconstructed.
  const std::ptrdiff_t s = p;
  for (int c = 0; c < p; ++c) {
    const double* fc = ws.fnode.data() + c;    // strided component views
    const double* uc = u.values.data() + c;
    if (any_smooth) {
      const bool quintic = cfg.smooth_scheme == SchemeKind::qnbsqi;
      double* fs = ws.flux_smooth.data();
      if (quintic) {
        for (int t = -1; t <= m; ++t) {
          if (!ws.need_smooth[static_cast<std::size_t>(t + 1)]) continue;
          fs[t + 1] = qnbsqi_at(fc + (t + g) * s, s);
        }
      } else {
        for (int t = -1; t <= m; ++t) {
          if (!ws.need_smooth[static_cast<std::size_t>(t + 1)]) continue;
          fs[t + 1] = cbsqi_at(fc + (t + g) * s, s);
        }
      }
      for (int j = 0; j <= m; ++j)
        if (!flags[static_cast<std::size_t>(j)])
          out[static_cast<std::size_t>(j) * p + c] = -(fs[j + 1] - fs[j]) * inv_dx;
    }
    if (n_shock > 0) {
      const bool w5 = cfg.shock_scheme == SchemeKind::weno5;
      double f_left = 0.0;
      if (split_arrays) {
        // mostly-flagged: amortize the split into per-component arrays
        for (int i = 0; i < total; ++i) {
          const double fv = fc[i * s];
          const double uv = uc[i * s];
          ws.fp[static_cast<std::size_t>(i)] = 0.5 * (fv + alpha * uv);
          ws.fm[static_cast<std::size_t>(i)] = 0.5 * (fv - alpha * uv);
        }
        FluxWindow w{ws.fp, ws.fm, 0};
        for (int t = -1; t <= m; ++t) {
          if (!ws.need_shock[static_cast<std::size_t>(t + 1)]) continue;
          w.center = t + g;
          const double f_right = w5 ? flux_weno5(w, weno_ws) : flux_weno3(w, weno_ws);
          if (t >= 0 && flags[static_cast<std::size_t>(t)])
            out[static_cast<std::size_t>(t) * p + c] = -(f_right - f_left) * inv_dx;
          f_left = f_right;
        }
      } else {
        for (int t = -1; t <= m; ++t) {
          if (!ws.need_shock[static_cast<std::size_t>(t + 1)]) continue;
          const std::ptrdiff_t at = (t + g) * s;
          const double f_right = w5 ? weno5_split_at(fc + at, uc + at, alpha, s, weno_ws)
                                    : weno3_split_at(fc + at, uc + at, alpha, s, weno_ws);
          if (t >= 0 && flags[static_cast<std::size_t>(t)])
            out[static_cast<std::size_t>(t) * p + c] = -(f_right - f_left) * inv_dx;
          f_left = f_right;
        }
      }
    }
  }
}

double global_alpha(const SolutionField& u, const Problem& problem, const Grid& grid) {
  const double alpha = problem.alpha_bound(u.node(0), grid.m + 1);
  if (!std::isfinite(alpha))
    throw numerical_error("non-finite wave speed at t = " + std::to_string(u.time));
  return alpha;
}

void check_finite(const SolutionField& u, int stage) {
  const std::size_t n = static_cast<std::size_t>(u.m + 1) * u.components;
  const double* v = u.node(0);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += v[i] * 0.0;  // 0*inf and 0*nan are nan
  if (acc == 0.0) return;
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "non-finite state after stage %d (t = %.6g); CFL condition likely violated",
                stage, u.time);
  throw numerical_error(buf);
}

}  // namespace

std::vector<double> rhs_hybrid(const SolutionField& u, std::span<const std::uint8_t> flags,
                               const HybridConfig& cfg, const Problem& problem,
                               const Grid& grid) {
  if (static_cast<int>(flags.size()) != grid.m + 1)
    throw std::invalid_argument("rhs_hybrid: flags size must be m+1");
  RhsWorkspace ws;
  std::vector<double> out;
  const double alpha = global_alpha(u, problem, grid);
  rhs_hybrid_impl(u, flags, cfg, problem, grid, alpha, ws, out);
  return out;
}

namespace {

struct Ssprk3Workspace {
  std::vector<double> v0, k0, k1, k2;
  bool capture_increment = false;
  std::vector<double> increment;  // (m+1)*p per-step increments when captured
};

void ssprk3_step_ws(SolutionField& field, double dt, const RhsOperator& rhs,
                    const Grid& grid, const BoundaryCondition& bc, double* compensation,
                    Ssprk3Workspace& ws) {
  if (!(dt > 0.0)) throw std::invalid_argument("ssprk3_step: dt must be positive");
  const int p = field.components;
  const int g = field.ghost;
  const std::size_t n_int = static_cast<std::size_t>(field.m + 1) * p;
  const std::size_t off = static_cast<std::size_t>(g) * p;
  const double t0 = field.time;

  // Stage states v1 = u + dt L0 and v2 = u + (dt/4)(L0 + L1); the step itself
  // is the equivalent increment u += (dt/6)(L0 + L1 + 4 L2), accumulated with
  // Kahan compensation so long fixed-dt runs do not drift at the ulp level.
  std::vector<double>& v0 = ws.v0;
  std::vector<double>& k0 = ws.k0;
  std::vector<double>& k1 = ws.k1;
  std::vector<double>& k2 = ws.k2;
  v0.assign(field.values.begin(), field.values.end());

  fill_ghosts(field, grid, bc);
  rhs(field, k0);
  for (std::size_t i = 0; i < n_int; ++i)
    field.values[off + i] = v0[off + i] + dt * k0[i];
  fill_ghosts(field, grid, bc);
  check_finite(field, 1);

  rhs(field, k1);
  for (std::size_t i = 0; i < n_int; ++i)
    field.values[off + i] = v0[off + i] + 0.25 * dt * (k0[i] + k1[i]);
  fill_ghosts(field, grid, bc);
  check_finite(field, 2);

  rhs(field, k2);
  const double w = dt / 6.0;
  if (ws.capture_increment) ws.increment.resize(n_int);
  for (std::size_t i = 0; i < n_int; ++i) {
    const double incr = w * (k0[i] + k1[i] + 4.0 * k2[i]);
    if (ws.capture_increment) ws.increment[i] = incr;
    const double u0 = v0[off + i];
    if (compensation) {
      const double y = incr - compensation[i];
      const double t = u0 + y;
      compensation[i] = (t - u0) - y;
      field.values[off + i] = t;
    } else {
      field.values[off + i] = u0 + incr;
    }
  }
  fill_ghosts(field, grid, bc);
  check_finite(field, 3);

  field.time = t0 + dt;
}

}  // namespace

void ssprk3_step(SolutionField& field, double dt, const RhsOperator& rhs,
                 const Grid& grid, const BoundaryCondition& bc, double* compensation) {
  Ssprk3Workspace ws;
  ssprk3_step_ws(field, dt, rhs, grid, bc, compensation, ws);
}

std::pair<double, double> compute_dt(const SolutionField& u, const Problem& problem,
                                     const Grid& grid, double cfl) {
  if (!(cfl > 0.0)) throw std::invalid_argument("compute_dt: cfl must be positive");
  const double alpha = global_alpha(u, problem, grid);
  const double dt = cfl * grid.dx / std::max(alpha, 1e-12);
  return {dt, alpha};
}

std::pair<SolutionField, RunReport> run(const Problem& problem, const Grid& grid,
                                        const HybridConfig& cfg, double t_final,
                                        RunObserver* observer) {
  if (!(t_final > 0.0)) throw std::invalid_argument("run: t_final must be positive");
  cfg.validate();
  const auto t_start = std::chrono::steady_clock::now();

  const int m = grid.m;
  const int p = problem.components;
  const bool periodic = problem.bc.kind == BcKind::periodic;
  const bool hybrid = cfg.pairing == Pairing::hybrid4 || cfg.pairing == Pairing::hybrid6;
  const double k_threshold = resolve_indicator_k(cfg, problem, grid);

  SolutionField u = make_field(grid, p);
  for (int j = 0; j <= m; ++j) problem.initial(grid.x(j), u.node(j));
  if (periodic)
    for (int c = 0; c < p; ++c) u.at(m, c) = u.at(0, c);
  fill_ghosts(u, grid, problem.bc);

  std::vector<std::uint8_t> flags(static_cast<std::size_t>(m + 1),
                                  cfg.pairing == Pairing::pure_bsqi ? 0 : 1);
  bool have_increment = false;
  double prev_time = 0.0;
  std::vector<double> wlte_flux_cache, wlte_flux_next;
  std::vector<std::uint8_t> raw_flags;
  Ssprk3Workspace rk_ws;
  rk_ws.capture_increment = hybrid;
  if (hybrid) wlte_flux_cache = detail::wlte_fluxes(u, problem);
  RhsWorkspace ws;
  RunReport report;
  double alpha_step = 0.0;

  const RhsOperator rhs = [&](const SolutionField& state, std::vector<double>& out) {
    rhs_hybrid_impl(state, flags, cfg, problem, grid, alpha_step, ws, out);
  };

  const auto mass = [&](int c) {
    double s = 0.0;
    for (int j = 0; j < m; ++j) s += u.at(j, c);
    return s * grid.dx;
  };

  int step = 0;
  std::vector<double> mass_before(static_cast<std::size_t>(p));
  std::vector<double> comp(static_cast<std::size_t>(m + 1) * p, 0.0);
  double t_acc = 0.0;   // compensated clock so the final clip lands on t_final
  double t_comp = 0.0;
  while (u.time < t_final - 1e-14 * std::max(1.0, t_final)) {
    if (++step > 200'000'000) throw numerical_error("run: step limit exceeded");
    auto [dt, alpha] = compute_dt(u, problem, grid, cfg.cfl);
    if (cfg.fixed_dt) dt = cfg.fixed_dt_coeff * std::pow(grid.dx, cfg.fixed_dt_power);
    alpha_step = alpha;
    if (u.time + dt > t_final) dt = t_final - u.time;
    if (!(dt > 0.0)) throw numerical_error("run: time step underflow");

    if (hybrid && have_increment) {
      // fused WLTE -> flags refresh. The level difference u^n - u^{n-1} is the
      // last step's captured RK increment; this level's fluxes are kept as the
      // next step's previous-level fluxes.
      wlte_flux_next.resize(static_cast<std::size_t>(m + 3) * p);
      problem.flux_range(u.node(-1), wlte_flux_next.data(), m + 3);
      const double dx6 = grid.dx / 6.0;
      const double dt4 = 0.25 * (u.time - prev_time);
      const double thr = k_threshold * grid.dx * grid.dx * grid.dx * grid.dx;
      raw_flags.assign(static_cast<std::size_t>(m + 1), 0);
      const double* f_old = wlte_flux_cache.data();
      const double* f_new = wlte_flux_next.data();
      const double* du = rk_ws.increment.data();  // interior nodes 0..m
      const auto du_ghost = [&](int side_node, int c) -> double {
        // node -1 or m+1 by boundary kind
        switch (problem.bc.kind) {
          case BcKind::periodic:
            return du[static_cast<std::size_t>(side_node < 0 ? m - 1 : 1) * p + c];
          case BcKind::transmissive:
            return du[static_cast<std::size_t>(side_node < 0 ? 0 : m) * p + c];
          case BcKind::fixed_state:
            return 0.0;
        }
        return 0.0;
      };
      for (int j = 0; j <= m; ++j) {
        const double* fn = f_new + static_cast<std::size_t>(j) * p;
        const double* fo = f_old + static_cast<std::size_t>(j) * p;
        const double* dj = du + static_cast<std::size_t>(j) * p;
        for (int c = 0; c < p; ++c) {
          const double du_l = j > 0 ? dj[c - p] : du_ghost(-1, c);
          const double du_r = j < m ? dj[c + p] : du_ghost(m + 1, c);
          const double e = dx6 * (du_r + 4.0 * dj[c] + du_l) +
                           dt4 * ((fn[c + 2 * p] - fn[c]) + (fo[c + 2 * p] - fo[c]));
          if (std::abs(e) > thr) {
            raw_flags[static_cast<std::size_t>(j)] = 1;
            break;
          }
        }
      }
      wlte_flux_cache.swap(wlte_flux_next);
      flags = dilate(raw_flags, cfg.dilation_m, problem.bc);
      ws.masks_valid = false;
    }

    StepDiagnostics diag;
    diag.step = step;
    diag.time = u.time;
    diag.dt = dt;
    diag.alpha = alpha;
    diag.total_cells = m + 1;
    diag.weno_cells = 0;
    for (const auto f : flags) diag.weno_cells += f;

    prev_time = u.time;
    if (periodic)
      for (int c = 0; c < p; ++c) mass_before[static_cast<std::size_t>(c)] = mass(c);

    try {
      ssprk3_step_ws(u, dt, rhs, grid, problem.bc, comp.data(), rk_ws);
    } catch (const numerical_error& err) {
      throw numerical_error(std::string(err.what()) + " [step " + std::to_string(step) +
                            ", t = " + std::to_string(diag.time) + "]");
    }
    have_increment = hybrid;
    {
      const double y = dt - t_comp;
      const double t_new = t_acc + y;
      t_comp = (t_new - t_acc) - y;
      t_acc = t_new;
      u.time = t_acc;
    }
    if (periodic) {
      for (int c = 0; c < p; ++c) {
        u.at(m, c) = u.at(0, c);
        comp[static_cast<std::size_t>(m) * p + c] = comp[static_cast<std::size_t>(c)];
      }
      fill_ghosts(u, grid, problem.bc);
      for (int c = 0; c < p; ++c)
        report.max_step_mass_drift =
            std::max(report.max_step_mass_drift,
                     std::abs(mass(c) - mass_before[static_cast<std::size_t>(c)]));
    }

    report.steps.push_back(diag);
    if (observer) observer->on_step(diag, flags);
  }

  if (!report.steps.empty()) {
    double acc = 0.0;
    for (const auto& s : report.steps)
      acc += static_cast<double>(s.weno_cells) / s.total_cells;
    report.weno_fraction_avg = acc / static_cast<double>(report.steps.size());
    const auto& last = report.steps.back();
    report.weno_fraction_final = static_cast<double>(last.weno_cells) / last.total_cells;
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return {std::move(u), std::move(report)};
}

}  // namespace hybsqi
