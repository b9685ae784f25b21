#include "hybsqi/problems.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hybsqi/errors.hpp"

namespace hybsqi {

namespace {

constexpr double euler_gamma_default = 1.4;
constexpr double pi = 3.14159265358979323846;

double burgers_sine_exact(double x, double t) {
  // Characteristic equation u = sin(x - u t), smooth for t < 1.
  if (t >= 1.0) throw std::domain_error("burgers sine exact solution valid for t < 1");
  double u = std::sin(x);
  for (int it = 0; it < 100; ++it) {
    const double s = std::sin(x - u * t);
    const double r = u - s;
    if (std::abs(r) < 1e-15) break;
    const double dr = 1.0 + t * std::cos(x - u * t);
    u -= r / dr;
  }
  return u;
}

double burgers_pulse_exact(double x, double t) {
  // Square pulse on |x| <= 1/3: left edge opens a rarefaction, right edge
  // drives a speed-1/2 shock; valid until the fan reaches the shock (t = 4/3).
  if (t > 4.0 / 3.0 + 1e-12)
    throw std::domain_error("burgers pulse exact solution valid for t <= 4/3");
  if (t <= 0.0) return std::abs(x) <= 1.0 / 3.0 ? 1.0 : 0.0;
  const double fan_l = -1.0 / 3.0;
  const double fan_r = -1.0 / 3.0 + t;
  const double shock = 1.0 / 3.0 + 0.5 * t;
  if (x < fan_l) return 0.0;
  if (x < fan_r) return (x + 1.0 / 3.0) / t;
  if (x < shock) return 1.0;
  return 0.0;
}

double nonconvex_flux(double u) {
  if (u < 0.5) return 0.25 * u * (1.0 - u);
  return 0.5 * u * u - 0.5 * u + 3.0 / 16.0;
}

double nonconvex_speed(double u) {
  if (u < 0.5) return 0.25 * (1.0 - 2.0 * u);
  return u - 0.5;
}

double bl_flux(double u) {
  const double a = u * u;
  const double b = (1.0 - u) * (1.0 - u);
  return a / (a + b);
}

double bl_speed(double u) {
  const double d = u * u + (1.0 - u) * (1.0 - u);
  return 2.0 * u * (1.0 - u) / (d * d);
}

Problem scalar_base(std::string name) {
  Problem p;
  p.name = std::move(name);
  p.components = 1;
  return p;
}

// Wires the scalar per-node and batched kernels. The alpha bound samples
// |f'| over the hull of the nodal values as well, so non-convex fluxes whose
// fastest characteristic lies between the data values (Buckley-Leverett
// pulse data is the textbook case: f'(0) = f'(1) = 0) still get a positive
// splitting speed.
template <class F, class S>
void set_scalar_flux(Problem& p, F f, S speed) {
  p.flux = [f](const double* u, double* out) { out[0] = f(u[0]); };
  p.max_speed = [speed](const double* u) { return std::abs(speed(u[0])); };
  p.flux_array = [f](const double* u, double* out, int n) {
    for (int i = 0; i < n; ++i) out[i] = f(u[i]);
  };
  p.max_alpha = [speed](const double* u, int n) {
    double a = 0.0;
    double lo = u[0];
    double hi = u[0];
    for (int i = 0; i < n; ++i) {
      a = std::max(a, std::abs(speed(u[i])));
      lo = std::min(lo, u[i]);
      hi = std::max(hi, u[i]);
    }
    constexpr int samples = 64;
    for (int k = 1; k < samples; ++k)
      a = std::max(a, std::abs(speed(lo + (hi - lo) * k / samples)));
    return a;
  };
}

double pulse_ic(double x) { return std::abs(x) <= 1.0 / 3.0 ? 1.0 : 0.0; }

Problem make_euler(std::string name, EulerState left, EulerState right, double x0,
                   double gamma, double a, double b, int m, double cfl, double t_final) {
  Problem p;
  p.name = std::move(name);
  p.components = 3;
  p.domain_a = a;
  p.domain_b = b;
  p.bc = BoundaryCondition::transmissive();
  p.discontinuous = true;
  p.default_m = m;
  p.default_cfl = cfl;
  p.default_t_final = t_final;
  if (!(left.rho > 0.0 && left.p > 0.0 && right.rho > 0.0 && right.p > 0.0))
    throw config_error(p.name + ": densities and pressures must be positive");
  p.flux = [gamma](const double* c, double* f) {
    const double inv_rho = 1.0 / c[0];
    const double mom = c[1];
    const double e = c[2];
    const double u = mom * inv_rho;
    const double pr = (gamma - 1.0) * (e - 0.5 * mom * u);
    f[0] = mom;
    f[1] = mom * u + pr;
    f[2] = u * (e + pr);
  };
  p.max_speed = [gamma](const double* c) {
    const double rho = c[0];
    const double u = c[1] / rho;
    const double pr = (gamma - 1.0) * (c[2] - 0.5 * c[1] * u);
    return std::abs(u) + std::sqrt(gamma * pr / rho);
  };
  p.flux_array = [gamma](const double* c, double* f, int n) {
    for (int i = 0; i < n; ++i) {
      const double inv_rho = 1.0 / c[3 * i];
      const double mom = c[3 * i + 1];
      const double e = c[3 * i + 2];
      const double u = mom * inv_rho;
      const double pr = (gamma - 1.0) * (e - 0.5 * mom * u);
      f[3 * i] = mom;
      f[3 * i + 1] = mom * u + pr;
      f[3 * i + 2] = u * (e + pr);
    }
  };
  p.max_alpha = [gamma](const double* c, int n) {
    double a = 0.0;
    for (int i = 0; i < n; ++i) {
      const double rho = c[3 * i];
      const double u = c[3 * i + 1] / rho;
      const double pr = (gamma - 1.0) * (c[3 * i + 2] - 0.5 * c[3 * i + 1] * u);
      a = std::max(a, std::abs(u) + std::sqrt(gamma * pr / rho));
    }
    return a;
  };
  p.initial = [left, right, x0, gamma](double x, double* out) {
    (x < x0 ? left : right).to_conserved(out, gamma);
  };
  p.exact = [left, right, x0, gamma](double x, double t, double* out) {
    if (t <= 0.0) {
      (x < x0 ? left : right).to_conserved(out, gamma);
      return;
    }
    euler_riemann_exact(left, right, (x - x0) / t, gamma).to_conserved(out, gamma);
  };
  return p;
}

}  // namespace

double exact_nonconvex(NonconvexVariant variant, double x, double t) {
  if (t <= 0.0) throw std::domain_error("exact_nonconvex: requires t > 0");
  static const double sqrt6 = std::sqrt(6.0);
  static const double sqrt3 = std::sqrt(3.0);
  if (variant == NonconvexVariant::up) {
    if (x < ((sqrt6 - 2.0) * t + 1.0) / 4.0) return 0.0;
    if (x > (2.0 * t + 1.0) / 4.0) return 1.0;
    return (x - 0.25) / t + 0.5;
  }
  if (x < ((sqrt3 - 1.0) * t + 1.0) / 4.0) return 1.0;
  if (x > (t + 1.0) / 4.0) return 0.0;
  return 0.5 * (t - 4.0 * x + 1.0) / t;
}

Problem catalog(const std::string& name) {
  if (name == "advection_sine") {
    Problem p = scalar_base(name);
    p.domain_a = 0.0;
    p.domain_b = 2.0 * pi;
    p.bc = BoundaryCondition::periodic();
    p.discontinuous = false;
    p.default_m = 100;
    p.default_cfl = 0.4;
    p.default_t_final = 1.0;
    set_scalar_flux(p, [](double u) { return u; }, [](double) { return 1.0; });
    p.initial = [](double x, double* u) { u[0] = std::sin(x); };
    p.exact = [](double x, double t, double* u) { u[0] = std::sin(x - t); };
    return p;
  }
  if (name == "advection_pulse") {
    Problem p = scalar_base(name);
    p.domain_a = -1.0;
    p.domain_b = 1.0;
    p.bc = BoundaryCondition::transmissive();
    p.discontinuous = true;
    p.default_m = 200;
    p.default_cfl = 0.4;
    p.default_t_final = 0.5;
    set_scalar_flux(p, [](double u) { return u; }, [](double) { return 1.0; });
    p.initial = [](double x, double* u) { u[0] = pulse_ic(x); };
    p.exact = [](double x, double t, double* u) { u[0] = pulse_ic(x - t); };
    return p;
  }
  if (name == "burgers_sine") {
    Problem p = scalar_base(name);
    p.domain_a = 0.0;
    p.domain_b = 2.0 * pi;
    p.bc = BoundaryCondition::periodic();
    p.discontinuous = false;
    p.default_m = 100;
    p.default_cfl = 0.4;
    p.default_t_final = 0.5;
    set_scalar_flux(p, [](double u) { return 0.5 * u * u; }, [](double u) { return u; });
    p.initial = [](double x, double* u) { u[0] = std::sin(x); };
    p.exact = [](double x, double t, double* u) { u[0] = burgers_sine_exact(x, t); };
    return p;
  }
  if (name == "burgers_pulse") {
    Problem p = scalar_base(name);
    p.domain_a = -1.0;
    p.domain_b = 1.0;
    p.bc = BoundaryCondition::transmissive();
    p.discontinuous = true;
    p.default_m = 200;
    p.default_cfl = 0.4;
    p.default_t_final = 0.5;
    set_scalar_flux(p, [](double u) { return 0.5 * u * u; }, [](double u) { return u; });
    p.initial = [](double x, double* u) { u[0] = pulse_ic(x); };
    p.exact = [](double x, double t, double* u) { u[0] = burgers_pulse_exact(x, t); };
    return p;
  }
  if (name == "buckley_leverett") {
    Problem p = scalar_base(name);
    p.domain_a = -1.0;
    p.domain_b = 1.0;
    p.bc = BoundaryCondition::transmissive();
    p.discontinuous = true;
    p.default_m = 800;
    p.default_cfl = 0.2;
    p.default_t_final = 0.21;
    set_scalar_flux(p, &bl_flux, &bl_speed);
    p.initial = [](double x, double* u) { u[0] = pulse_ic(x); };
    return p;
  }
  if (name == "nonconvex_up" || name == "nonconvex_down") {
    const bool up = name == "nonconvex_up";
    Problem p = scalar_base(name);
    p.domain_a = 0.0;
    p.domain_b = 1.0;
    p.bc = BoundaryCondition::transmissive();
    p.discontinuous = true;
    p.default_m = 200;
    p.default_cfl = 0.2;
    p.default_t_final = 1.0;
    set_scalar_flux(p, &nonconvex_flux, &nonconvex_speed);
    if (up) {
      p.initial = [](double x, double* u) { u[0] = x <= 0.25 ? 0.0 : 1.0; };
      p.exact = [](double x, double t, double* u) {
        u[0] = t <= 0.0 ? (x <= 0.25 ? 0.0 : 1.0)
                        : exact_nonconvex(NonconvexVariant::up, x, t);
      };
    } else {
      p.initial = [](double x, double* u) { u[0] = x <= 0.25 ? 1.0 : 0.0; };
      p.exact = [](double x, double t, double* u) {
        u[0] = t <= 0.0 ? (x <= 0.25 ? 1.0 : 0.0)
                        : exact_nonconvex(NonconvexVariant::down, x, t);
      };
    }
    return p;
  }
  if (name == "euler_sod") {
    return make_euler(name, {1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}, 0.5, euler_gamma_default,
                      0.0, 1.0, 300, 0.3, 0.25);
  }
  if (name == "euler_lax") {
    return make_euler(name, {0.445, 0.698, 3.528}, {0.5, 0.0, 0.571}, 0.0,
                      euler_gamma_default, -4.0, 4.0, 500, 0.4, 1.3);
  }
  throw config_error("unknown problem name: " + name);
}

std::vector<std::string> catalog_names() {
  return {"advection_sine", "advection_pulse", "burgers_sine",  "burgers_pulse",
          "buckley_leverett", "nonconvex_up",  "nonconvex_down", "euler_sod",
          "euler_lax"};
}

Problem euler_from_riemann_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open riemann file: " + path);
  std::map<std::string, double> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string key, eq;
    double value;
    if (!(ss >> key)) continue;
    if (!(ss >> eq >> value) || eq != "=")
      throw config_error("riemann file: malformed line: " + line);
    kv[key] = value;
  }
  const auto need = [&](const std::string& k) {
    const auto it = kv.find(k);
    if (it == kv.end()) throw config_error("riemann file: missing key " + k);
    return it->second;
  };
  const EulerState left{need("rho_left"), need("u_left"), need("p_left")};
  const EulerState right{need("rho_right"), need("u_right"), need("p_right")};
  const double x0 = need("x0");
  const double gamma = kv.count("gamma") ? kv["gamma"] : euler_gamma_default;
  const double a = kv.count("domain_a") ? kv["domain_a"] : 0.0;
  const double b = kv.count("domain_b") ? kv["domain_b"] : 1.0;
  const std::vector<std::string> known = {"rho_left",  "u_left",  "p_left",  "rho_right",
                                          "u_right",   "p_right", "x0",      "gamma",
                                          "domain_a",  "domain_b"};
  for (const auto& [k, v] : kv) {
    bool ok = false;
    for (const auto& name : known) ok = ok || name == k;
    if (!ok) throw config_error("riemann file: unknown key " + k);
  }
  return make_euler("euler_custom", left, right, x0, gamma, a, b, 300, 0.3, 0.2);
}

double EulerState::sound_speed(double gamma) const { return std::sqrt(gamma * p / rho); }

void EulerState::to_conserved(double* c, double gamma) const {
  c[0] = rho;
  c[1] = rho * u;
  c[2] = energy(gamma);
}

EulerState EulerState::from_conserved(const double* c, double gamma) {
  EulerState s;
  s.rho = c[0];
  s.u = c[1] / c[0];
  s.p = (gamma - 1.0) * (c[2] - 0.5 * c[1] * s.u);
  return s;
}

}  // namespace hybsqi
