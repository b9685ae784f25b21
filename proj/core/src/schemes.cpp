#include "hybsqi/schemes.hpp"

#include <cmath>
#include <stdexcept>

#include "hybsqi/errors.hpp"

namespace hybsqi {

int stencil_half_width(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::cbsqi: return 2;
    case SchemeKind::qnbsqi: return 4;
    case SchemeKind::weno3: return 2;
    case SchemeKind::weno5: return 3;
  }
  throw std::invalid_argument("stencil_half_width: bad scheme");
}

std::string scheme_name(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::cbsqi: return "cbsqi";
    case SchemeKind::qnbsqi: return "qnbsqi";
    case SchemeKind::weno3: return "weno3";
    case SchemeKind::weno5: return "weno5";
  }
  return "?";
}

SchemeKind scheme_from_name(const std::string& name) {
  if (name == "cbsqi") return SchemeKind::cbsqi;
  if (name == "qnbsqi") return SchemeKind::qnbsqi;
  if (name == "weno3") return SchemeKind::weno3;
  if (name == "weno5") return SchemeKind::weno5;
  throw config_error("unknown scheme name: " + name);
}

void split_flux(std::span<const double> f_values, std::span<const double> u_values,
                double alpha, std::span<double> plus, std::span<double> minus) {
  const std::size_t n = f_values.size();
  if (u_values.size() != n || plus.size() != n || minus.size() != n)
    throw std::invalid_argument("split_flux: length mismatch");
  if (alpha <= 0.0) {
    for (std::size_t i = 1; i < n; ++i)
      if (u_values[i] != u_values[0])
        throw std::invalid_argument("split_flux: alpha must be positive for non-constant data");
  }
  for (std::size_t i = 0; i < n; ++i) {
    plus[i] = 0.5 * (f_values[i] + alpha * u_values[i]);
    minus[i] = 0.5 * (f_values[i] - alpha * u_values[i]);
  }
}

double weno3_part(const double* w, WenoWorkspace& ws) {
  // w = (f_{up-2}, f_{up-1}, f_{up}) ordered towards the interface
  const double q0 = -0.5 * w[0] + 1.5 * w[1];
  const double q1 = 0.5 * w[1] + 0.5 * w[2];
  const double is0 = (w[1] - w[0]) * (w[1] - w[0]);
  const double is1 = (w[2] - w[1]) * (w[2] - w[1]);
  const double a0 = (1.0 / 3.0) / ((ws.epsilon + is0) * (ws.epsilon + is0));
  const double a1 = (2.0 / 3.0) / ((ws.epsilon + is1) * (ws.epsilon + is1));
  const double inv = 1.0 / (a0 + a1);
  const double w0 = a0 * inv;
  const double w1 = a1 * inv;
  ws.n_stencils = 2;
  ws.linear_weights = {1.0 / 3.0, 2.0 / 3.0, 0.0};
  ws.candidate = {q0, q1, 0.0};
  ws.smoothness = {is0, is1, 0.0};
  ws.nonlinear_weights = {w0, w1, 0.0};
  return w0 * q0 + w1 * q1;
}

double weno5_part(const double* w, WenoWorkspace& ws) {
  // w = (f_{up-2}, f_{up-1}, f_{up}, f_{up+1}, f_{up+2}) with w[2] the
  // upwind-most fully-used node
  const double q0 = (1.0 / 3.0) * w[0] - (7.0 / 6.0) * w[1] + (11.0 / 6.0) * w[2];
  const double q1 = -(1.0 / 6.0) * w[1] + (5.0 / 6.0) * w[2] + (1.0 / 3.0) * w[3];
  const double q2 = (1.0 / 3.0) * w[2] + (5.0 / 6.0) * w[3] - (1.0 / 6.0) * w[4];
  const double d0 = w[0] - 2.0 * w[1] + w[2];
  const double d1 = w[1] - 2.0 * w[2] + w[3];
  const double d2 = w[2] - 2.0 * w[3] + w[4];
  const double s0 = w[0] - 4.0 * w[1] + 3.0 * w[2];
  const double s1 = w[1] - w[3];
  const double s2 = 3.0 * w[2] - 4.0 * w[3] + w[4];
  const double is0 = (13.0 / 12.0) * d0 * d0 + 0.25 * s0 * s0;
  const double is1 = (13.0 / 12.0) * d1 * d1 + 0.25 * s1 * s1;
  const double is2 = (13.0 / 12.0) * d2 * d2 + 0.25 * s2 * s2;
  const double a0 = 0.1 / ((ws.epsilon + is0) * (ws.epsilon + is0));
  const double a1 = 0.6 / ((ws.epsilon + is1) * (ws.epsilon + is1));
  const double a2 = 0.3 / ((ws.epsilon + is2) * (ws.epsilon + is2));
  const double inv = 1.0 / (a0 + a1 + a2);
  const double w0 = a0 * inv;
  const double w1 = a1 * inv;
  const double w2 = a2 * inv;
  ws.n_stencils = 3;
  ws.linear_weights = {0.1, 0.6, 0.3};
  ws.candidate = {q0, q1, q2};
  ws.smoothness = {is0, is1, is2};
  ws.nonlinear_weights = {w0, w1, w2};
  return w0 * q0 + w1 * q1 + w2 * q2;
}

double flux_weno3(const FluxWindow& window, WenoWorkspace& ws) {
  const std::ptrdiff_t c = window.center;
  const double wp[3] = {window.plus[c - 1], window.plus[c], window.plus[c + 1]};
  const double fp = weno3_part(wp, ws);
  // mirror image about the interface for the negative part
  const double wm[3] = {window.minus[c + 2], window.minus[c + 1], window.minus[c]};
  const double fm = weno3_part(wm, ws);
  return fp + fm;
}

double flux_weno5(const FluxWindow& window, WenoWorkspace& ws) {
  const std::ptrdiff_t c = window.center;
  const double wp[5] = {window.plus[c - 2], window.plus[c - 1], window.plus[c],
                        window.plus[c + 1], window.plus[c + 2]};
  const double fp = weno5_part(wp, ws);
  const double wm[5] = {window.minus[c + 3], window.minus[c + 2], window.minus[c + 1],
                        window.minus[c], window.minus[c - 1]};
  const double fm = weno5_part(wm, ws);
  return fp + fm;
}

std::complex<double> fourier_symbol(SchemeKind kind, double theta) {
  const std::complex<double> i(0.0, 1.0);
  switch (kind) {
    case SchemeKind::cbsqi:
      return (i / 6.0) * (8.0 * std::sin(theta) - std::sin(2.0 * theta));
    case SchemeKind::qnbsqi:
      return (i / 6.0) * ((2069.0 / 240.0) * std::sin(theta) -
                          (341.0 / 240.0) * std::sin(2.0 * theta) +
                          (3.0 / 80.0) * std::sin(3.0 * theta) +
                          (13.0 / 480.0) * std::sin(4.0 * theta));
    default:
      throw std::invalid_argument("fourier_symbol: defined for cbsqi and qnbsqi only");
  }
}

}  // namespace hybsqi
