#include <cmath>

#include "hybsqi/errors.hpp"
#include "hybsqi/problems.hpp"

namespace hybsqi {

namespace {

// Pressure function for one side: shock branch above p_k, rarefaction below.
double side_function(double p, const EulerState& s, double gamma, double* deriv) {
  const double c = s.sound_speed(gamma);
  if (p > s.p) {
    const double a = 2.0 / ((gamma + 1.0) * s.rho);
    const double b = s.p * (gamma - 1.0) / (gamma + 1.0);
    const double root = std::sqrt(a / (p + b));
    if (deriv) *deriv = root * (1.0 - 0.5 * (p - s.p) / (p + b));
    return (p - s.p) * root;
  }
  const double pr = p / s.p;
  const double ex = (gamma - 1.0) / (2.0 * gamma);
  if (deriv) *deriv = std::pow(pr, -(gamma + 1.0) / (2.0 * gamma)) / (s.rho * c);
  return (2.0 * c / (gamma - 1.0)) * (std::pow(pr, ex) - 1.0);
}

}  // namespace

RiemannStar euler_star_state(const EulerState& left, const EulerState& right, double gamma) {
  if (!(left.rho > 0.0 && left.p > 0.0 && right.rho > 0.0 && right.p > 0.0))
    throw numerical_error("riemann: nonpositive density or pressure");
  const double cl = left.sound_speed(gamma);
  const double cr = right.sound_speed(gamma);
  const double du = right.u - left.u;
  if (2.0 * (cl + cr) / (gamma - 1.0) <= du)
    throw numerical_error("riemann: initial states generate vacuum");

  // two-rarefaction guess
  const double z = (gamma - 1.0) / (2.0 * gamma);
  double p = std::pow((cl + cr - 0.5 * (gamma - 1.0) * du) /
                          (cl / std::pow(left.p, z) + cr / std::pow(right.p, z)),
                      1.0 / z);
  if (!(p > 0.0)) p = 0.5 * (left.p + right.p);

  RiemannStar star;
  for (int it = 0; it < 200; ++it) {
    double dl, dr;
    const double fl = side_function(p, left, gamma, &dl);
    const double fr = side_function(p, right, gamma, &dr);
    const double f = fl + fr + du;
    const double step = f / (dl + dr);
    double p_next = p - step;
    if (p_next <= 0.0) p_next = 0.5 * p;
    const double change = 2.0 * std::abs(p_next - p) / (p_next + p);
    p = p_next;
    star.iterations = it + 1;
    if (change < 1e-12) break;
    if (it == 199) throw numerical_error("riemann: pressure iteration did not converge");
  }
  star.p = p;
  const double fl = side_function(p, left, gamma, nullptr);
  const double fr = side_function(p, right, gamma, nullptr);
  star.u = 0.5 * (left.u + right.u) + 0.5 * (fr - fl);
  return star;
}

EulerState euler_riemann_exact(const EulerState& left, const EulerState& right,
                               double xi, double gamma) {
  const RiemannStar star = euler_star_state(left, right, gamma);
  const double g1 = (gamma - 1.0) / (gamma + 1.0);
  const double g2 = (gamma - 1.0) / (2.0 * gamma);

  if (xi <= star.u) {
    // left of the contact
    const double c = left.sound_speed(gamma);
    if (star.p > left.p) {
      const double sl = left.u - c * std::sqrt((gamma + 1.0) / (2.0 * gamma) * star.p / left.p +
                                               g2);
      if (xi <= sl) return left;
      EulerState s;
      s.rho = left.rho * (star.p / left.p + g1) / (g1 * star.p / left.p + 1.0);
      s.u = star.u;
      s.p = star.p;
      return s;
    }
    const double head = left.u - c;
    if (xi <= head) return left;
    const double c_star = c * std::pow(star.p / left.p, g2);
    const double tail = star.u - c_star;
    if (xi >= tail) {
      EulerState s;
      s.rho = left.rho * std::pow(star.p / left.p, 1.0 / gamma);
      s.u = star.u;
      s.p = star.p;
      return s;
    }
    EulerState s;  // inside the fan
    const double f = 2.0 / (gamma + 1.0) + g1 / c * (left.u - xi);
    s.rho = left.rho * std::pow(f, 2.0 / (gamma - 1.0));
    s.u = 2.0 / (gamma + 1.0) * (c + 0.5 * (gamma - 1.0) * left.u + xi);
    s.p = left.p * std::pow(f, 1.0 / g2);
    return s;
  }

  // right of the contact
  const double c = right.sound_speed(gamma);
  if (star.p > right.p) {
    const double sr = right.u + c * std::sqrt((gamma + 1.0) / (2.0 * gamma) * star.p / right.p +
                                              g2);
    if (xi >= sr) return right;
    EulerState s;
    s.rho = right.rho * (star.p / right.p + g1) / (g1 * star.p / right.p + 1.0);
    s.u = star.u;
    s.p = star.p;
    return s;
  }
  const double head = right.u + c;
  if (xi >= head) return right;
  const double c_star = c * std::pow(star.p / right.p, g2);
  const double tail = star.u + c_star;
  if (xi <= tail) {
    EulerState s;
    s.rho = right.rho * std::pow(star.p / right.p, 1.0 / gamma);
    s.u = star.u;
    s.p = star.p;
    return s;
  }
  EulerState s;
  const double f = 2.0 / (gamma + 1.0) - g1 / c * (right.u - xi);
  s.rho = right.rho * std::pow(f, 2.0 / (gamma - 1.0));
  s.u = 2.0 / (gamma + 1.0) * (-c + 0.5 * (gamma - 1.0) * right.u + xi);
  s.p = right.p * std::pow(f, 1.0 / g2);
  return s;
}

}  // namespace hybsqi
