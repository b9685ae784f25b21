#ifndef HYBSQI_SCHEMES_HPP
#define HYBSQI_SCHEMES_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string>

namespace hybsqi {

enum class SchemeKind { cbsqi, qnbsqi, weno3, weno5 };

// Widest node offset an interface flux of this scheme reaches from its cell.
int stencil_half_width(SchemeKind kind);

std::string scheme_name(SchemeKind kind);
SchemeKind scheme_from_name(const std::string& name);

// Scratch and inspectable state of the last one-sided WENO reconstruction.
struct WenoWorkspace {
  double epsilon = 1e-6;
  int n_stencils = 0;
  std::array<double, 3> linear_weights{};
  std::array<double, 3> candidate{};     // q_k
  std::array<double, 3> smoothness{};    // IS_k
  std::array<double, 3> nonlinear_weights{};  // omega_k
};

// Global Lax-Friedrichs splitting f = f+ + f- with f± = (f ± alpha*u)/2.
// Requires alpha > 0 unless the data is constant.
void split_flux(std::span<const double> f_values, std::span<const double> u_values,
                double alpha, std::span<double> plus, std::span<double> minus);

// Interface flux F_{j+1/2} from f_{j-1},f_j,f_{j+1},f_{j+2}.
inline double flux_cbsqi(std::span<const double, 4> f) {
  return (-f[0] + 7.0 * f[1] + 7.0 * f[2] - f[3]) / 12.0;
}

// Interface flux F_{j+1/2} from f_{j-3}..f_{j+4}.
inline double flux_qnbsqi(std::span<const double, 8> f) {
  return (13.0 * f[0] + 31.0 * f[1] - 651.0 * f[2] + 3487.0 * f[3] + 3487.0 * f[4] -
          651.0 * f[5] + 31.0 * f[6] + 13.0 * f[7]) /
         5760.0;
}

// One-sided reconstructions on an upwind-ordered 3- or 5-point window.
double weno3_part(const double* w, WenoWorkspace& ws);
double weno5_part(const double* w, WenoWorkspace& ws);

// Split-flux windows around one interface: `plus`/`minus` are f± arrays
// indexable at center-relative offsets, `center` is the index of node j for
// interface j+1/2.
struct FluxWindow {
  std::span<const double> plus;
  std::span<const double> minus;
  std::ptrdiff_t center = 0;
};

double flux_weno3(const FluxWindow& window, WenoWorkspace& ws);
double flux_weno5(const FluxWindow& window, WenoWorkspace& ws);

// Semi-discrete symbol C(theta) of the BSQI first-derivative operator;
// purely imaginary for both schemes.
std::complex<double> fourier_symbol(SchemeKind kind, double theta);

}  // namespace hybsqi

#endif
