// Closed-form solution of the coupled-mode equations in eigenmode space,
// the waveguide-basis composition, and parameter-space sweeps over the pump
// phase difference and the normalized phase mismatch.
#pragma once

#include <vector>

#include "qdc/types.hpp"

namespace qdc {

// sin(pi x) / x with the removable singularity sinc(0) = pi. This is the
// unnormalized convention; swapping in sin(pi x)/(pi x) silently rescales the
// whole map, so keep it pinned here.
double sinc(double x);

// Eigenmode-space amplitudes at z = L:
//   psi_{00 / pipi} = (gamma L / 4) [A1 + A2 e^{i dphi}]
//                     * exp[i L c (b +/- 2)/2] * sinc[L c (b -/+ 2)/(2 pi)]
//   psi_{0pi} = psi_{pi0}
//             = -(gamma L / 4) [A1 - A2 e^{i dphi}]
//               * exp[i L c b / 2] * sinc[L c b/(2 pi)]
// with b = delta_beta / c. Unnormalized.
BiphotonState solve_eigenmode(const CouplerConfig& config);

// eigenmode_to_waveguide(solve_eigenmode(config)), normalized.
// Throws DegenerateStateError when the generated state is identically zero
// (e.g. gamma = 0, or both pump factors vanish).
BiphotonState solve_waveguide(const CouplerConfig& config);

// True when the analytic solution is zero at the generation scale; used by
// sweeps to store null points instead of raising.
bool is_identically_zero(const BiphotonState& unnormalized,
                         const CouplerConfig& config);

// Linear temperature-to-mismatch map; the paper's device shifts the
// normalized mismatch by ~2.5c per 0.1 degC.
constexpr double kDefaultMismatchPerDegC = 25.0;
double temperature_to_mismatch(double delta_t_deg_c,
                               double per_deg_c = kDefaultMismatchPerDegC);

struct SweepGrid {
  std::vector<double> delta_phi_values;           // rad
  std::vector<double> delta_beta_over_c_values;   // dimensionless

  static SweepGrid uniform(double phi_min, double phi_max, int phi_count,
                           double dbc_min, double dbc_max, int dbc_count);

  std::size_t size() const {
    return delta_phi_values.size() * delta_beta_over_c_values.size();
  }
  void validate() const;  // throws ConfigError
};

// Per-point sweep results. Row-major over (delta_phi outer, delta_beta
// inner). NaN marks null values: the whole point when the state is
// identically zero, or an individual relative phase when either amplitude
// involved is zero.
struct CorrelationMap {
  SweepGrid grid;
  std::vector<double> p11, p12, p22;               // normalized, p12 == p21
  std::vector<double> phase11_rel, phase12_rel;    // arg relative to psi22
  std::vector<double> concurrence;

  std::size_t index(std::size_t phi_i, std::size_t dbc_i) const {
    return phi_i * grid.delta_beta_over_c_values.size() + dbc_i;
  }
};

// Runs solve_waveguide at every grid point, overriding delta_phi and
// delta_beta0 of config_base. Pure per point; fans out over `threads`
// workers with results collected in grid order.
CorrelationMap sweep(const CouplerConfig& config_base, const SweepGrid& grid,
                     int threads = 1);

// Relative phase arg(a / ref) in (-pi, pi], or NaN when either magnitude is
// below 1e-12 of the state norm.
double relative_phase(const complexd& a, const complexd& ref, double norm_scale);

}  // namespace qdc
