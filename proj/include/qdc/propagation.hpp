// Direct numerical integration of the coupled-mode equations with
// z-dependent mismatch (sample inhomogeneity) and frequency-dependent
// mismatch (dispersion). Serves both as the brute-force oracle for the
// analytic solver and as the realistic-sample simulator.
#pragma once

#include <span>
#include <vector>

#include "qdc/kernels.hpp"
#include "qdc/types.hpp"

namespace qdc {

// delta_beta(z)/c as a polynomial in the normalized position s = z/L.
// An empty coefficient list (or all zeros) is the homogeneous case.
struct InhomogeneityProfile {
  std::vector<double> coefficients;

  bool homogeneous() const;
  // delta_beta(z) in 1/m; z in [0, L].
  double value(double z, double coupling, double length) const;
  // integral_0^z delta_beta dz', evaluated from the antiderivative.
  double phase_integral(double z, double coupling, double length) const;
  void validate() const;  // finite coefficients
};

// Quadratic dispersion model: delta_beta_omega(omega) = D (omega - omega0)^2.
// The paper's device has a measured dispersion curve; the curvature here is
// configurable and the default is documented in the bundled config schema.
struct DispersionModel {
  double curvature = 0.0;         // D, s^2/m  (i.e. 1/(m (rad/s)^2))
  double center_frequency = 0.0;  // omega0, rad/s

  double mismatch_at(double omega) const {
    const double d = omega - center_frequency;
    return curvature * d * d;
  }
  void validate() const;
};

// One waveguide-basis state per signal frequency; states are unnormalized so
// spectral weights survive into the filter quadrature.
struct SpectralState {
  std::vector<double> frequencies;  // rad/s, strictly increasing
  std::vector<BiphotonState> states;

  void validate() const;  // ordering + size match
};

// The three mismatch contributions at (omega, z), individually queryable.
struct MismatchTerms {
  double degenerate = 0.0;      // delta_beta0
  double dispersion = 0.0;      // D (omega - omega0)^2
  double inhomogeneity = 0.0;   // delta_beta(z)
  double total() const { return degenerate + dispersion + inhomogeneity; }
};

// Throws DomainError when z is outside [0, L].
MismatchTerms total_mismatch(const CouplerConfig& config,
                             const DispersionModel& dispersion,
                             const InhomogeneityProfile& profile, double omega,
                             double z);

struct IntegrateOptions {
  int steps = 2000;  // base step count; at least 100
  const kernels::Kernel* kernel = nullptr;  // nullptr = auto-select
  // The step count is doubled until the result changes by less than
  // `converged_rel` between consecutive refinements (at most `max_doublings`
  // extra refinements); a change above `fail_rel` at the cap raises
  // AccuracyError. Changes are measured relative to the state norm with an
  // absolute floor at 1e-12 of the generation scale so identically-zero
  // states cannot produce spurious failures.
  double converged_rel = 1e-8;
  double fail_rel = 1e-4;
  int max_doublings = 5;
};

// Integrates the coupled-mode system at a single signal frequency from
// vacuum at z = 0 to z = L. Returns the unnormalized waveguide-basis state.
BiphotonState integrate(const CouplerConfig& config,
                        const DispersionModel& dispersion,
                        const InhomogeneityProfile& profile, double omega,
                        const IntegrateOptions& options = {});

// One integration per grid frequency, assembled in order. The whole grid is
// refined together so results do not depend on batch grouping.
SpectralState integrate_spectrum(const CouplerConfig& config,
                                 const DispersionModel& dispersion,
                                 const InhomogeneityProfile& profile,
                                 std::span<const double> frequency_grid,
                                 const IntegrateOptions& options = {});

// Uniform grid of `points` frequencies symmetric about `center`, spanning
// center +/- half_span. Odd point counts place the center on the grid.
std::vector<double> symmetric_frequency_grid(double center, double half_span,
                                             int points);

}  // namespace qdc
