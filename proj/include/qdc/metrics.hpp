// Entanglement and similarity measures for the two-qubit spatial state:
// Wootters concurrence, pure-state concurrence, pure-target fidelity, purity.
#pragma once

#include <optional>

#include "qdc/types.hpp"

namespace qdc {

struct MetricsReport {
  double concurrence = 0.0;
  double purity = 1.0;
  std::optional<double> fidelity_vs_target;
};

// Wootters concurrence C = max(0, l1 - l2 - l3 - l4), with l_i the decreasing
// square roots of the eigenvalues of rho (sy x sy) rho* (sy x sy). Computed
// through the Hermitian form sqrt(rho) rho~ sqrt(rho), which has the same
// spectrum. Eigenvalues are clamped at 0 (tolerance 1e-10) before the square
// root. Throws PhysicalityError if rho fails Hermiticity/trace/PSD checks
// (PSD rejection threshold -1e-8).
double concurrence(const DensityMatrix& rho);

// Closed form for normalized pure two-qubit states:
// C = 2 |amp11 amp22 - amp12 amp21|.
double concurrence_pure(const BiphotonState& state);

// F = <target| rho |target> for a normalized pure target.
double fidelity(const DensityMatrix& rho, const BiphotonState& target);

// Tr(rho^2) for a physical rho.
double purity(const DensityMatrix& rho);

// Convenience assembly of the full report.
MetricsReport metrics_report(const DensityMatrix& rho,
                             const BiphotonState* target = nullptr);

// Validates the physical-density-matrix invariants; throws PhysicalityError
// describing the first violated one.
void require_physical(const DensityMatrix& rho);

}  // namespace qdc
