#include "qdc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qdc/hermitian_eig.hpp"

namespace qdc {

namespace {

// sy (x) sy over the ordered basis {11, 12, 21, 22}: the spin-flip matrix of
// the Wootters construction. Real and symmetric.
const std::array<double, 16> kSpinFlip = {
    0, 0, 0, -1,  //
    0, 0, 1, 0,   //
    0, 1, 0, 0,   //
    -1, 0, 0, 0,
};

std::array<complexd, 16> spin_flipped_conjugate(const DensityMatrix& rho) {
  // rho~ = (sy x sy) rho* (sy x sy).
  std::array<complexd, 16> out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      complexd acc{};
      for (int k = 0; k < 4; ++k) {
        if (kSpinFlip[4 * i + k] == 0.0) continue;
        for (int l = 0; l < 4; ++l) {
          if (kSpinFlip[4 * l + j] == 0.0) continue;
          acc += kSpinFlip[4 * i + k] * std::conj(rho(k, l)) * kSpinFlip[4 * l + j];
        }
      }
      out[4 * i + j] = acc;
    }
  }
  return out;
}

}  // namespace

void require_physical(const DensityMatrix& rho) {
  const double defect = rho.hermiticity_defect();
  if (defect > 1e-9) {
    std::ostringstream msg;
    msg << "density matrix is not Hermitian (defect " << defect << ")";
    throw PhysicalityError(msg.str());
  }
  const double tr = rho.trace();
  if (std::abs(tr - 1.0) > 1e-9) {
    std::ostringstream msg;
    msg << "density matrix trace is " << tr << ", expected 1";
    throw PhysicalityError(msg.str());
  }
  const double lmin = min_eigenvalue(rho);
  if (lmin < -1e-8) {
    std::ostringstream msg;
    msg << "density matrix is not PSD (min eigenvalue " << lmin << ")";
    throw PhysicalityError(msg.str());
  }
}

double concurrence(const DensityMatrix& rho) {
  require_physical(rho);

  const std::array<complexd, 16> root = psd_sqrt(rho.m);
  const std::array<complexd, 16> flipped = spin_flipped_conjugate(rho);
  // M = sqrt(rho) rho~ sqrt(rho) is Hermitian PSD with the same spectrum as
  // rho rho~; its eigenvalues are the squared Wootters lambdas.
  const std::array<complexd, 16> m = matmul4(matmul4(root, flipped), root);

  const HermitianEig4 eig = hermitian_eig4(m);
  std::array<double, 4> lambda;
  for (int i = 0; i < 4; ++i) {
    double v = eig.values[i];
    if (v < 0.0) {
      if (v < -1e-10) {
        std::ostringstream msg;
        msg << "concurrence: spectrum of sqrt(rho) rho~ sqrt(rho) has eigenvalue "
            << v << " below the clamping tolerance";
        throw PhysicalityError(msg.str());
      }
      v = 0.0;
    }
    lambda[i] = std::sqrt(v);
  }
  std::sort(lambda.begin(), lambda.end(), std::greater<double>());
  const double c = lambda[0] - lambda[1] - lambda[2] - lambda[3];
  return std::max(0.0, c);
}

double concurrence_pure(const BiphotonState& state) {
  if (state.basis != Basis::Waveguide) {
    throw BasisError("concurrence_pure: state must be in the waveguide basis");
  }
  if (std::abs(state.norm_squared() - 1.0) > 1e-9) {
    throw NormalizationError("concurrence_pure: state is not normalized");
  }
  return 2.0 * std::abs(state(0, 0) * state(1, 1) - state(0, 1) * state(1, 0));
}

double fidelity(const DensityMatrix& rho, const BiphotonState& target) {
  if (target.basis != Basis::Waveguide) {
    throw BasisError("fidelity: target must be in the waveguide basis");
  }
  if (std::abs(target.norm_squared() - 1.0) > 1e-9) {
    throw NormalizationError("fidelity: target is not normalized");
  }
  require_physical(rho);
  complexd f{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      f += std::conj(target.amp[i]) * rho(i, j) * target.amp[j];
    }
  }
  return std::clamp(f.real(), 0.0, 1.0);
}

double purity(const DensityMatrix& rho) {
  require_physical(rho);
  return rho.purity();
}

MetricsReport metrics_report(const DensityMatrix& rho,
                             const BiphotonState* target) {
  MetricsReport report;
  report.concurrence = concurrence(rho);
  report.purity = purity(rho);
  if (target != nullptr) {
    report.fidelity_vs_target = fidelity(rho, *target);
  }
  return report;
}

}  // namespace qdc
