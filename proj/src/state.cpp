#include "qdc/types.hpp"

#include <sstream>

namespace qdc {

double norm(const BiphotonState& state) {
  return std::sqrt(state.norm_squared());
}

namespace {

// Single-photon transform between the eigenmode amplitudes (k in {0, pi})
// and the waveguide amplitudes (l in {1, 2}): u(l, k) = exp(i k l) / sqrt(2).
// k = 0 contributes +1; k = pi contributes (-1)^l, i.e. -1 for l = 1 and +1
// for l = 2. Real-valued, so the two-photon transform is its own transpose
// up to index order.
constexpr double kInvSqrt2 = 0.70710678118654752440;

double single_mode_factor(int l_index, int k_index) {
  if (k_index == 0) return 1.0;
  return (l_index == 0) ? -1.0 : 1.0;  // l_index 0 is waveguide 1
}

}  // namespace

BiphotonState eigenmode_to_waveguide(const BiphotonState& state) {
  if (state.basis != Basis::Eigenmode) {
    throw BasisError("eigenmode_to_waveguide: input is not in the eigenmode basis");
  }
  BiphotonState out;
  out.basis = Basis::Waveguide;
  for (int l = 0; l < 2; ++l) {
    for (int m = 0; m < 2; ++m) {
      complexd acc{};
      for (int kl = 0; kl < 2; ++kl) {
        for (int km = 0; km < 2; ++km) {
          acc += state(kl, km) * (single_mode_factor(l, kl) * single_mode_factor(m, km));
        }
      }
      out(l, m) = 0.5 * acc;  // (1/sqrt(2)) per photon keeps the transform unitary
    }
  }
  return out;
}

BiphotonState waveguide_to_eigenmode(const BiphotonState& state) {
  if (state.basis != Basis::Waveguide) {
    throw BasisError("waveguide_to_eigenmode: input is not in the waveguide basis");
  }
  BiphotonState out;
  out.basis = Basis::Eigenmode;
  for (int kl = 0; kl < 2; ++kl) {
    for (int km = 0; km < 2; ++km) {
      complexd acc{};
      for (int l = 0; l < 2; ++l) {
        for (int m = 0; m < 2; ++m) {
          // Inverse of a real orthogonal transform: same factors, transposed.
          acc += state(l, m) * (single_mode_factor(l, kl) * single_mode_factor(m, km));
        }
      }
      out(kl, km) = 0.5 * acc;
    }
  }
  return out;
}

BiphotonState normalize(const BiphotonState& state) {
  const double n2 = state.norm_squared();
  if (!(n2 > 0.0)) {
    throw DegenerateStateError("normalize: zero-norm state (no pairs generated)");
  }
  BiphotonState out = state;
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& a : out.amp) a *= inv;
  return out;
}

void CouplerConfig::validate() const {
  std::ostringstream bad;
  auto fail = [&bad](const char* field, const char* why) {
    if (bad.tellp() > 0) bad << "; ";
    bad << field << ": " << why;
  };
  if (!(coupling > 0.0) || !std::isfinite(coupling)) fail("coupler.coupling_per_m", "must be > 0 and finite");
  if (!(length > 0.0) || !std::isfinite(length)) fail("coupler.length_m", "must be > 0 and finite");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) fail("coupler.gamma", "must be >= 0 and finite");
  if (!(pump_amplitude_1 >= 0.0) || !std::isfinite(pump_amplitude_1)) {
    fail("coupler.pump_amplitude_1", "must be >= 0 and finite (phase belongs in pump_phase_diff_rad)");
  }
  if (!(pump_amplitude_2 >= 0.0) || !std::isfinite(pump_amplitude_2)) {
    fail("coupler.pump_amplitude_2", "must be >= 0 and finite (phase belongs in pump_phase_diff_rad)");
  }
  if (!std::isfinite(delta_phi)) fail("coupler.pump_phase_diff_rad", "must be finite");
  if (!std::isfinite(delta_beta0)) fail("coupler.delta_beta0_per_m", "must be finite");
  if (bad.tellp() > 0) throw ConfigError(bad.str());
}

double DensityMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return worst;
}

void DensityMatrix::hermitize() {
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      const complexd avg = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
      (*this)(i, j) = avg;
      (*this)(j, i) = std::conj(avg);
    }
  }
}

double DensityMatrix::purity() const {
  // Tr(rho^2) = sum_ij rho_ij rho_ji; for Hermitian rho this is sum |rho_ij|^2.
  double s = 0.0;
  for (const auto& v : m) s += std::norm(v);
  return s;
}

DensityMatrix DensityMatrix::identity_mix() {
  DensityMatrix r;
  for (int i = 0; i < 4; ++i) r(i, i) = 0.25;
  return r;
}

DensityMatrix pure_density_matrix(const BiphotonState& state) {
  if (state.basis != Basis::Waveguide) {
    throw BasisError("pure_density_matrix: state must be in the waveguide basis");
  }
  const double n2 = state.norm_squared();
  if (std::abs(n2 - 1.0) > 1e-9) {
    throw NormalizationError("pure_density_matrix: state is not normalized");
  }
  DensityMatrix rho;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      rho(i, j) = state.amp[i] * std::conj(state.amp[j]);
    }
  }
  return rho;
}

}  // namespace qdc
