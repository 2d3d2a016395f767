// Core domain types for the two-waveguide SPDC coupler simulator:
// biphoton amplitudes, coupler parameters, two-qubit density matrices.
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qdc {

using complexd = std::complex<double>;

// ---------------------------------------------------------------------------
// Error hierarchy. CLI maps these onto exit codes (see tools/).
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation received a state in the wrong basis.
class BasisError : public Error {
 public:
  using Error::Error;
};

// State has zero norm (no pairs generated), cannot be normalized or used.
class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

// Input expected to be normalized was not.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

// Density matrix fails Hermiticity/positivity/trace requirements.
class PhysicalityError : public Error {
 public:
  using Error::Error;
};

// Numerical integration failed its step-doubling convergence check.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

// Frequency grid violates its invariants (ordering, symmetry).
class GridError : public Error {
 public:
  using Error::Error;
};

// Argument outside the operation's domain (e.g. z outside [0, L]).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// BiphotonState
// ---------------------------------------------------------------------------

enum class Basis { Waveguide, Eigenmode };

// Two-photon probability amplitudes amp(l, m) for signal in slot l and idler
// in slot m. In the waveguide basis the slots are waveguides {1, 2} (indexed
// 0, 1 here); in the eigenmode basis they are the even (k = 0) and odd
// (k = pi) supermodes, in that order.
struct BiphotonState {
  std::array<complexd, 4> amp{};
  Basis basis = Basis::Waveguide;

  static constexpr int index(int l, int m) { return 2 * l + m; }

  complexd& operator()(int l, int m) { return amp[index(l, m)]; }
  const complexd& operator()(int l, int m) const { return amp[index(l, m)]; }

  // Sum of |amp|^2 over all four slots.
  double norm_squared() const {
    double s = 0.0;
    for (const auto& a : amp) s += std::norm(a);
    return s;
  }
};

double norm(const BiphotonState& state);

// Changes basis per the two-mode discrete transform; unitary convention with
// a 1/2 prefactor on the two-photon transform so norms are basis-independent.
BiphotonState eigenmode_to_waveguide(const BiphotonState& state);
BiphotonState waveguide_to_eigenmode(const BiphotonState& state);

// Scales the state to unit norm; relative phases unchanged.
// Throws DegenerateStateError on zero-norm input.
BiphotonState normalize(const BiphotonState& state);

// ---------------------------------------------------------------------------
// CouplerConfig
// ---------------------------------------------------------------------------

// Physical parameters of the pumped nonlinear directional coupler.
// The dimensionless products L*c and delta_beta/c are the canonical internal
// parameters; all fields are SI.
struct CouplerConfig {
  double coupling = 33.0;       // c, signal/idler coupling constant (1/m)
  double length = 0.0475;       // L, sample length (m)
  double gamma = 1.0;           // pair-generation probability amplitude
  double pump_amplitude_1 = 1.0;  // A1
  double pump_amplitude_2 = 1.0;  // A2 (phase carried by delta_phi)
  double delta_phi = 0.0;         // pump phase difference (rad)
  double delta_beta0 = 0.0;       // degenerate phase mismatch (1/m)

  double lc() const { return length * coupling; }
  double delta_beta_over_c() const { return delta_beta0 / coupling; }

  // A2 * exp(i delta_phi), the complex pump amplitude in waveguide 2.
  complexd pump2() const {
    return pump_amplitude_2 * complexd{std::cos(delta_phi), std::sin(delta_phi)};
  }

  // Natural magnitude of generated amplitudes, gamma*(A1+A2)*L; used as the
  // reference scale when deciding whether a state is identically zero.
  double generation_scale() const {
    return gamma * (pump_amplitude_1 + pump_amplitude_2) * length;
  }

  // Throws ConfigError with a field-level message on invalid values.
  void validate() const;
};

// ---------------------------------------------------------------------------
// DensityMatrix
// ---------------------------------------------------------------------------

// 4x4 complex matrix over the ordered two-qubit spatial basis
// {11, 12, 21, 22}. Physical instances are Hermitian, trace-1, PSD.
struct DensityMatrix {
  std::array<complexd, 16> m{};

  complexd& operator()(int i, int j) { return m[4 * i + j]; }
  const complexd& operator()(int i, int j) const { return m[4 * i + j]; }

  double trace() const {
    return m[0].real() + m[5].real() + m[10].real() + m[15].real();
  }

  // Largest |rho_ij - conj(rho_ji)| over all entries.
  double hermiticity_defect() const;

  // Replaces rho by (rho + rho^dagger)/2.
  void hermitize();

  // Tr(rho^2); equals sum |rho_ij|^2 for Hermitian inputs.
  double purity() const;

  static DensityMatrix identity_mix();  // I/4
};

// rho = |psi><psi| for a normalized waveguide-basis state.
// Throws BasisError / NormalizationError.
DensityMatrix pure_density_matrix(const BiphotonState& state);

// Basis labels used in CSV output, in matrix order.
inline constexpr std::array<const char*, 4> kBasisLabels = {"11", "12", "21",
                                                            "22"};

}  // namespace qdc
