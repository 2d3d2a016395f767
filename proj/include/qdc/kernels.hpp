// Batched inner-loop kernels for the coupled-mode integration. One scalar
// reference implementation plus SIMD variants selected at runtime; all
// variants integrate a batch of lanes that share the device parameters and
// differ only in a constant mismatch offset per lane (the frequency- or
// sweep-dependent part). Equivalence between variants is covered by tests.
#pragma once

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include "qdc/types.hpp"

namespace qdc::kernels {

// Inputs of the inner integration loop, decoupled from the rest of the
// library. The position-dependent mismatch polynomial is shared by all
// lanes; its phase integral is evaluated in closed form.
struct CoupledModeProblem {
  double coupling = 0.0;  // c (1/m)
  double length = 0.0;    // L (m)
  double gamma = 0.0;
  double pump1 = 0.0;     // A1
  complexd pump2{};       // A2 e^{i delta_phi}
  // delta_beta(z)/c = sum_j poly[j] (z/L)^j; empty means homogeneous.
  std::span<const double> profile_poly{};
};

struct BiphotonAmplitudes {
  complexd psi11{}, psi22{}, psi12{};  // psi21 == psi12 by exchange symmetry
};

// Fixed-step classical RK4 from z = 0 (vacuum input) to z = L. Lane i sees
// total mismatch kappa[i] + delta_beta(z). Unnormalized amplitudes at z = L.
using IntegrateBatchFn = void (*)(const CoupledModeProblem& problem,
                                  std::span<const double> kappa, int steps,
                                  std::span<BiphotonAmplitudes> out);

struct Kernel {
  const char* name;
  IntegrateBatchFn integrate_batch;
};

const Kernel& scalar_kernel();

// nullptr when this build or this CPU lacks AVX2+FMA.
const Kernel* avx2_kernel();

// "auto" prefers the widest available variant; explicit names select one and
// throw ConfigError when it is unavailable.
const Kernel& select_kernel(std::string_view name = "auto");

std::vector<const Kernel*> available_kernels();

// Phi(z) = integral_0^z delta_beta(z') dz' for the polynomial profile.
double profile_phase_integral(std::span<const double> poly, double coupling,
                              double length, double z);

// delta_beta(z) itself, in 1/m.
double profile_value(std::span<const double> poly, double coupling,
                     double length, double z);

}  // namespace qdc::kernels
