// Dense Hermitian eigensolver for the 4x4 matrices used throughout
// (density matrices and the concurrence construction). Cyclic complex
// Jacobi rotations; deterministic, no external dependencies.
#pragma once

#include <array>
#include <complex>

#include "qdc/types.hpp"

namespace qdc {

struct HermitianEig4 {
  std::array<double, 4> values{};      // ascending
  std::array<complexd, 16> vectors{};  // column j is the eigenvector of values[j]
};

// Diagonalizes a Hermitian 4x4 matrix. The strict lower triangle is taken
// from the conjugate of the upper one, so slightly non-Hermitian inputs from
// quadrature roundoff are tolerated. Eigenvalues are accurate to ~1e-14
// relative to the matrix scale for well-conditioned inputs.
HermitianEig4 hermitian_eig4(const std::array<complexd, 16>& matrix);

inline HermitianEig4 hermitian_eig4(const DensityMatrix& rho) {
  return hermitian_eig4(rho.m);
}

// Smallest eigenvalue; the cheap physicality probe used by PSD checks.
double min_eigenvalue(const DensityMatrix& rho);

// V f(D) V^dagger for a spectral function applied to a Hermitian matrix.
std::array<complexd, 16> apply_spectral(const HermitianEig4& eig,
                                        double (*f)(double));

// Principal square root of a PSD matrix (negative eigenvalues clamped to 0).
std::array<complexd, 16> psd_sqrt(const std::array<complexd, 16>& matrix);

// Matrix product helpers shared by metrics/tomography.
std::array<complexd, 16> matmul4(const std::array<complexd, 16>& a,
                                 const std::array<complexd, 16>& b);

}  // namespace qdc
