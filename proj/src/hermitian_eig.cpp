#include "qdc/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>

namespace qdc {

namespace {

constexpr int kN = 4;

inline complexd& at(std::array<complexd, 16>& a, int i, int j) {
  return a[kN * i + j];
}
inline const complexd& at(const std::array<complexd, 16>& a, int i, int j) {
  return a[kN * i + j];
}

double off_diagonal_sq(const std::array<complexd, 16>& a) {
  double s = 0.0;
  for (int i = 0; i < kN; ++i) {
    for (int j = 0; j < kN; ++j) {
      if (i != j) s += std::norm(at(a, i, j));
    }
  }
  return s;
}

}  // namespace

HermitianEig4 hermitian_eig4(const std::array<complexd, 16>& matrix) {
  // Work on the Hermitian average so tiny asymmetries cannot bias rotations.
  std::array<complexd, 16> a;
  for (int i = 0; i < kN; ++i) {
    for (int j = 0; j < kN; ++j) {
      at(a, i, j) = 0.5 * (at(matrix, i, j) + std::conj(at(matrix, j, i)));
    }
  }

  std::array<complexd, 16> v{};  // accumulated rotations
  for (int i = 0; i < kN; ++i) at(v, i, i) = 1.0;

  double scale_sq = 0.0;
  for (const auto& x : a) scale_sq += std::norm(x);
  const double stop = 1e-30 * std::max(scale_sq, 1e-300);

  for (int sweep = 0; sweep < 64 && off_diagonal_sq(a) > stop; ++sweep) {
    for (int p = 0; p < kN - 1; ++p) {
      for (int q = p + 1; q < kN; ++q) {
        const complexd apq = at(a, p, q);
        const double b = std::abs(apq);
        if (b == 0.0) continue;
        const double app = at(a, p, p).real();
        const double aqq = at(a, q, q).real();
        // Rotation annihilating a_pq: theta from tan(2 theta) = 2|a_pq|/(a_pp - a_qq),
        // phase alpha = arg(a_pq). R_pp = c, R_pq = -s e^{i alpha},
        // R_qp = s e^{-i alpha}, R_qq = c; A <- R^dagger A R.
        const double theta = 0.5 * std::atan2(2.0 * b, app - aqq);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        const complexd eia = apq / b;
        const complexd se = s * eia;

        for (int k = 0; k < kN; ++k) {
          // Column update: A <- A R.
          const complexd akp = at(a, k, p);
          const complexd akq = at(a, k, q);
          at(a, k, p) = c * akp + std::conj(se) * akq;
          at(a, k, q) = -se * akp + c * akq;
        }
        for (int k = 0; k < kN; ++k) {
          // Row update: A <- R^dagger A.
          const complexd apk = at(a, p, k);
          const complexd aqk = at(a, q, k);
          at(a, p, k) = c * apk + se * aqk;
          at(a, q, k) = -std::conj(se) * apk + c * aqk;
        }
        for (int k = 0; k < kN; ++k) {
          const complexd vkp = at(v, k, p);
          const complexd vkq = at(v, k, q);
          at(v, k, p) = c * vkp + std::conj(se) * vkq;
          at(v, k, q) = -se * vkp + c * vkq;
        }
      }
    }
  }

  HermitianEig4 out;
  std::array<int, 4> order = {0, 1, 2, 3};
  std::array<double, 4> diag;
  for (int i = 0; i < kN; ++i) diag[i] = at(a, i, i).real();
  std::sort(order.begin(), order.end(),
            [&diag](int lhs, int rhs) { return diag[lhs] < diag[rhs]; });
  for (int j = 0; j < kN; ++j) {
    out.values[j] = diag[order[j]];
    for (int i = 0; i < kN; ++i) {
      at(out.vectors, i, j) = at(v, i, order[j]);
    }
  }
  return out;
}

double min_eigenvalue(const DensityMatrix& rho) {
  return hermitian_eig4(rho.m).values[0];
}

std::array<complexd, 16> apply_spectral(const HermitianEig4& eig,
                                        double (*f)(double)) {
  std::array<complexd, 16> out{};
  for (int j = 0; j < kN; ++j) {
    const double fj = f(eig.values[j]);
    if (fj == 0.0) continue;
    for (int i = 0; i < kN; ++i) {
      for (int k = 0; k < kN; ++k) {
        out[kN * i + k] +=
            fj * at(eig.vectors, i, j) * std::conj(at(eig.vectors, k, j));
      }
    }
  }
  return out;
}

std::array<complexd, 16> psd_sqrt(const std::array<complexd, 16>& matrix) {
  const HermitianEig4 eig = hermitian_eig4(matrix);
  return apply_spectral(
      eig, +[](double x) { return x > 0.0 ? std::sqrt(x) : 0.0; });
}

std::array<complexd, 16> matmul4(const std::array<complexd, 16>& a,
                                 const std::array<complexd, 16>& b) {
  std::array<complexd, 16> out{};
  for (int i = 0; i < kN; ++i) {
    for (int k = 0; k < kN; ++k) {
      const complexd aik = at(a, i, k);
      if (aik == complexd{}) continue;
      for (int j = 0; j < kN; ++j) {
        out[kN * i + j] += aik * at(b, k, j);
      }
    }
  }
  return out;
}

}  // namespace qdc
