// AVX2+FMA kernel: four mismatch lanes per pass, SoA complex arithmetic.
// The per-lane source phase exp(i kappa z) is advanced by a half-step phasor
// recurrence and refreshed from sin/cos every kRefresh steps to kill drift;
// the lane-shared inhomogeneity phase exp(i Phi(z)) is computed scalar per
// step and broadcast. Compiled only when -mavx2 -mfma are accepted and
// dispatched at runtime (see registry.cpp).
#include <immintrin.h>

#include <array>
#include <cmath>

#include "kernels_impl.hpp"

namespace qdc::kernels::detail {

namespace {

constexpr int kLanes = 4;
constexpr int kRefresh = 256;  // steps between exact phasor refreshes

struct VComplex {
  __m256d re, im;
};

inline VComplex vc_zero() { return {_mm256_setzero_pd(), _mm256_setzero_pd()}; }

inline VComplex vc_mul(const VComplex& x, const VComplex& y) {
  // (x.re y.re - x.im y.im) + i (x.re y.im + x.im y.re)
  return {_mm256_fmsub_pd(x.re, y.re, _mm256_mul_pd(x.im, y.im)),
          _mm256_fmadd_pd(x.re, y.im, _mm256_mul_pd(x.im, y.re))};
}

inline VComplex vc_add(const VComplex& x, const VComplex& y) {
  return {_mm256_add_pd(x.re, y.re), _mm256_add_pd(x.im, y.im)};
}

// x + s*y for a broadcast real scalar s.
inline VComplex vc_axpy(double s, const VComplex& y, const VComplex& x) {
  const __m256d vs = _mm256_set1_pd(s);
  return {_mm256_fmadd_pd(vs, y.re, x.re), _mm256_fmadd_pd(vs, y.im, x.im)};
}

// i * s * x for a broadcast real scalar s: (-s x.im) + i (s x.re).
inline VComplex vc_imul(double s, const VComplex& x) {
  const __m256d vs = _mm256_set1_pd(s);
  return {_mm256_mul_pd(_mm256_set1_pd(-s), x.im), _mm256_mul_pd(vs, x.re)};
}

// Broadcast complex scalar times vector complex.
inline VComplex vc_scale(const complexd& s, const VComplex& x) {
  const __m256d sr = _mm256_set1_pd(s.real());
  const __m256d si = _mm256_set1_pd(s.imag());
  return {_mm256_fmsub_pd(sr, x.re, _mm256_mul_pd(si, x.im)),
          _mm256_fmadd_pd(sr, x.im, _mm256_mul_pd(si, x.re))};
}

struct StageV {
  VComplex a, b, u;
};

}  // namespace

void integrate_batch_avx2(const CoupledModeProblem& p,
                          std::span<const double> kappa, int steps,
                          std::span<BiphotonAmplitudes> out) {
  const double h = p.length / steps;
  const double c = p.coupling;
  const double g1 = p.gamma * p.pump1;
  const complexd g2 = p.gamma * p.pump2;
  const bool homogeneous = p.profile_poly.empty();

  const std::size_t n = kappa.size();
  for (std::size_t base = 0; base < n; base += kLanes) {
    // Tail lanes are padded with the last kappa; their outputs are discarded.
    alignas(32) std::array<double, kLanes> lane_kappa;
    for (int j = 0; j < kLanes; ++j) {
      const std::size_t idx = base + static_cast<std::size_t>(j);
      lane_kappa[static_cast<std::size_t>(j)] = kappa[idx < n ? idx : n - 1];
    }

    // Half-step rotator W = exp(i kappa h/2) per lane.
    alignas(32) std::array<double, kLanes> wr, wi;
    for (int j = 0; j < kLanes; ++j) {
      const double ang = lane_kappa[static_cast<std::size_t>(j)] * 0.5 * h;
      wr[static_cast<std::size_t>(j)] = std::cos(ang);
      wi[static_cast<std::size_t>(j)] = std::sin(ang);
    }
    const VComplex w{_mm256_load_pd(wr.data()), _mm256_load_pd(wi.data())};

    auto refresh_rotator = [&](double z) {
      alignas(32) std::array<double, kLanes> rr, ri;
      for (int j = 0; j < kLanes; ++j) {
        const double ang = lane_kappa[static_cast<std::size_t>(j)] * z;
        rr[static_cast<std::size_t>(j)] = std::cos(ang);
        ri[static_cast<std::size_t>(j)] = std::sin(ang);
      }
      return VComplex{_mm256_load_pd(rr.data()), _mm256_load_pd(ri.data())};
    };

    auto shared_phasor = [&](double z) {
      const double phi = profile_phase_integral(p.profile_poly, c, p.length, z);
      return complexd{std::cos(phi), std::sin(phi)};
    };

    auto f = [&](const VComplex& a, const VComplex& b, const VComplex& u,
                 const VComplex& e) {
      StageV k;
      k.a = vc_add(vc_imul(2.0 * c, u), vc_scale(complexd{g1, 0.0}, e));
      k.b = vc_add(vc_imul(2.0 * c, u), vc_scale(g2, e));
      k.u = vc_imul(c, vc_add(a, b));
      return k;
    };

    VComplex a = vc_zero(), b = vc_zero(), u = vc_zero();
    VComplex rot = refresh_rotator(0.0);

    for (int step = 0; step < steps; ++step) {
      if (step != 0 && step % kRefresh == 0) {
        rot = refresh_rotator(step * h);
      }
      const double z0 = step * h;

      VComplex e0 = rot;
      const VComplex rot_mid = vc_mul(rot, w);
      VComplex em = rot_mid;
      rot = vc_mul(rot_mid, w);
      VComplex e1 = rot;
      if (!homogeneous) {
        e0 = vc_scale(shared_phasor(z0), e0);
        em = vc_scale(shared_phasor(z0 + 0.5 * h), em);
        e1 = vc_scale(shared_phasor(z0 + h), e1);
      }

      const StageV k1 = f(a, b, u, e0);
      const StageV k2 = f(vc_axpy(0.5 * h, k1.a, a), vc_axpy(0.5 * h, k1.b, b),
                          vc_axpy(0.5 * h, k1.u, u), em);
      const StageV k3 = f(vc_axpy(0.5 * h, k2.a, a), vc_axpy(0.5 * h, k2.b, b),
                          vc_axpy(0.5 * h, k2.u, u), em);
      const StageV k4 = f(vc_axpy(h, k3.a, a), vc_axpy(h, k3.b, b),
                          vc_axpy(h, k3.u, u), e1);

      const double w6 = h / 6.0;
      auto combine = [w6](VComplex y, const VComplex& s1, const VComplex& s2,
                          const VComplex& s3, const VComplex& s4) {
        VComplex acc = vc_add(s1, s4);
        acc = vc_axpy(2.0, s2, acc);
        acc = vc_axpy(2.0, s3, acc);
        return vc_axpy(w6, acc, y);
      };
      a = combine(a, k1.a, k2.a, k3.a, k4.a);
      b = combine(b, k1.b, k2.b, k3.b, k4.b);
      u = combine(u, k1.u, k2.u, k3.u, k4.u);
    }

    alignas(32) std::array<double, kLanes> ar, ai, br, bi, ur, ui;
    _mm256_store_pd(ar.data(), a.re);
    _mm256_store_pd(ai.data(), a.im);
    _mm256_store_pd(br.data(), b.re);
    _mm256_store_pd(bi.data(), b.im);
    _mm256_store_pd(ur.data(), u.re);
    _mm256_store_pd(ui.data(), u.im);
    for (int j = 0; j < kLanes && base + static_cast<std::size_t>(j) < n; ++j) {
      const auto js = static_cast<std::size_t>(j);
      out[base + js] = {complexd{ar[js], ai[js]}, complexd{br[js], bi[js]},
                        complexd{ur[js], ui[js]}};
    }
  }
}

}  // namespace qdc::kernels::detail
