#include <string>

#include "kernels_impl.hpp"

namespace qdc::kernels {

const Kernel& scalar_kernel() {
  static const Kernel k{"scalar", &detail::integrate_batch_scalar};
  return k;
}

const Kernel* avx2_kernel() {
#if defined(QDC_BUILD_AVX2)
  static const bool supported =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  if (supported) {
    static const Kernel k{"avx2", &detail::integrate_batch_avx2};
    return &k;
  }
#endif
  return nullptr;
}

const Kernel& select_kernel(std::string_view name) {
  if (name == "auto" || name.empty()) {
    if (const Kernel* simd = avx2_kernel()) return *simd;
    return scalar_kernel();
  }
  if (name == "scalar") return scalar_kernel();
  if (name == "avx2") {
    if (const Kernel* simd = avx2_kernel()) return *simd;
    throw ConfigError("kernel 'avx2' is not available on this CPU/build");
  }
  throw ConfigError("unknown kernel '" + std::string(name) +
                    "' (expected auto, scalar, or avx2)");
}

std::vector<const Kernel*> available_kernels() {
  std::vector<const Kernel*> list{&scalar_kernel()};
  if (const Kernel* simd = avx2_kernel()) list.push_back(simd);
  return list;
}

}  // namespace qdc::kernels
