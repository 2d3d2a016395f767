// Internal declarations shared by the kernel translation units.
#pragma once

#include "qdc/kernels.hpp"

namespace qdc::kernels::detail {

void integrate_batch_scalar(const CoupledModeProblem& problem,
                            std::span<const double> kappa, int steps,
                            std::span<BiphotonAmplitudes> out);

#if defined(QDC_BUILD_AVX2)
void integrate_batch_avx2(const CoupledModeProblem& problem,
                          std::span<const double> kappa, int steps,
                          std::span<BiphotonAmplitudes> out);
#endif

}  // namespace qdc::kernels::detail
