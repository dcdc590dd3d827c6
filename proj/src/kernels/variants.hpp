#pragma once

#include "subdens/kernels.hpp"

namespace subdens::kernels::detail {

#if defined(SUBDENS_HAVE_AVX2)
const KernelSet& avx2_kernels();
#endif

#if defined(SUBDENS_HAVE_NEON)
const KernelSet& neon_kernels();
#endif

}  // namespace subdens::kernels::detail
