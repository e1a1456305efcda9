#pragma once

#include "riemwave/kernels.hpp"

namespace riemwave::kernels::detail {

#if defined(RIEMWAVE_HAVE_AVX2)
const KernelTable& avx2_table() noexcept;
#endif
#if defined(RIEMWAVE_HAVE_NEON)
const KernelTable& neon_table() noexcept;
#endif

}  // namespace riemwave::kernels::detail
