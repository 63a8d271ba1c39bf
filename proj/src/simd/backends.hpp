#pragma once

#include "jwalk/simd/kernels.hpp"

namespace jwalk::simd::detail {

// Each returns nullptr when the variant was not compiled for this target.
const KernelTable* avx2_table() noexcept;
const KernelTable* neon_table() noexcept;

}  // namespace jwalk::simd::detail
