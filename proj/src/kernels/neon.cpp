#include "hgpeel/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

#include <algorithm>

namespace hgpeel::kernels::neon {

std::size_t count_below(std::span<const std::uint32_t> values, std::uint32_t bound) {
  const uint32x4_t b = vdupq_n_u32(bound);
  const std::uint32_t* p = values.data();
  const std::size_t n = values.size();
  std::size_t total = 0;
  std::size_t i = 0;
  while (i + 4 <= n) {
    uint32x4_t acc = vdupq_n_u32(0);
    const std::size_t block_end = std::min(n, i + (std::size_t{1} << 30)) & ~std::size_t{3};
    for (; i < block_end; i += 4) {
      // True lanes are all-ones; shift down to 1 and accumulate.
      acc = vaddq_u32(acc, vshrq_n_u32(vcltq_u32(vld1q_u32(p + i), b), 31));
    }
    total += vaddvq_u32(acc);
  }
  for (; i < n; ++i) total += p[i] < bound;
  return total;
}

void collect_below(std::span<const std::uint32_t> values, std::uint32_t bound,
                   std::vector<std::uint32_t>& out) {
  const uint32x4_t b = vdupq_n_u32(bound);
  const std::uint32_t* p = values.data();
  const std::size_t n = values.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const uint32x4_t lt = vcltq_u32(vld1q_u32(p + i), b);
    if (vmaxvq_u32(lt) == 0) continue;
    if (vgetq_lane_u32(lt, 0)) out.push_back(static_cast<std::uint32_t>(i));
    if (vgetq_lane_u32(lt, 1)) out.push_back(static_cast<std::uint32_t>(i + 1));
    if (vgetq_lane_u32(lt, 2)) out.push_back(static_cast<std::uint32_t>(i + 2));
    if (vgetq_lane_u32(lt, 3)) out.push_back(static_cast<std::uint32_t>(i + 3));
  }
  for (; i < n; ++i) {
    if (p[i] < bound) out.push_back(static_cast<std::uint32_t>(i));
  }
}

std::size_t count_covered(std::span<const std::uint64_t> masks, std::uint64_t subset) {
  const uint64x2_t s = vdupq_n_u64(subset);
  const std::uint64_t* p = masks.data();
  const std::size_t n = masks.size();
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const uint64x2_t inside = vceqzq_u64(vbicq_u64(vld1q_u64(p + i), s));
    total += (vgetq_lane_u64(inside, 0) & 1) + (vgetq_lane_u64(inside, 1) & 1);
  }
  for (; i < n; ++i) total += (p[i] & ~subset) == 0;
  return total;
}

}  // namespace hgpeel::kernels::neon

#endif
