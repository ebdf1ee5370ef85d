// Built with -mavx2; only reached through the dispatcher after a CPU check.
#include <immintrin.h>

#include <algorithm>
#include <bit>

#include "hgpeel/kernels.hpp"

namespace hgpeel::kernels::avx2 {

namespace {

// Lanes with v < bound, for bound >= 1: min(v, bound - 1) == v.
inline __m256i lt_mask(__m256i v, __m256i bound_minus_one) {
  return _mm256_cmpeq_epi32(_mm256_min_epu32(v, bound_minus_one), v);
}

}  // namespace

std::size_t count_below(std::span<const std::uint32_t> values, std::uint32_t bound) {
  if (bound == 0) return 0;
  const __m256i bm1 = _mm256_set1_epi32(static_cast<int>(bound - 1));
  const std::uint32_t* p = values.data();
  const std::size_t n = values.size();
  std::size_t i = 0;
  // Each true lane is -1; subtracting accumulates counts. Flush before the
  // 32-bit lane counters can overflow.
  std::size_t total = 0;
  while (i + 8 <= n) {
    __m256i acc = _mm256_setzero_si256();
    const std::size_t block_end = std::min(n, i + (std::size_t{1} << 30)) & ~std::size_t{7};
    for (; i < block_end; i += 8) {
      const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
      acc = _mm256_sub_epi32(acc, lt_mask(v, bm1));
    }
    alignas(32) std::uint32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    for (std::uint32_t c : lanes) total += c;
  }
  for (; i < n; ++i) total += p[i] < bound;
  return total;
}

void collect_below(std::span<const std::uint32_t> values, std::uint32_t bound,
                   std::vector<std::uint32_t>& out) {
  if (bound == 0) return;
  const __m256i bm1 = _mm256_set1_epi32(static_cast<int>(bound - 1));
  const std::uint32_t* p = values.data();
  const std::size_t n = values.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
    unsigned bits = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(lt_mask(v, bm1))));
    while (bits) {
      out.push_back(static_cast<std::uint32_t>(i + static_cast<unsigned>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  for (; i < n; ++i) {
    if (p[i] < bound) out.push_back(static_cast<std::uint32_t>(i));
  }
}

std::size_t count_covered(std::span<const std::uint64_t> masks, std::uint64_t subset) {
  const __m256i s = _mm256_set1_epi64x(static_cast<long long>(subset));
  const __m256i zero = _mm256_setzero_si256();
  const std::uint64_t* p = masks.data();
  const std::size_t n = masks.size();
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
    const __m256i outside = _mm256_andnot_si256(s, m);
    const int bits = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(outside, zero)));
    total += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(bits)));
  }
  for (; i < n; ++i) total += (p[i] & ~subset) == 0;
  return total;
}

}  // namespace hgpeel::kernels::avx2
