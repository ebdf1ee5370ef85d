#pragma once

// Data-parallel inner loops shared by the peeler and the density oracle.
//
// Every kernel has a scalar reference implementation; vector variants must
// produce identical results (same counts, same indices in the same order).
// The active variant is picked once at startup from the CPU features and can
// be pinned with the HGPEEL_ISA environment variable (scalar|avx2|neon).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hgpeel::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

const char* isa_name(Isa isa) noexcept;
bool isa_available(Isa isa) noexcept;
Isa active_isa() noexcept;
// Throws std::invalid_argument if the ISA is not available on this machine.
void set_isa(Isa isa);

// Number of i with values[i] < bound.
std::size_t count_below(std::span<const std::uint32_t> values, std::uint32_t bound);

// Appends every i with values[i] < bound to out, in increasing order.
void collect_below(std::span<const std::uint32_t> values, std::uint32_t bound,
                   std::vector<std::uint32_t>& out);

// Number of masks m with (m & ~subset) == 0, i.e. edges lying inside subset.
std::size_t count_covered(std::span<const std::uint64_t> masks, std::uint64_t subset);

#define HGPEEL_KERNEL_DECLS                                                              \
  std::size_t count_below(std::span<const std::uint32_t> values, std::uint32_t bound);   \
  void collect_below(std::span<const std::uint32_t> values, std::uint32_t bound,         \
                     std::vector<std::uint32_t>& out);                                   \
  std::size_t count_covered(std::span<const std::uint64_t> masks, std::uint64_t subset);

namespace scalar {
HGPEEL_KERNEL_DECLS
}

#if defined(__x86_64__) || defined(_M_X64)
#define HGPEEL_HAVE_AVX2_KERNELS 1
namespace avx2 {
HGPEEL_KERNEL_DECLS
}
#endif

#if defined(__aarch64__)
#define HGPEEL_HAVE_NEON_KERNELS 1
namespace neon {
HGPEEL_KERNEL_DECLS
}
#endif

#undef HGPEEL_KERNEL_DECLS

}  // namespace hgpeel::kernels
